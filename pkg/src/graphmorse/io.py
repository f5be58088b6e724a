"""Text formats: DIMACS-style graph files, Morse value files and CSV reports.

Ids are 1-based on the wire and 0-based in memory.

Graph file::

    c optional comment
    p edge <n> <m>
    e <u> <v>

Morse file::

    c optional comment
    f <vertex> <value>
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .graph import Graph, GraphError, build_graph


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        yield lineno, line


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def parse_graph_with_comments(text: str) -> tuple[Graph, list[str]]:
    comments: list[str] = []
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, line in _data_lines(text):
        tag, _, rest = line.partition(" ")
        if tag == "c":
            comments.append(rest)
            continue
        if tag == "p":
            if header is not None:
                raise ParseError("duplicate 'p' line", lineno)
            toks = rest.split()
            if len(toks) != 3 or toks[0] != "edge":
                raise ParseError("expected 'p edge <n> <m>'", lineno)
            header = (_int(toks[1], lineno), _int(toks[2], lineno), lineno)
            if header[0] < 0 or header[1] < 0:
                raise ParseError("negative count in 'p' line", lineno)
            continue
        if header is None:
            raise ParseError("'p edge <n> <m>' must be the first non-comment line", lineno)
        if tag != "e":
            raise ParseError(f"unknown line type {tag!r}", lineno)
        toks = rest.split()
        if len(toks) != 2:
            raise ParseError("expected 'e <u> <v>'", lineno)
        u, v = _int(toks[0], lineno), _int(toks[1], lineno)
        n = header[0]
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"edge ({u}, {v}) outside 1..{n}", lineno)
        if u == v:
            raise ParseError(f"self-loop ({u}, {v})", lineno)
        edges.append((u - 1, v - 1))
    if header is None:
        raise ParseError("missing 'p edge <n> <m>' line")
    n, m, lineno = header
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}", lineno)
    try:
        return build_graph(n, edges), comments
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def parse_graph(text: str) -> Graph:
    return parse_graph_with_comments(text)[0]


def emit_graph(G: Graph, comments: Iterable[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    edges = G.edges()
    out.append(f"p edge {G.order} {len(edges)}")
    out.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(out) + "\n"


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(path, G: Graph, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(emit_graph(G, comments))


def parse_value(tok: str) -> Fraction:
    """Exact value of a decimal or integer literal (floats never enter)."""
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a decimal or integer value: {tok!r}") from None


def parse_morse(text: str, order: int) -> list[Fraction]:
    values: dict[int, Fraction] = {}
    for lineno, line in _data_lines(text):
        toks = line.split()
        if toks[0] == "c":
            continue
        if toks[0] != "f" or len(toks) != 3:
            raise ParseError("expected 'f <vertex> <value>'", lineno)
        v = _int(toks[1], lineno)
        if not 1 <= v <= order:
            raise ParseError(f"vertex {v} outside 1..{order}", lineno)
        if v - 1 in values:
            raise ParseError(f"duplicate value for vertex {v}", lineno)
        try:
            values[v - 1] = parse_value(toks[2])
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    missing = [v + 1 for v in range(order) if v not in values]
    if missing:
        raise ParseError(f"no value for vertices {missing}")
    return [values[v] for v in range(order)]


def emit_morse(values: Sequence, comments: Iterable[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    out.extend(f"f {v + 1} {_fmt(x)}" for v, x in enumerate(values))
    return "\n".join(out) + "\n"


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        # decimal literal if exact, else fall back to the ratio's float repr
        d = x.denominator
        while d % 2 == 0:
            d //= 2
        while d % 5 == 0:
            d //= 5
        if d == 1:
            digits = 0
            y = x
            while y.denominator != 1:
                y *= 10
                digits += 1
            sign = "-" if y < 0 else ""
            s = str(abs(y.numerator)).rjust(digits + 1, "0")
            return f"{sign}{s[:-digits]}.{s[-digits:]}"
        return repr(float(x))
    return str(x)


def read_morse(path, order: int) -> list[Fraction]:
    return parse_morse(Path(path).read_text(), order)
