"""Morse functions on graphs, exit sets and the Poincaré–Hopf index.

A Morse function is stored as a total order: ``rank[v]`` is the position of
``v`` when vertices are sorted by value. Every quantity here depends only on
the sign of ``f(w) - f(v)`` along edges, so nothing is lost.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import Graph, iter_bits, mask_census, mask_euler


class MorseError(ValueError):
    """Values that are not injective on some unit ball, or otherwise invalid."""

    def __init__(self, message: str, violations: Sequence[tuple[int, int]] = ()):
        super().__init__(message)
        self.violations = list(violations)


@dataclass(frozen=True)
class MorseFunction:
    rank: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.rank) != list(range(len(self.rank))):
            raise MorseError(f"ranks {self.rank!r} are not a permutation of 0..{len(self.rank) - 1}")

    @property
    def order(self) -> tuple[int, ...]:
        """Vertices listed from lowest to highest value."""
        out = [0] * len(self.rank)
        for v, r in enumerate(self.rank):
            out[r] = v
        return tuple(out)

    def negated(self) -> MorseFunction:
        n = len(self.rank)
        return MorseFunction(tuple(n - 1 - r for r in self.rank))

    def __len__(self) -> int:
        return len(self.rank)


@dataclass(frozen=True)
class SphereSplit:
    vertex: int
    minus: frozenset[int]
    plus: frozenset[int]
    mixed_counts: tuple[int, ...]
    minus_counts: tuple[int, ...]
    plus_counts: tuple[int, ...]
    sphere_counts: tuple[int, ...]


@dataclass(frozen=True)
class IndexReport:
    indices: tuple[int, ...]
    plus_indices: tuple[int, ...]
    critical: tuple[bool, ...]
    index_sum: int

    @property
    def symmetric(self) -> tuple[Fraction, ...]:
        """``j(v) = (i+(v) + i-(v)) / 2``."""
        return tuple(Fraction(a + b, 2) for a, b in zip(self.indices, self.plus_indices))

    @property
    def critical_points(self) -> list[int]:
        return [v for v, c in enumerate(self.critical) if c]


def _check_values(G: Graph, values: Sequence) -> None:
    if len(values) != G.order:
        raise MorseError(f"expected {G.order} values, got {len(values)}")
    for v, x in enumerate(values):
        if x is None:
            raise MorseError(f"missing value for vertex {v}")


def validate_morse(G: Graph, values: Sequence) -> list[tuple[int, int]]:
    """Pairs ``(u, w)``, ``u < w``, at distance <= 2 with equal values.

    An empty list means ``values`` is a Morse function on ``G``.
    """
    _check_values(G, values)
    bad = set()
    for p in range(G.order):
        seen: dict = {}
        for u in sorted((p, *G.adjacency[p])):
            x = values[u]
            if x in seen:
                for w in seen[x]:
                    bad.add((min(u, w), max(u, w)))
                seen[x].append(u)
            else:
                seen[x] = [u]
    return sorted(bad)


def as_morse(G: Graph, values) -> MorseFunction:
    """Canonicalise ``values`` (a sequence or a MorseFunction) to ranks.

    Ties between vertices further than distance 2 apart are legal and are
    broken by vertex id.
    """
    if isinstance(values, MorseFunction):
        if len(values) != G.order:
            raise MorseError(f"Morse function has {len(values)} vertices, graph has {G.order}")
        return values
    bad = validate_morse(G, values)
    if bad:
        raise MorseError(f"not injective on unit balls; equal values at {bad}", bad)
    order = sorted(range(G.order), key=lambda v: (values[v], v))
    rank = [0] * G.order
    for r, v in enumerate(order):
        rank[v] = r
    return MorseFunction(tuple(rank))


def morse_from_order(perm: Sequence[int]) -> MorseFunction:
    """``f(perm[k]) = k``."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise MorseError(f"{list(perm)!r} is not a permutation of 0..{n - 1}")
    rank = [0] * n
    for k, v in enumerate(perm):
        rank[v] = k
    return MorseFunction(tuple(rank))


def random_morse(G: Graph, seed) -> MorseFunction:
    perm = list(range(G.order))
    random.Random(seed).shuffle(perm)
    return morse_from_order(perm)


def lower_masks(G: Graph, f: MorseFunction) -> list[int]:
    """Bitmask of ``S-(v)`` for every vertex."""
    below = [0] * G.order
    acc = 0
    for v in f.order:
        below[v] = acc
        acc |= 1 << v
    return [G.masks[v] & below[v] for v in range(G.order)]


def sphere_split(G: Graph, f, v: int) -> SphereSplit:
    """Split ``S(v)`` into exit set, entry set and count cliques of each kind.

    One enumeration of the cliques of ``S(v)`` classifies each as lying in
    ``S-(v)``, in ``S+(v)``, or mixed.
    """
    f = as_morse(G, f)
    r = f.rank[v]
    sphere = G.masks[v]
    minus = 0
    for w in iter_bits(sphere):
        if f.rank[w] < r:
            minus |= 1 << w
    plus = sphere & ~minus
    masks = G.masks
    sph: list[int] = []
    lo: list[int] = []
    hi: list[int] = []
    mixed: list[int] = []
    stack = [(sphere, 0, 0)] if sphere else []
    while stack:
        cand, clique, depth = stack.pop()
        if depth == len(sph):
            for a in (sph, lo, hi, mixed):
                a.append(0)
        while cand:
            low = cand & -cand
            cand ^= low
            c = clique | low
            sph[depth] += 1
            if c & plus == 0:
                lo[depth] += 1
            elif c & minus == 0:
                hi[depth] += 1
            else:
                mixed[depth] += 1
            nxt = masks[low.bit_length() - 1] & cand
            if nxt:
                stack.append((nxt, c, depth + 1))
    return SphereSplit(
        vertex=v,
        minus=frozenset(iter_bits(minus)),
        plus=frozenset(iter_bits(plus)),
        mixed_counts=tuple(mixed),
        minus_counts=tuple(lo),
        plus_counts=tuple(hi),
        sphere_counts=tuple(sph),
    )


def index(G: Graph, f, v: int) -> int:
    f = as_morse(G, f)
    r = f.rank[v]
    minus = 0
    for w in iter_bits(G.masks[v]):
        if f.rank[w] < r:
            minus |= 1 << w
    return 1 - mask_euler(G.masks, minus)


def is_critical(G: Graph, f, v: int) -> bool:
    return index(G, f, v) != 0


def index_report(G: Graph, f) -> IndexReport:
    f = as_morse(G, f)
    lows = lower_masks(G, f)
    masks = G.masks
    minus = tuple(1 - mask_euler(masks, lows[v]) for v in range(G.order))
    plus = tuple(1 - mask_euler(masks, masks[v] & ~lows[v]) for v in range(G.order))
    return IndexReport(
        indices=minus,
        plus_indices=plus,
        critical=tuple(i != 0 for i in minus),
        index_sum=sum(minus),
    )


def count_Vk(G: Graph, v: int, k: int) -> int:
    """Number of ``K_{k+1}`` subgraphs of ``S(v)``; ``V_{-1}(v) = 1``."""
    if k == -1:
        return 1
    counts = mask_census(G.masks, G.masks[v])
    return counts[k] if 0 <= k < len(counts) else 0


def transfer_sums(G: Graph) -> tuple[list[int], list[int]]:
    """``(sum_v V_k(v), v_{k+1})`` for ``k = 0 .. dim-1``."""
    census = mask_census(G.masks, G.full_mask)
    dim = len(census) - 1
    lhs = [0] * max(dim, 0)
    for v in range(G.order):
        for k, c in enumerate(mask_census(G.masks, G.masks[v])):
            lhs[k] += c
    return lhs, census[1:]


def verify_transfer(G: Graph) -> bool:
    lhs, higher = transfer_sums(G)
    return len(lhs) == len(higher) and all(
        s == (k + 2) * c for k, (s, c) in enumerate(zip(lhs, higher))
    )


def intermediate_sums(G: Graph, f) -> tuple[list[int], list[int]]:
    """``(sum_v W_k(v), v_{k+1})`` for ``k = 0 .. dim-1``."""
    f = as_morse(G, f)
    census = mask_census(G.masks, G.full_mask)
    dim = len(census) - 1
    lhs = [0] * max(dim, 0)
    for v in range(G.order):
        for k, w in enumerate(sphere_split(G, f, v).mixed_counts):
            lhs[k] += w
    return lhs, census[1:]


def verify_intermediate(G: Graph, f) -> bool:
    lhs, higher = intermediate_sums(G, f)
    return len(lhs) == len(higher) and all(s == k * c for k, (s, c) in enumerate(zip(lhs, higher)))
