"""Deterministic graph families and their structural self-checks."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, build_graph, graph_from_masks, is_connected, iter_bits

# vertex 0 on top, 1..5 upper ring, 6..10 lower ring, 11 at the bottom
ICOSAHEDRON_EDGES = (
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 5), (1, 6), (1, 7), (2, 3),
    (2, 7), (2, 8), (3, 4), (3, 8), (3, 9), (4, 5), (4, 9), (4, 10), (5, 6), (5, 10),
    (6, 7), (6, 10), (6, 11), (7, 8), (7, 11), (8, 9), (8, 11), (9, 10), (9, 11), (10, 11),
)


class FamilyError(ValueError):
    pass


class SelfCheckError(AssertionError):
    def __init__(self, family: str, vertex: int | None, prop: str):
        where = f"vertex {vertex}" if vertex is not None else "graph"
        super().__init__(f"{family}: {where} violates {prop}")
        self.family = family
        self.vertex = vertex
        self.property = prop


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = ()
    p: float | None = None
    seed: int | None = None

    def describe(self) -> str:
        bits = [self.name, "params=" + ",".join(map(str, self.params))]
        if self.p is not None:
            bits.append(f"p={self.p!r}")
        if self.seed is not None:
            bits.append(f"seed={self.seed}")
        return " ".join(bits)


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """Hub 0 joined to leaves 1..n-1."""
    return build_graph(n, [(0, i) for i in range(1, n)])


def wheel(n: int) -> Graph:
    """Hub 0 joined to every vertex of the rim cycle 1..n-1."""
    rim = n - 1
    return build_graph(n, [(0, i) for i in range(1, n)] + [(1 + i, 1 + (i + 1) % rim) for i in range(rim)])


def edgeless(n: int) -> Graph:
    return build_graph(n, [])


def random_tree(n: int, seed) -> Graph:
    """Vertex i attaches to a uniformly chosen earlier vertex."""
    rng = random.Random(seed)
    return build_graph(n, [(rng.randrange(i), i) for i in range(1, n)])


def cross_polytope(d: int) -> Graph:
    """2d vertices; ``2i`` and ``2i+1`` are antipodal, all other pairs adjacent."""
    n = 2 * d
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if i // 2 != j // 2])


def octahedron() -> Graph:
    return cross_polytope(3)


def icosahedron() -> Graph:
    return build_graph(12, ICOSAHEDRON_EDGES)


def _torus_id(i: int, j: int, m: int) -> int:
    return i * m + j


def triangulated_torus(n: int, m: int) -> Graph:
    edges = []
    for i in range(n):
        for j in range(m):
            v = _torus_id(i, j, m)
            for di, dj in ((1, 0), (0, 1), (1, 1)):
                edges.append((v, _torus_id((i + di) % n, (j + dj) % m, m)))
    return build_graph(n * m, edges)


def grid_torus(n: int, m: int) -> Graph:
    """Cartesian product ``C_n x C_m``."""
    edges = []
    for i in range(n):
        for j in range(m):
            v = _torus_id(i, j, m)
            edges.append((v, _torus_id((i + 1) % n, j, m)))
            edges.append((v, _torus_id(i, (j + 1) % m, m)))
    return build_graph(n * m, edges)


def erdos_renyi(n: int, p: float, seed) -> Graph:
    """Each pair ``i < j`` drawn in lexicographic order from one RNG stream."""
    rng = random.Random(seed)
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


# name -> (arity, minimum for each int param, needs p, needs seed)
_FAMILIES = {
    "complete": (1, (1,), False, False),
    "cycle": (1, (3,), False, False),
    "path": (1, (1,), False, False),
    "star": (1, (2,), False, False),
    "wheel": (1, (4,), False, False),
    "edgeless": (1, (1,), False, False),
    "tree": (1, (1,), False, True),
    "octahedron": (0, (), False, False),
    "icosahedron": (0, (), False, False),
    "cross_polytope": (1, (1,), False, False),
    "triangulated_torus": (2, (4, 4), False, False),
    "grid_torus": (2, (3, 3), False, False),
    "erdos_renyi": (1, (0,), True, True),
}

FAMILIES = tuple(_FAMILIES)


def _validate(spec: FamilySpec) -> None:
    if spec.name not in _FAMILIES:
        raise FamilyError(f"unknown family {spec.name!r}; known: {', '.join(FAMILIES)}")
    arity, mins, needs_p, needs_seed = _FAMILIES[spec.name]
    if len(spec.params) != arity:
        raise FamilyError(f"{spec.name} takes {arity} integer parameter(s), got {spec.params!r}")
    for x, lo in zip(spec.params, mins):
        if x < lo:
            raise FamilyError(f"{spec.name} parameter {x} below minimum {lo}")
    if needs_p and (spec.p is None or not 0.0 <= spec.p <= 1.0):
        raise FamilyError(f"{spec.name} needs a probability p in [0, 1], got {spec.p!r}")
    if needs_seed and spec.seed is None:
        raise FamilyError(f"{spec.name} needs a seed")


def generate(spec: FamilySpec, check: bool = True) -> Graph:
    _validate(spec)
    a = spec.params
    name = spec.name
    if name == "tree":
        G = random_tree(a[0], spec.seed)
    elif name == "erdos_renyi":
        G = erdos_renyi(a[0], spec.p, spec.seed)
    elif name in ("octahedron", "icosahedron"):
        G = globals()[name]()
    else:
        G = globals()[name](*a)
    if check:
        self_check(G, spec)
    return G


def _sphere(G: Graph, v: int) -> tuple[Graph, list[int]]:
    return graph_from_masks(G.masks, G.masks[v])


def _is_cycle(G: Graph) -> bool:
    return G.order >= 3 and all(G.degree(v) == 2 for v in range(G.order)) and is_connected(G)


def _is_cross_polytope(G: Graph, d: int) -> bool:
    # complement must be a perfect matching
    n = G.order
    if n != 2 * d:
        return False
    full = G.full_mask
    return all(((full & ~G.masks[v] & ~(1 << v)).bit_count() == 1) for v in range(n))


def self_check(G: Graph, spec: FamilySpec) -> None:
    """Raise :class:`SelfCheckError` if ``G`` lacks the structure of ``spec``."""
    name = spec.name
    a = spec.params

    def fail(v, prop):
        raise SelfCheckError(name, v, prop)

    if name == "complete":
        for v in range(G.order):
            if G.degree(v) != G.order - 1:
                fail(v, "adjacent to all other vertices")
    elif name == "cycle":
        if not _is_cycle(G):
            fail(None, "connected and 2-regular")
    elif name in ("path", "star", "tree"):
        if G.size != G.order - 1 or not is_connected(G):
            fail(None, "acyclic and connected")
        if name == "path" and any(G.degree(v) > 2 for v in range(G.order)):
            fail(next(v for v in range(G.order) if G.degree(v) > 2), "degree <= 2")
        if name == "star" and G.degree(0) != G.order - 1:
            fail(0, "hub adjacent to all leaves")
    elif name == "wheel":
        if G.degree(0) != G.order - 1:
            fail(0, "hub adjacent to the whole rim")
        rim, _ = graph_from_masks(G.masks, G.full_mask & ~1)
        if not _is_cycle(rim):
            fail(None, "rim is a cycle")
    elif name == "edgeless":
        if G.size:
            fail(None, "no edges")
    elif name in ("cross_polytope", "octahedron"):
        d = a[0] if a else 3
        if not _is_cross_polytope(G, d):
            fail(None, f"cross polytope of dimension {d}")
        for v in range(G.order):
            S, _ = _sphere(G, v)
            if not _is_cross_polytope(S, d - 1):
                fail(v, f"unit sphere is cross_polytope({d - 1})")
    elif name == "icosahedron":
        for v in range(G.order):
            S, _ = _sphere(G, v)
            if S.order != 5 or not _is_cycle(S):
                fail(v, "unit sphere is C_5")
    elif name == "triangulated_torus":
        for v in range(G.order):
            S, _ = _sphere(G, v)
            if S.order != 6 or not _is_cycle(S):
                fail(v, "unit sphere is a connected 2-regular graph of order 6")
    elif name == "grid_torus":
        # a C_3 factor is a triangle, so only n, m >= 4 is triangle-free
        n, m = a
        for v in range(G.order):
            if G.degree(v) != 4:
                fail(v, "degree 4")
            tri = sum((G.masks[w] & G.masks[v]).bit_count() for w in iter_bits(G.masks[v])) // 2
            if tri != (n == 3) + (m == 3):
                fail(v, f"lies on {(n == 3) + (m == 3)} triangles")
    # erdos_renyi: no structural invariant


def acceptance_corpus(seed: int = 2024) -> Iterator[tuple[str, Graph]]:
    """The fixed graph corpus used by the acceptance sweep."""
    for n in range(2, 9):
        yield f"complete({n})", complete(n)
    for n in range(3, 13):
        yield f"cycle({n})", cycle(n)
    for n in range(2, 13):
        yield f"path({n})", path(n)
    for n in range(2, 11):
        yield f"star({n})", star(n)
    for n in range(4, 11):
        yield f"wheel({n})", wheel(n)
    rng = random.Random(seed)
    for t in range(10):
        n = rng.randint(2, 15)
        s = rng.randrange(2**32)
        yield f"tree({n},seed={s})", random_tree(n, s)
    yield "octahedron", octahedron()
    yield "icosahedron", icosahedron()
    for d in range(2, 5):
        yield f"cross_polytope({d})", cross_polytope(d)
    yield "triangulated_torus(4,4)", triangulated_torus(4, 4)
    yield "triangulated_torus(5,5)", triangulated_torus(5, 5)
    yield "grid_torus(4,4)", grid_torus(4, 4)
    for n in range(1, 6):
        yield f"edgeless({n})", edgeless(n)
    for t in range(200):
        p = (0.2, 0.5, 0.8)[t % 3]
        n = rng.randint(2, 14)
        s = rng.randrange(2**32)
        yield f"erdos_renyi({n},{p},seed={s})", erdos_renyi(n, p, s)
