"""Immutable simple graphs, unit spheres and clique counting.

Vertices are the dense ids ``0..order-1``. Every graph also carries one
integer bitmask per vertex (bit ``w`` of ``masks[v]`` set iff ``v ~ w``);
the hot loops elsewhere in the package work on these masks and on vertex
subsets encoded the same way.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Malformed graph input (bad id, self-loop, ...)."""


class CensusBudgetExceeded(RuntimeError):
    """Raised when clique enumeration exceeds its extension budget."""

    def __init__(self, budget: int, partial: Sequence[int]):
        super().__init__(f"clique enumeration exceeded budget of {budget} extensions")
        self.budget = budget
        self.partial = tuple(partial)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..order-1``."""

    adjacency: tuple[frozenset[int], ...]
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.adjacency)
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise GraphError(f"self-loop at vertex {v}")
            for w in nbrs:
                if not 0 <= w < n:
                    raise GraphError(f"neighbor id {w} of vertex {v} out of range 0..{n - 1}")
                if v not in self.adjacency[w]:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
        object.__setattr__(self, "masks", tuple(mask_of(nbrs) for nbrs in self.adjacency))

    @property
    def order(self) -> int:
        return len(self.adjacency)

    @property
    def size(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, w) for u in range(self.order) for w in sorted(self.adjacency[u]) if u < w]

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"


@dataclass(frozen=True)
class CliqueCensus:
    """``counts[k]`` is the number of complete subgraphs ``K_{k+1}``."""

    counts: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.counts) - 1

    @property
    def euler(self) -> int:
        return alternating_sum(self.counts)

    def __getitem__(self, k: int) -> int:
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    def __len__(self) -> int:
        return len(self.counts)


def alternating_sum(counts: Iterable[int]) -> int:
    return sum(c if k % 2 == 0 else -c for k, c in enumerate(counts))


def build_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if order < 0:
        raise GraphError(f"negative order {order}")
    adj: list[set[int]] = [set() for _ in range(order)]
    for pair in edges:
        u, v = pair
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge {pair!r} has an id outside 0..{order - 1}")
        if u == v:
            raise GraphError(f"self-loop {pair!r}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(tuple(frozenset(a) for a in adj))


def from_labeled_edges(
    edges: Iterable[tuple[Hashable, Hashable]], vertices: Iterable[Hashable] = ()
) -> tuple[Graph, list[Hashable]]:
    """Build a graph from arbitrary vertex labels.

    Labels are remapped to dense ids in first-seen order; the returned list
    maps each id back to its label.
    """
    labels: list[Hashable] = []
    index: dict[Hashable, int] = {}

    def ident(x):
        if x not in index:
            index[x] = len(labels)
            labels.append(x)
        return index[x]

    for x in vertices:
        ident(x)
    pairs = [(ident(a), ident(b)) for a, b in edges]
    return build_graph(len(labels), pairs), labels


def graph_from_masks(masks: Sequence[int], sub: int) -> tuple[Graph, list[int]]:
    ids = list(iter_bits(sub))
    pos = {v: i for i, v in enumerate(ids)}
    adj = tuple(frozenset(pos[w] for w in iter_bits(masks[v] & sub)) for v in ids)
    return Graph(adj), ids


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph generated by ``vertices``.

    Returns ``(H, ids)`` where vertex ``i`` of ``H`` is vertex ``ids[i]`` of
    ``G`` (ids ascending).
    """
    sub = 0
    for v in vertices:
        if not 0 <= v < G.order:
            raise GraphError(f"vertex {v} out of range 0..{G.order - 1}")
        sub |= 1 << v
    return graph_from_masks(G.masks, sub)


def unit_sphere(G: Graph, v: int) -> Graph:
    if not 0 <= v < G.order:
        raise GraphError(f"vertex {v} out of range 0..{G.order - 1}")
    return graph_from_masks(G.masks, G.masks[v])[0]


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shift = G.order
    adj = G.adjacency + tuple(frozenset(w + shift for w in a) for a in H.adjacency)
    return Graph(adj)


def mask_census(masks: Sequence[int], sub: int, budget: int | None = None) -> list[int]:
    """Clique counts of the subgraph generated by the vertex set ``sub``.

    Each clique is grown only by candidates of larger id, so every complete
    subgraph is reached exactly once. ``budget`` caps the number of clique
    extensions; exceeding it raises :class:`CensusBudgetExceeded`.
    """
    counts: list[int] = []
    stack = [(sub, 0)]
    used = 0
    while stack:
        cand, depth = stack.pop()
        if depth == len(counts):
            counts.append(0)
        while cand:
            low = cand & -cand
            cand ^= low
            counts[depth] += 1
            used += 1
            if budget is not None and used > budget:
                raise CensusBudgetExceeded(budget, counts)
            nxt = masks[low.bit_length() - 1] & cand
            if nxt:
                stack.append((nxt, depth + 1))
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


def mask_euler(masks: Sequence[int], sub: int) -> int:
    """Euler characteristic of the subgraph generated by ``sub``."""
    chi = 0
    stack = [(sub, 1)]
    while stack:
        cand, sign = stack.pop()
        while cand:
            low = cand & -cand
            cand ^= low
            chi += sign
            nxt = masks[low.bit_length() - 1] & cand
            if nxt:
                stack.append((nxt, -sign))
    return chi


def clique_census(G: Graph, budget: int | None = None) -> CliqueCensus:
    return CliqueCensus(tuple(mask_census(G.masks, G.full_mask, budget)))


def euler_characteristic(G: Graph) -> int:
    return mask_euler(G.masks, G.full_mask)


def mask_components(masks: Sequence[int], sub: int) -> list[int]:
    comps = []
    rest = sub
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= masks[v]
            frontier = reach & sub & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(G: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by least vertex."""
    return [list(iter_bits(c)) for c in mask_components(G.masks, G.full_mask)]


def is_connected(G: Graph) -> bool:
    return len(mask_components(G.masks, G.full_mask)) <= 1


def certificate(masks: Sequence[int], sub: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Sorted remapped edge list of an induced subgraph, used as a memo key.

    Two vertex sets get the same certificate iff their induced subgraphs are
    equal after order-preserving relabelling (not an isomorphism test).
    """
    ids = list(iter_bits(sub))
    pos = {v: i for i, v in enumerate(ids)}
    edges = tuple(
        (pos[v], pos[w]) for v in ids for w in iter_bits(masks[v] & sub) if v < w
    )
    return len(ids), edges
