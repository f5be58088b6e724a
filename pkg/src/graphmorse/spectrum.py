"""Minimal number of critical points ``m(G)`` and the sphere-type test.

Whether ``v`` is critical depends only on which neighbours lie below it, so
the search space is the set of total orders of the vertices. Placing vertices
from the bottom up, the cost of placing ``v`` on top of an already-placed set
``P`` is ``[chi(S(v) & P) != 1]``; the exact minimum is then a shortest path
through the subset lattice (``O(2^n n)`` instead of ``n!``).
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

from .graph import Graph, certificate, graph_from_masks, mask_components, mask_euler
from .morse import MorseFunction, as_morse, lower_masks, morse_from_order

DEFAULT_MAX_ORDER = 9
DEFAULT_RESTARTS = 200
DEFAULT_MOVES = 500


class OrderTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class MResult:
    lower: int
    upper: int
    witness: MorseFunction | None
    exact: bool

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} above upper bound {self.upper}")


class _CritTable:
    """Memoised ``chi(S(v) & below) != 1`` keyed by the exit set bitmask."""

    def __init__(self, G: Graph):
        self.masks = G.masks
        self.cache: dict[int, bool] = {}

    def __call__(self, exit_mask: int) -> bool:
        hit = self.cache.get(exit_mask)
        if hit is None:
            hit = mask_euler(self.masks, exit_mask) != 1
            self.cache[exit_mask] = hit
        return hit


def critical_count(G: Graph, f) -> int:
    f = as_morse(G, f)
    masks = G.masks
    return sum(mask_euler(masks, low) != 1 for low in lower_masks(G, f))


def lower_bound(G: Graph) -> int:
    """Each component needs its minimum; a component with chi != 1 needs a second critical point."""
    total = 0
    for comp in mask_components(G.masks, G.full_mask):
        total += 1 if mask_euler(G.masks, comp) == 1 else 2
    return total


def m_exact(G: Graph, max_order: int = DEFAULT_MAX_ORDER) -> MResult:
    n = G.order
    if n > max_order:
        raise OrderTooLarge(
            f"order {n} exceeds max_order={max_order}; use m_search for an upper bound"
        )
    if n == 0:
        return MResult(0, 0, MorseFunction(()), True)
    masks = G.masks
    crit = _CritTable(G)
    size = 1 << n
    best = [0] * size
    top = [0] * size
    for S in range(1, size):
        b = n + 1
        arg = -1
        rest = S
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            prev = S ^ low
            c = best[prev] + crit(masks[v] & prev)
            if c < b:
                b, arg = c, v
        best[S] = b
        top[S] = arg
    order = []
    S = size - 1
    while S:
        v = top[S]
        order.append(v)
        S ^= 1 << v
    order.reverse()
    m = best[size - 1]
    return MResult(m, m, morse_from_order(order), True)


def _local_search(G: Graph, crit: _CritTable, order: list[int], moves: int, rng: random.Random):
    n = len(order)
    masks = G.masks
    rank = [0] * n
    for r, v in enumerate(order):
        rank[v] = r
    low = [masks[v] & sum(1 << w for w in order[: rank[v]]) for v in range(n)]
    state = [crit(low[v]) for v in range(n)]
    count = sum(state)
    best, best_order = count, tuple(order)
    if n < 2:
        return best, best_order
    for _ in range(moves):
        i = rng.randrange(n - 1)
        a, b = order[i], order[i + 1]
        if masks[a] >> b & 1:
            # b drops below a: S-(a) gains b, S-(b) loses a; nobody else changes
            la, lb = low[a] | (1 << b), low[b] & ~(1 << a)
            ca, cb = crit(la), crit(lb)
            new = count - state[a] - state[b] + ca + cb
            if new > count:
                continue
            low[a], low[b], state[a], state[b] = la, lb, ca, cb
            count = new
        order[i], order[i + 1] = b, a
        if count < best or (count == best and tuple(order) < best_order):
            best, best_order = count, tuple(order)
    return best, best_order


def m_search(
    G: Graph,
    restarts: int = DEFAULT_RESTARTS,
    seed=0,
    moves: int = DEFAULT_MOVES,
) -> MResult:
    """Upper bound on ``m(G)`` by random restarts plus adjacent-rank swaps.

    Restart ``r`` uses the ``r``-th seed drawn from ``Random(seed)``, so a
    larger budget only ever extends the same sequence of attempts.
    """
    n = G.order
    lower = lower_bound(G)
    if n == 0:
        return MResult(0, 0, MorseFunction(()), True)
    crit = _CritTable(G)
    master = random.Random(seed)
    best, best_order = n + 1, None
    for _ in range(max(restarts, 1)):
        rng = random.Random(master.getrandbits(64))
        order = list(range(n))
        rng.shuffle(order)
        c, o = _local_search(G, crit, order, moves, rng)
        if c < best or (c == best and o < best_order):
            best, best_order = c, o
        if best == lower:
            break
    return MResult(lower, best, morse_from_order(best_order), lower == best)


def m_value(G: Graph, max_order: int = DEFAULT_MAX_ORDER, **search) -> MResult:
    """``m_exact`` when affordable, else ``m_search``."""
    if G.order <= max_order:
        return m_exact(G, max_order)
    return m_search(G, **search)


class Verdict(enum.Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"


@dataclass
class SphereTypeVerdict:
    verdict: Verdict
    trace: list[str] = field(default_factory=list)

    def render(self) -> str:
        return "\n".join([f"sphere type: {self.verdict.value}", *self.trace])


def is_sphere_type(
    G: Graph,
    max_order: int = DEFAULT_MAX_ORDER,
    restarts: int = DEFAULT_RESTARTS,
    moves: int = DEFAULT_MOVES,
    seed=0,
) -> SphereTypeVerdict:
    """Recursive test: empty, or ``m = 2`` with every unit sphere of sphere type.

    ``m`` is certified either exhaustively (order <= ``max_order``) or by a
    search whose upper bound meets the lower bound; anything else is Unknown.
    """
    memo: dict = {}
    trace: list[str] = []

    def visit(masks, sub, depth, label, names) -> Verdict:
        pad = "  " * depth
        key = certificate(masks, sub)
        if key in memo:
            trace.append(f"{pad}{label}: {memo[key].value} (cached)")
            return memo[key]
        H, ids = graph_from_masks(masks, sub)
        ids = [names[i] for i in ids]
        desc = f"{label} order={H.order} size={H.size}"
        if H.order == 0:
            trace.append(f"{pad}{desc}: empty graph -> Yes")
            memo[key] = Verdict.YES
            return Verdict.YES
        r = m_value(H, max_order, restarts=restarts, moves=moves, seed=seed)
        if r.exact and r.upper == 2:
            trace.append(f"{pad}{desc}: m=2 (certified, witness order {[ids[v] for v in r.witness.order]})")
        elif r.upper < 2 or r.lower > 2:
            m_txt = f"m={r.upper}" if r.exact else f"m in [{r.lower},{r.upper}]"
            trace.append(f"{pad}{desc}: {m_txt} != 2 -> No")
            memo[key] = Verdict.NO
            return Verdict.NO
        else:
            trace.append(f"{pad}{desc}: m in [{r.lower},{r.upper}] not certified -> Unknown")
            memo[key] = Verdict.UNKNOWN
            return Verdict.UNKNOWN
        out = Verdict.YES
        for v in range(H.order):
            res = visit(H.masks, H.masks[v], depth + 1, f"S({ids[v]})", ids)
            if res is Verdict.NO:
                trace.append(f"{pad}{desc}: unit sphere of {ids[v]} is not of sphere type -> No")
                out = Verdict.NO
                break
            if res is Verdict.UNKNOWN:
                out = Verdict.UNKNOWN
        if out is Verdict.YES:
            trace.append(f"{pad}{desc}: all unit spheres of sphere type -> Yes")
        elif out is Verdict.UNKNOWN:
            trace.append(f"{pad}{desc}: some unit sphere undecided -> Unknown")
        memo[key] = out
        return out

    verdict = visit(G.masks, G.full_mask, 0, "G", list(range(G.order)))
    return SphereTypeVerdict(verdict, trace)


def sphere_euler_values(G: Graph) -> set[int]:
    """Distinct ``chi(S(v))`` over vertices."""
    return {mask_euler(G.masks, G.masks[v]) for v in range(G.order)}
