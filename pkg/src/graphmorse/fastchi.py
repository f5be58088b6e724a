"""Euler characteristic by recursive Poincaré–Hopf.

Fix a vertex order on the graph, then

    chi(G) = sum_v 1 - chi(S-(v))

and evaluate each ``chi(S-(v))`` the same way. The exit sets shrink at every
level, so the recursion bottoms out; small subgraphs go to the clique census.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Sequence

from .curvature import gauss_bonnet_report
from .graph import Graph, iter_bits, mask_euler
from .morse import index_report, random_morse

STRATEGIES = ("degree", "random", "explicit")


@dataclass(frozen=True)
class FastChiConfig:
    """How the recursion orders vertices.

    ``degree`` gives the largest values to the highest-degree vertices of each
    (sub)graph, ties broken by id. ``random`` and ``explicit`` fix one total
    order on the whole graph and restrict it to every subgraph.
    """

    strategy: str = "degree"
    seed: int | None = None
    order: tuple[int, ...] | None = None
    base_order_threshold: int = 6
    memoize: bool = False
    cone_shortcut: bool = True

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}; expected one of {STRATEGIES}")
        if self.base_order_threshold < 1:
            raise ValueError("base_order_threshold must be >= 1")
        if self.strategy == "random" and self.seed is None:
            raise ValueError("random strategy needs a seed")
        if self.strategy == "explicit" and self.order is None:
            raise ValueError("explicit strategy needs an order")


def _global_rank(G: Graph, cfg: FastChiConfig) -> list[int] | None:
    if cfg.strategy == "degree":
        return None
    if cfg.strategy == "random":
        perm = list(range(G.order))
        random.Random(cfg.seed).shuffle(perm)
    else:
        perm = list(cfg.order)
        if sorted(perm) != list(range(G.order)):
            raise ValueError("explicit order must be a permutation of the vertex ids")
    rank = [0] * G.order
    for r, v in enumerate(perm):
        rank[v] = r
    return rank


def fast_euler(G: Graph, cfg: FastChiConfig | None = None) -> int:
    cfg = cfg or FastChiConfig()
    masks = G.masks
    rank = _global_rank(G, cfg)
    threshold = cfg.base_order_threshold
    memo: dict[int, int] | None = {} if cfg.memoize else None
    cone = cfg.cone_shortcut

    def chi(sub: int) -> int:
        n = sub.bit_count()
        if n <= threshold:
            return mask_euler(masks, sub)
        if memo is not None and sub in memo:
            return memo[sub]
        verts = list(iter_bits(sub))
        if cone:
            for u in verts:
                # u adjacent to every other vertex: the subgraph is a cone
                if (masks[u] | (1 << u)) & sub == sub:
                    return 1
        if rank is None:
            verts.sort(key=lambda v: ((masks[v] & sub).bit_count(), v))
        else:
            verts.sort(key=rank.__getitem__)
        total = 0
        below = 0
        for v in verts:
            lower = masks[v] & below
            total += 1 - (chi(lower) if lower else 0)
            below |= 1 << v
        if memo is not None:
            memo[sub] = total
        return total

    return chi(G.full_mask) if G.order else 0


@dataclass
class ChiAgreement:
    census: int
    gauss_bonnet: int
    hopf: int
    fast: int
    timings_us: dict[str, float] = field(default_factory=dict)

    @property
    def values(self) -> dict[str, int]:
        return {
            "cliques": self.census,
            "gaussbonnet": self.gauss_bonnet,
            "hopf": self.hopf,
            "fast": self.fast,
        }


class ChiDisagreement(AssertionError):
    def __init__(self, values: dict, witness: str):
        super().__init__(f"Euler characteristic methods disagree: {values}\n{witness}")
        self.values = values
        self.witness = witness


def _timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, (time.perf_counter() - t0) * 1e6


def chi_agreement_suite(G: Graph, seed: int = 0, cfg: FastChiConfig | None = None) -> ChiAgreement:
    """Compute chi four independent ways; raise :class:`ChiDisagreement` if they differ."""
    from .io import emit_graph

    census, t_c = _timed(mask_euler, G.masks, G.full_mask)
    gb, t_g = _timed(lambda: gauss_bonnet_report(G, verify=False).total)
    hopf, t_h = _timed(lambda: index_report(G, random_morse(G, seed)).index_sum)
    fast, t_f = _timed(fast_euler, G, cfg)
    res = ChiAgreement(
        census,
        int(gb) if gb.denominator == 1 else gb,
        hopf,
        fast,
        {"cliques": t_c, "gaussbonnet": t_g, "hopf": t_h, "fast": t_f},
    )
    if len(set(res.values.values())) != 1:
        raise ChiDisagreement(
            res.values, emit_graph(G, [f"chi disagreement, morse seed {seed}"])
        )
    return res


def explicit(order: Sequence[int], **kw) -> FastChiConfig:
    return FastChiConfig(strategy="explicit", order=tuple(order), **kw)
