"""Vertex curvature and the discrete Gauss-Bonnet sum, in exact rationals.

    K(v) = sum_{k>=0} (-1)^k V_{k-1}(v) / (k+1),   V_{-1}(v) = 1,

where ``V_j(v)`` counts the ``K_{j+1}`` subgraphs of the unit sphere ``S(v)``.
Each ``(k+1)``-clique through ``v`` contributes ``(-1)^k / (k+1)``, so summing
over vertices hands every clique's sign back to it exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, GraphError, mask_census, mask_euler


class GaussBonnetMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class CurvatureReport:
    curvatures: tuple[Fraction, ...]
    total: Fraction


def curvature_from_sphere_counts(counts) -> Fraction:
    k = Fraction(1)
    for j, c in enumerate(counts):
        # V_j(v) sits at k = j+1 in the sum
        term = Fraction(c, j + 2)
        k += -term if j % 2 == 0 else term
    return k


def local_curvature(G: Graph, v: int) -> Fraction:
    if not 0 <= v < G.order:
        raise GraphError(f"vertex {v} out of range 0..{G.order - 1}")
    return curvature_from_sphere_counts(mask_census(G.masks, G.masks[v]))


def gauss_bonnet_report(G: Graph, verify: bool = True) -> CurvatureReport:
    """Per-vertex curvatures and their total.

    With ``verify`` the total is checked against the clique-count Euler
    characteristic and :class:`GaussBonnetMismatch` is raised on disagreement.
    """
    curv = tuple(local_curvature(G, v) for v in range(G.order))
    total = sum(curv, Fraction(0))
    if verify:
        chi = mask_euler(G.masks, G.full_mask)
        if total != chi:
            raise GaussBonnetMismatch(f"curvature total {total} != Euler characteristic {chi}")
    return CurvatureReport(curv, total)


def curvature_terms(G: Graph) -> list[Fraction]:
    """``sum_v (-1)^k V_{k-1}(v)/(k+1)`` for each k; should equal ``(-1)^k v_k``."""
    terms = [Fraction(G.order)] if G.order else []
    for v in range(G.order):
        for j, c in enumerate(mask_census(G.masks, G.masks[v])):
            k = j + 1
            while len(terms) <= k:
                terms.append(Fraction(0))
            terms[k] += Fraction((-1) ** k * c, k + 1)
    return terms
