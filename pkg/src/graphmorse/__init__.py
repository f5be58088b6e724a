"""Discrete Morse theory on finite simple graphs.

Index ``i(v) = 1 - chi(S-(v))`` of a locally injective vertex function, the
Poincaré–Hopf sum, Gauss-Bonnet curvature, a recursive Euler characteristic,
and the minimal-critical-point invariant.
"""

from .curvature import CurvatureReport, gauss_bonnet_report, local_curvature
from .fastchi import FastChiConfig, chi_agreement_suite, fast_euler
from .generators import FamilySpec, generate, self_check
from .graph import (
    CliqueCensus,
    Graph,
    build_graph,
    clique_census,
    connected_components,
    euler_characteristic,
    induced_subgraph,
    unit_sphere,
)
from .morse import (
    IndexReport,
    MorseFunction,
    SphereSplit,
    count_Vk,
    index,
    index_report,
    is_critical,
    morse_from_order,
    random_morse,
    sphere_split,
    validate_morse,
    verify_intermediate,
    verify_transfer,
)
from .spectrum import MResult, SphereTypeVerdict, Verdict, critical_count, is_sphere_type, m_exact, m_search

__all__ = [
    "CliqueCensus", "CurvatureReport", "FamilySpec", "FastChiConfig", "Graph", "IndexReport",
    "MResult", "MorseFunction", "SphereSplit", "SphereTypeVerdict", "Verdict",
    "build_graph", "chi_agreement_suite", "clique_census", "connected_components", "count_Vk",
    "critical_count", "euler_characteristic", "fast_euler", "gauss_bonnet_report", "generate",
    "index", "index_report", "induced_subgraph", "is_critical", "is_sphere_type",
    "local_curvature", "m_exact", "m_search", "morse_from_order", "random_morse", "self_check",
    "sphere_split", "unit_sphere", "validate_morse", "verify_intermediate", "verify_transfer",
]
