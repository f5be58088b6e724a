import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphmorse.generators import (
    FamilyError,
    FamilySpec,
    SelfCheckError,
    acceptance_corpus,
    cross_polytope,
    generate,
    octahedron,
    self_check,
)
from graphmorse.graph import build_graph, connected_components, euler_characteristic, unit_sphere


def fam(name, *params, p=None, seed=None):
    return FamilySpec(name, tuple(params), p, seed)


@pytest.mark.parametrize(
    "fs, chi",
    [
        (fam("complete", 1), 1),
        (fam("complete", 7), 1),
        (fam("cycle", 3), 1),  # C_3 = K_3
        (fam("cycle", 8), 0),
        (fam("path", 1), 1),
        (fam("path", 9), 1),
        (fam("star", 6), 1),
        (fam("wheel", 7), 1),
        (fam("tree", 12, seed=3), 1),
        (fam("octahedron"), 2),
        (fam("icosahedron"), 2),
        (fam("cross_polytope", 1), 2),
        (fam("cross_polytope", 2), 0),
        (fam("cross_polytope", 3), 2),
        (fam("cross_polytope", 4), 0),
        (fam("triangulated_torus", 4, 4), 0),
        (fam("triangulated_torus", 5, 7), 0),
        (fam("grid_torus", 4, 6), -24),
        (fam("edgeless", 5), 5),
    ],
    ids=lambda x: x.describe() if isinstance(x, FamilySpec) else str(x),
)
def test_family_euler(fs, chi):
    assert euler_characteristic(generate(fs)) == chi


def test_cross_polytope_3_is_octahedron():
    assert cross_polytope(3) == octahedron()
    assert generate(fam("cross_polytope", 3)) == octahedron()


def test_torus_spheres_are_hexagons():
    T = generate(fam("triangulated_torus", 4, 4))
    for v in range(T.order):
        S = unit_sphere(T, v)
        assert S.order == 6 and S.size == 6 and len(connected_components(S)) == 1


def test_icosahedron_literal():
    G = generate(fam("icosahedron"))
    assert (G.order, G.size) == (12, 30)
    assert all(G.degree(v) == 5 for v in range(12))


def test_wheel_and_star_shape():
    W = generate(fam("wheel", 6))
    assert W.degree(0) == 5 and W.size == 10
    S = generate(fam("star", 9))
    assert S.degree(0) == 8 and S.size == 8


@pytest.mark.parametrize(
    "bad",
    [
        fam("cycle", 2),
        fam("wheel", 3),
        fam("triangulated_torus", 3, 4),
        fam("grid_torus", 2, 5),
        fam("complete"),
        fam("erdos_renyi", 5, p=1.5, seed=1),
        fam("erdos_renyi", 5, p=0.5),
        fam("tree", 5),
        fam("moebius", 3),
    ],
    ids=lambda s: s.describe(),
)
def test_bad_parameters(bad):
    with pytest.raises(FamilyError):
        generate(bad)


def test_self_check_names_vertex():
    T = generate(fam("triangulated_torus", 4, 4))
    edges = [e for e in T.edges() if e != (0, 1)]
    with pytest.raises(SelfCheckError) as info:
        self_check(build_graph(16, edges), fam("triangulated_torus", 4, 4))
    assert info.value.vertex == 0
    with pytest.raises(SelfCheckError):
        self_check(build_graph(4, [(0, 1), (1, 2), (2, 0)]), fam("tree", 4, seed=0))
    with pytest.raises(SelfCheckError):
        self_check(build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]), fam("cycle", 6))


def test_erdos_renyi_vacuous_check():
    G = generate(fam("erdos_renyi", 9, p=0.3, seed=2))
    self_check(G, fam("erdos_renyi", 9, p=0.3, seed=2))


@given(st.integers(0, 40), st.floats(0, 1), st.integers(0, 2**32))
def test_erdos_renyi_deterministic(n, p, seed):
    a = generate(fam("erdos_renyi", n, p=p, seed=seed))
    b = generate(fam("erdos_renyi", n, p=p, seed=seed))
    assert a == b and a.edges() == b.edges()


@pytest.mark.parametrize("n, p", [(30, 0.1), (30, 0.5), (50, 0.8)])
def test_erdos_renyi_edge_count_concentrates(n, p):
    pairs = n * (n - 1) // 2
    mean, sd = p * pairs, math.sqrt(pairs * p * (1 - p))
    for seed in range(10):
        G = generate(fam("erdos_renyi", n, p=p, seed=seed))
        assert abs(G.size - mean) <= 5 * sd


def test_erdos_renyi_extremes():
    assert generate(fam("erdos_renyi", 6, p=0.0, seed=1)).size == 0
    assert generate(fam("erdos_renyi", 6, p=1.0, seed=1)).size == 15


def test_acceptance_corpus_is_stable():
    a = [(name, G.edges()) for name, G in acceptance_corpus()]
    b = [(name, G.edges()) for name, G in acceptance_corpus()]
    assert a == b
    names = [name for name, _ in a]
    assert sum(n.startswith("erdos_renyi") for n in names) == 200
    assert sum(n.startswith("tree") for n in names) == 10
