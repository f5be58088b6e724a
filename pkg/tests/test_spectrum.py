import itertools

import pytest
from hypothesis import given, settings

from conftest import graphs
from graphmorse.generators import (
    complete,
    cycle,
    edgeless,
    icosahedron,
    octahedron,
    triangulated_torus,
    wheel,
)
from graphmorse.graph import build_graph, euler_characteristic
from graphmorse.morse import morse_from_order, random_morse
from graphmorse.spectrum import (
    OrderTooLarge,
    Verdict,
    critical_count,
    is_sphere_type,
    m_exact,
    m_search,
    sphere_euler_values,
)


def brute_force_m(G):
    return min(critical_count(G, morse_from_order(p)) for p in itertools.permutations(range(G.order)))


def test_critical_count_examples():
    assert critical_count(cycle(6), morse_from_order(range(6))) == 2
    for s in range(5):
        assert critical_count(complete(5), random_morse(complete(5), s)) == 1
        assert critical_count(edgeless(4), random_morse(edgeless(4), s)) == 4


@given(graphs(min_order=1, max_order=6))
@settings(max_examples=80)
def test_m_exact_matches_permutation_brute_force(G):
    r = m_exact(G)
    assert r.exact and r.lower == r.upper == brute_force_m(G)
    assert critical_count(G, r.witness) == r.upper


def test_m_exact_examples():
    assert m_exact(cycle(5)).upper == 2
    assert m_exact(complete(5)).upper == 1
    assert m_exact(octahedron()).upper == 2
    assert m_exact(build_graph(0, [])).upper == 0


def test_m_exact_refuses_large():
    with pytest.raises(OrderTooLarge, match="m_search"):
        m_exact(icosahedron())


def test_m_search_examples():
    r = m_search(icosahedron(), seed=1)
    assert (r.lower, r.upper, r.exact) == (2, 2, True)
    assert critical_count(icosahedron(), r.witness) == 2
    r = m_search(wheel(9), seed=1)
    assert (r.upper, r.exact) == (1, True)
    r = m_search(triangulated_torus(4, 4), seed=0)
    assert r.upper <= 3
    assert critical_count(triangulated_torus(4, 4), r.witness) == r.upper


def test_wheel_center_minimum():
    W = wheel(8)
    assert critical_count(W, morse_from_order(range(8))) == 1


def test_m_search_bounds_invariant():
    for G in (cycle(7), complete(4), edgeless(3), octahedron()):
        r = m_search(G, restarts=5, seed=3)
        assert 1 <= r.lower <= r.upper <= G.order
        assert critical_count(G, r.witness) == r.upper
        assert r.upper >= m_exact(G).upper


def test_m_search_monotone_in_restarts():
    G = triangulated_torus(5, 5)
    ups = [m_search(G, restarts=k, seed=4, moves=60).upper for k in (1, 2, 4, 8, 16)]
    assert ups == sorted(ups, reverse=True)


@given(graphs(min_order=1, max_order=7))
@settings(max_examples=60)
def test_critical_count_lower_bounds(G):
    for s in range(3):
        f = random_morse(G, s)
        c = critical_count(G, f)
        assert c >= 1
        if euler_characteristic(G) != 1:
            assert c >= 2
        assert c >= m_exact(G).upper


def test_sphere_type_examples():
    assert is_sphere_type(edgeless(2)).verdict is Verdict.YES
    v = is_sphere_type(octahedron())
    assert v.verdict is Verdict.YES
    assert any("S(0)" in line for line in v.trace)
    assert is_sphere_type(cycle(4)).verdict is Verdict.YES
    v = is_sphere_type(complete(3))
    assert v.verdict is Verdict.NO
    assert "m=1" in v.trace[0]
    assert is_sphere_type(build_graph(0, [])).verdict is Verdict.YES


@pytest.mark.parametrize("n", range(4, 10))
def test_cycles_are_sphere_type(n):
    assert is_sphere_type(cycle(n)).verdict is Verdict.YES


def test_sphere_type_refuted_by_sphere():
    # K_2 plus an isolated vertex: m = 2, but the sphere of an edge end is K_1 with m = 1
    G = build_graph(3, [(0, 1)])
    assert m_exact(G).upper == 2
    assert is_sphere_type(G).verdict is Verdict.NO


def test_icosahedron_sphere_type_via_search():
    v = is_sphere_type(icosahedron(), seed=2)
    assert v.verdict is Verdict.YES


def test_unknown_when_search_cannot_certify():
    # torus: lower bound 2, best found 3, too large for exhaustive search
    v = is_sphere_type(triangulated_torus(4, 4), restarts=3, moves=50)
    assert v.verdict is Verdict.UNKNOWN


def test_sphere_euler_values():
    assert sphere_euler_values(octahedron()) == {0}
    assert sphere_euler_values(icosahedron()) == {0}
    assert sphere_euler_values(complete(4)) == {1}
