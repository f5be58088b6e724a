from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs_with_order, naive_index
from graphmorse.generators import complete, cycle, octahedron, path, random_tree, star, triangulated_torus
from graphmorse.graph import euler_characteristic
from graphmorse.morse import (
    MorseError,
    as_morse,
    count_Vk,
    index,
    index_report,
    intermediate_sums,
    is_critical,
    morse_from_order,
    random_morse,
    sphere_split,
    transfer_sums,
    validate_morse,
    verify_intermediate,
    verify_transfer,
)


def test_validate_examples(k3):
    assert validate_morse(k3, [1, 2, 3]) == []
    assert validate_morse(k3, [1, 1, 2]) == [(0, 1)]
    assert validate_morse(path(3), [5, 1, 5]) == [(0, 2)]


def test_distance_three_ties_are_legal():
    G = path(4)
    assert validate_morse(G, [1, 2, 3, 1]) == []
    f = as_morse(G, [1, 2, 3, 1])
    assert f.rank == (0, 2, 3, 1)


def test_missing_value_rejected(k3):
    with pytest.raises(MorseError):
        validate_morse(k3, [1, None, 2])
    with pytest.raises(MorseError):
        validate_morse(k3, [1, 2])


def test_invalid_values_raise(k3):
    with pytest.raises(MorseError) as info:
        index(k3, [1, 1, 2], 0)
    assert info.value.violations == [(0, 1)]


def test_morse_from_order():
    assert morse_from_order([0, 1, 2, 3]).rank == (0, 1, 2, 3)
    assert morse_from_order([3, 2, 1, 0]).rank == (3, 2, 1, 0)
    with pytest.raises(MorseError):
        morse_from_order([0, 0, 1])


@given(graphs_with_order())
def test_any_order_is_morse(Gp):
    G, perm = Gp
    assert validate_morse(G, morse_from_order(perm).rank) == []


def test_random_morse_deterministic():
    G = octahedron()
    assert random_morse(G, 7) == random_morse(G, 7)
    assert len({random_morse(G, s).rank for s in range(20)}) > 1
    for s in range(20):
        assert validate_morse(G, random_morse(G, s).rank) == []


def test_sphere_split_examples(k3):
    sp = sphere_split(cycle(4), [1, 2, 4, 3], 2)
    assert sp.minus == {1, 3} and sp.plus == frozenset()
    sp = sphere_split(k3, [1, 2, 3], 1)
    assert sp.minus == {0} and sp.plus == {2}
    assert sp.mixed_counts == (0, 1)
    G = octahedron()
    f = random_morse(G, 3)
    low = f.order[0]
    assert sphere_split(G, f, low).minus == frozenset()


def test_index_examples():
    assert [index(path(3), [1, 3, 2], v) for v in range(3)] == [1, -1, 1]
    assert [index(path(3), [2, 1, 3], v) for v in range(3)] == [0, 1, 0]
    assert [index(complete(4), [1, 2, 3, 4], v) for v in range(4)] == [1, 0, 0, 0]
    assert [index(cycle(4), [1, 2, 4, 3], v) for v in range(4)] == [1, 0, -1, 0]


def test_is_critical_examples():
    C = cycle(6)
    f = [1, 2, 3, 4, 5, 6]
    assert is_critical(C, f, 0)  # minimum
    assert not is_critical(C, f, 2)  # one smaller neighbour
    assert is_critical(C, f, 5)
    assert not is_critical(complete(5), [1, 2, 3, 4, 5], 4)


def test_index_report_k3_sum(k3):
    for perm in [(0, 1, 2), (2, 0, 1), (1, 2, 0)]:
        assert index_report(k3, morse_from_order(perm)).index_sum == 1


@pytest.mark.parametrize("n", range(4, 13))
def test_cycle_maxima_equal_minima(n):
    for s in range(10):
        f = random_morse(cycle(n), s)
        rep = index_report(cycle(n), f)
        assert rep.indices.count(1) == rep.indices.count(-1)
        assert rep.index_sum == 0


def test_octahedron_height_function():
    # antipodal pairs (0,1), (2,3), (4,5): vertex 0 bottom, 1 top
    f = morse_from_order([0, 2, 4, 3, 5, 1])
    rep = index_report(octahedron(), f)
    assert rep.critical_points == [0, 1]
    assert rep.indices[0] == rep.indices[1] == 1
    assert rep.index_sum == 2


def test_torus_critical_values_are_from_definition():
    T = triangulated_torus(4, 4)
    f = random_morse(T, 11)
    rep = index_report(T, f)
    assert list(rep.indices) == [naive_index(T, f.rank, v) for v in range(T.order)]


@given(graphs_with_order(max_order=7))
def test_index_matches_naive_definition(Gp):
    G, perm = Gp
    f = morse_from_order(perm)
    rep = index_report(G, f)
    assert list(rep.indices) == [naive_index(G, f.rank, v) for v in range(G.order)]
    assert all(rep.critical[v] == (rep.indices[v] != 0) for v in range(G.order))


@given(graphs_with_order(max_order=8))
def test_poincare_hopf(Gp):
    G, perm = Gp
    assert index_report(G, morse_from_order(perm)).index_sum == euler_characteristic(G)


@given(graphs_with_order(max_order=8))
def test_plus_index_of_f_is_index_of_negated_f(Gp):
    G, perm = Gp
    f = morse_from_order(perm)
    assert index_report(G, f.negated()).indices == index_report(G, f).plus_indices


def test_real_values_reduce_to_ranks():
    G = cycle(5)
    vals = [Fraction(1, 3), 2.5, -7, 100, 0]
    assert index_report(G, vals) == index_report(G, as_morse(G, vals))


def test_count_vk_k3(k3):
    assert sum(count_Vk(k3, v, 0) for v in range(3)) == 6 == 2 * 3
    assert sum(count_Vk(k3, v, 1) for v in range(3)) == 3 == 3 * 1
    assert count_Vk(k3, 0, -1) == 1
    assert count_Vk(k3, 0, 5) == 0


def test_transfer_sums_explicit():
    lhs, higher = transfer_sums(complete(4))
    assert lhs == [12, 12, 4] and higher == [6, 4, 1]
    assert verify_transfer(complete(4))


def test_intermediate_examples(k3):
    for s in range(6):
        lhs, higher = intermediate_sums(k3, random_morse(k3, s))
        assert lhs == [0, 1] and higher == [3, 1]
        lhs, _ = intermediate_sums(complete(4), random_morse(complete(4), s))
        assert lhs[2] == 2
        assert verify_intermediate(complete(4), random_morse(complete(4), s))
    lhs, _ = intermediate_sums(cycle(7), random_morse(cycle(7), 0))
    assert lhs == [0]
    lhs, _ = intermediate_sums(star(6), random_morse(star(6), 0))
    assert lhs == [0]


@given(graphs_with_order(max_order=8))
def test_counting_lemmas(Gp):
    G, perm = Gp
    f = morse_from_order(perm)
    assert verify_transfer(G)
    assert verify_intermediate(G, f)


@given(graphs_with_order(max_order=8))
def test_simplex_partition(Gp):
    G, perm = Gp
    f = morse_from_order(perm)
    for v in range(G.order):
        sp = sphere_split(G, f, v)
        for k, total in enumerate(sp.sphere_counts):
            assert sp.minus_counts[k] + sp.plus_counts[k] + sp.mixed_counts[k] == total
        if sp.sphere_counts:
            assert sp.mixed_counts[0] == 0
        assert sp.minus | sp.plus == G.neighbors(v) and not sp.minus & sp.plus


@pytest.mark.parametrize("n", range(4, 12))
def test_symmetric_index_vanishes_on_cycles(n):
    for s in range(5):
        assert set(index_report(cycle(n), random_morse(cycle(n), s)).symmetric) == {0}


@pytest.mark.parametrize("n", range(2, 10))
def test_symmetric_index_half_at_path_ends(n):
    for s in range(5):
        j = index_report(path(n), random_morse(path(n), s)).symmetric
        assert j[0] == j[-1] == Fraction(1, 2)
        assert set(j[1:-1]) <= {0}


@given(st.integers(1, 15), st.integers(0, 2**32), st.integers(0, 2**32))
def test_tree_rule(n, tseed, fseed):
    T = random_tree(n, tseed)
    f = random_morse(T, fseed)
    rep = index_report(T, f)
    for v in range(n):
        smaller = sum(f.rank[w] < f.rank[v] for w in T.neighbors(v))
        assert rep.indices[v] == 1 - smaller


@given(graphs_with_order(max_order=8))
def test_index_lower_bound(Gp):
    G, perm = Gp
    rep = index_report(G, morse_from_order(perm))
    assert all(rep.indices[v] >= 1 - G.degree(v) for v in range(G.order))
