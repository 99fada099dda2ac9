from math import prod

import pytest

from bstirling import catalog
from bstirling.errors import TooLarge
from bstirling.oracles import cycle_type, partition_profiles, permutation_profiles, set_partitions
from bstirling.restricted import (
    AtLeast,
    AtMost,
    EvenOnly,
    ExplicitSet,
    count_derangements,
    count_involutions,
    count_list_partitions,
    count_pairings,
    count_partitions,
    count_permutations,
)
from bstirling.stirling import Kind, classical_second, triangle_from_series


def second(spec, n):
    return triangle_from_series(catalog.series(spec, n), Kind.SECOND, n)


def test_oracle_building_blocks():
    assert list(set_partitions(3)) == [[0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 1], [0, 1, 2]]
    assert [sum(partition_profiles(n).values()) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]
    assert cycle_type((1, 2, 0, 3)) == (1, 3)
    assert sum(permutation_profiles(5).values()) == 120


def test_count_partitions_examples():
    assert count_partitions(4, 2, EvenOnly()) == 3
    assert count_partitions(3, 2, AtMost(2)) == 3
    assert count_partitions(2, 1, AtLeast(3)) == 0
    with pytest.raises(TooLarge):
        count_partitions(13, 2, AtMost(2))


def test_count_permutations_examples():
    assert count_permutations(3, 1, AtLeast(2)) == 2
    assert count_derangements(4) == 9
    assert count_permutations(2, 2, ExplicitSet({1})) == 1
    with pytest.raises(TooLarge):
        count_permutations(10, 2, AtMost(2))


def test_count_list_partitions_examples():
    assert count_list_partitions(3, 2) == 6
    assert all(count_list_partitions(n, n) == 1 for n in range(8))
    assert count_list_partitions(3, 1) == 6
    with pytest.raises(TooLarge):
        count_list_partitions(11, 2)


def test_constraint_validation():
    with pytest.raises(ValueError):
        AtMost(0)
    with pytest.raises(ValueError):
        AtLeast(-2)
    with pytest.raises(ValueError):
        ExplicitSet(set())
    with pytest.raises(ValueError):
        ExplicitSet({0, 2})


def test_unrestricted_partitions_are_classical():
    S = classical_second(10)
    for n in range(11):
        for k in range(n + 1):
            assert count_partitions(n, k, AtLeast(1)) == S.entry(n, k)


@pytest.mark.parametrize("spec,constraint", [
    ("cosh", EvenOnly()), ("Rle(2)", AtMost(2)), ("Rle(3)", AtMost(3)),
    ("Rge(2)", AtLeast(2)), ("Rge(3)", AtLeast(3)),
])
def test_block_restricted_triangles(spec, constraint):
    t = second(spec, 10)
    for n in range(11):
        for k in range(n + 1):
            assert t.entry(n, k) == count_partitions(n, k, constraint)


@pytest.mark.parametrize("spec,constraint", [
    ("Ple(1)", AtMost(1)), ("Ple(2)", AtMost(2)), ("Ple(3)", AtMost(3)),
    ("Pge(2)", AtLeast(2)), ("Pge(3)", AtLeast(3)),
])
def test_cycle_restricted_triangles(spec, constraint):
    t = second(spec, 9)
    for n in range(10):
        for k in range(n + 1):
            assert t.entry(n, k) == count_permutations(n, k, constraint)


def test_lah_triangle():
    t = second("geom", 10)
    for n in range(11):
        for k in range(n + 1):
            assert t.entry(n, k) == count_list_partitions(n, k)


def test_involution_and_pairing_series():
    inv = second("involution", 8)
    for n in range(9):
        assert sum(inv.rows[n]) == count_involutions(n)
    pair = second("pairing", 8)
    for k in range(5):
        double_factorial = prod(range(2 * k - 1, 0, -2))
        assert pair.entry(2 * k, k) == count_pairings(2 * k) == double_factorial


def test_special_totals():
    assert [count_involutions(n) for n in range(8)] == [1, 1, 2, 4, 10, 26, 76, 232]
    assert [count_derangements(n) for n in range(8)] == [1, 0, 1, 2, 9, 44, 265, 1854]
    assert count_pairings(5) == 0
