from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bstirling.bell import (
    bell_arguments,
    bell_oracle,
    complete_bell,
    parse_bell_arguments,
    partial_bell,
    partial_bell_row,
)
from bstirling.errors import BadIndices, TooLarge
from conftest import small_rationals

arg_vectors = st.lists(small_rationals, min_size=1, max_size=8)


def test_partial_bell_examples():
    assert partial_bell([2, 3], 3, 2) == 18
    args = [Fraction(3, 7), 5, -1]
    for n in range(1, 7):
        assert partial_bell(args, n, n) == args[0] ** n
    assert partial_bell(args, 3, 1) == -1
    assert partial_bell(args, 5, 1) == 0  # zero-extended


def test_partial_bell_index_errors():
    for n, k in [(3, 0), (3, 4), (0, 0), (2, -1)]:
        with pytest.raises(BadIndices):
            partial_bell([1], n, k)


def test_complete_bell_examples():
    assert complete_bell([1] * 4, 4) == 15
    assert complete_bell([7], 0) == 1
    assert complete_bell([1, 0, 0], 3) == 1


def test_oracle_examples():
    assert bell_oracle([1, 1, 1], 3, 2) == 3
    assert bell_oracle([1] * 5, 5) == 52
    assert bell_oracle([Fraction(2, 3)], 4, 4) == Fraction(16, 81)
    with pytest.raises(TooLarge):
        bell_oracle([1], 13)


def test_argument_parsing():
    assert parse_bell_arguments("1,1,2/3") == (1, 1, Fraction(2, 3))
    assert parse_bell_arguments(" -1/2 , 4 ") == (Fraction(-1, 2), 4)
    with pytest.raises(ValueError):
        bell_arguments([])
    with pytest.raises(ValueError):
        parse_bell_arguments("1,0.5")


@settings(max_examples=30, deadline=None)
@given(arg_vectors, st.integers(1, 8))
def test_partial_bell_matches_oracle(args, n):
    row = partial_bell_row(args, n)
    for k in range(1, n + 1):
        assert row[k] == partial_bell(args, n, k) == bell_oracle(args, n, k)
    assert complete_bell(args, n) == bell_oracle(args, n)


@settings(max_examples=30, deadline=None)
@given(arg_vectors, small_rationals, st.integers(1, 7))
def test_partial_bell_is_homogeneous_of_degree_k(args, c, n):
    scaled = [c * x for x in args]
    for k in range(1, n + 1):
        assert partial_bell(scaled, n, k) == c**k * partial_bell(args, n, k)


@settings(max_examples=20, deadline=None)
@given(arg_vectors, small_rationals, st.integers(1, 7))
def test_partial_bell_weight_scaling(args, c, n):
    # x_m -> c^m x_m scales B_{n,k} by c^n
    scaled = [c ** (m + 1) * x for m, x in enumerate(args)]
    for k in range(1, n + 1):
        assert partial_bell(scaled, n, k) == c**n * partial_bell(args, n, k)
