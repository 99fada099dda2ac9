"""Counts of size-restricted set partitions, permutations and list partitions.

Each count comes from exhaustive enumeration (see :mod:`bstirling.oracles`)
and is meant to be compared with the second-kind triangle of the matching
catalog series: ``cosh`` for even blocks, ``Rle``/``Rge`` for bounded blocks,
``Ple``/``Pge`` for bounded cycles and ``geom`` for ordered lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod

from .errors import TooLarge
from .oracles import MAX_PARTITION_N, MAX_PERMUTATION_N, partition_profiles, permutation_profiles

MAX_LIST_PARTITION_N = 10


class SizeConstraint:
    def allows(self, size: int) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class AtMost(SizeConstraint):
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be at least 1")

    def allows(self, size):
        return size <= self.m


@dataclass(frozen=True)
class AtLeast(SizeConstraint):
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be at least 1")

    def allows(self, size):
        return size >= self.m


@dataclass(frozen=True)
class EvenOnly(SizeConstraint):
    def allows(self, size):
        return size % 2 == 0


@dataclass(frozen=True)
class ExplicitSet(SizeConstraint):
    sizes: frozenset

    def __post_init__(self):
        sizes = frozenset(self.sizes)
        if not sizes or any(s < 1 for s in sizes):
            raise ValueError("need a nonempty set of positive sizes")
        object.__setattr__(self, "sizes", sizes)

    def allows(self, size):
        return size in self.sizes


def _count(profiles, k: int, c: SizeConstraint) -> int:
    return sum(
        count
        for sizes, count in profiles.items()
        if len(sizes) == k and all(c.allows(s) for s in sizes)
    )


def count_partitions(n: int, k: int, c: SizeConstraint) -> int:
    """Set partitions of ``[n]`` into ``k`` blocks whose sizes all satisfy ``c``."""
    if n > MAX_PARTITION_N:
        raise TooLarge(f"n={n} exceeds {MAX_PARTITION_N}")
    return _count(partition_profiles(n), k, c)


def count_permutations(n: int, k: int, c: SizeConstraint) -> int:
    """Permutations of ``[n]`` with ``k`` cycles whose lengths all satisfy ``c``."""
    if n > MAX_PERMUTATION_N:
        raise TooLarge(f"n={n} exceeds {MAX_PERMUTATION_N}")
    return _count(permutation_profiles(n), k, c)


def count_list_partitions(n: int, k: int) -> int:
    """Partitions of ``[n]`` into ``k`` nonempty linearly ordered lists."""
    if n > MAX_LIST_PARTITION_N:
        raise TooLarge(f"n={n} exceeds {MAX_LIST_PARTITION_N}")
    return sum(
        count * prod(factorial(s) for s in sizes)
        for sizes, count in partition_profiles(n).items()
        if len(sizes) == k
    )


def count_involutions(n: int) -> int:
    """Permutations of ``[n]`` that are their own inverse."""
    return sum(count_permutations(n, k, AtMost(2)) for k in range(n + 1))


def count_derangements(n: int) -> int:
    return sum(count_permutations(n, k, AtLeast(2)) for k in range(n + 1))


def count_pairings(n: int) -> int:
    """Perfect matchings of ``[n]``."""
    return count_partitions(n, n // 2, ExplicitSet({2})) if n % 2 == 0 else 0
