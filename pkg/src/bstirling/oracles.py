"""Brute-force enumeration of set partitions and permutations.

Nothing in here touches the series machinery: the point of these functions is
to count raw combinatorial objects so the algebraic results can be checked
against them.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations
from typing import Iterator

from .errors import TooLarge

MAX_PARTITION_N = 12
MAX_PERMUTATION_N = 9


def set_partitions(n: int) -> Iterator[list[int]]:
    """Restricted-growth strings of length ``n``: ``a[0] = 0`` and
    ``a[i] <= 1 + max(a[:i])``.  Each one labels a set partition of ``[n]``."""
    if n == 0:
        yield []
        return
    rgs = [0] * n
    maxes = [0] * n
    while True:
        yield list(rgs)
        i = n - 1
        while i > 0 and rgs[i] > maxes[i - 1]:
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        maxes[i] = max(maxes[i - 1], rgs[i])
        for j in range(i + 1, n):
            rgs[j] = 0
            maxes[j] = maxes[i]


def block_sizes(rgs: list[int]) -> tuple[int, ...]:
    return tuple(sorted(Counter(rgs).values()))


@lru_cache(maxsize=None)
def partition_profiles(n: int) -> Counter:
    """How many set partitions of ``[n]`` have each sorted block-size tuple."""
    if n > MAX_PARTITION_N:
        raise TooLarge(f"refusing to enumerate set partitions of {n} > {MAX_PARTITION_N} elements")
    return Counter(block_sizes(rgs) for rgs in set_partitions(n))


def cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


@lru_cache(maxsize=None)
def permutation_profiles(n: int) -> Counter:
    """How many permutations of ``[n]`` have each sorted cycle-length tuple."""
    if n > MAX_PERMUTATION_N:
        raise TooLarge(f"refusing to enumerate {n}! > {MAX_PERMUTATION_N}! permutations")
    return Counter(cycle_type(p) for p in permutations(range(n)))
