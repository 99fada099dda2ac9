"""Partial and complete Bell polynomials evaluated at rational arguments.

``B_{n,k}(x_1, x_2, ...)`` is the second-kind Stirling number of the series
``C(z) = 1 + sum x_m z^m / m!`` and the complete polynomial ``B_n`` is the row
sum.  :func:`bell_oracle` recomputes both by enumerating set partitions.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod
from typing import Optional, Sequence

from .catalog import build
from .egf import ZERO, rational
from .errors import BadIndices, TooLarge
from .oracles import MAX_PARTITION_N, partition_profiles
from .stirling import Kind, StirlingTriangle, triangle_from_series


def bell_arguments(values: Sequence) -> tuple[Fraction, ...]:
    args = tuple(rational(v) for v in values)
    if not args:
        raise ValueError("Bell arguments need at least x_1")
    return args


def parse_bell_arguments(text: str) -> tuple[Fraction, ...]:
    """``"1,1,2/3"`` -> ``(1, 1, 2/3)``."""
    return bell_arguments(part for part in text.split(",") if part.strip())


def _triangle(args: Sequence, n: int) -> StirlingTriangle:
    # Arguments beyond x_n never enter row n; shorter vectors are zero-extended.
    return triangle_from_series(build("bellargs", bell_arguments(args)[: max(n, 1)], n), Kind.SECOND, n)


def partial_bell(args: Sequence, n: int, k: int) -> Fraction:
    if not 1 <= k <= n:
        raise BadIndices(f"partial Bell polynomial needs 1 <= k <= n, got n={n}, k={k}")
    return _triangle(args, n).entry(n, k)


def partial_bell_row(args: Sequence, n: int) -> list[Fraction]:
    """``[B_{n,0}, ..., B_{n,n}]`` from one triangle (``B_{n,0} = [n == 0]``)."""
    return list(_triangle(args, n).rows[n])


def complete_bell(args: Sequence, n: int) -> Fraction:
    if n < 0:
        raise BadIndices("n must be nonnegative")
    return sum(partial_bell_row(args, n), ZERO)


def bell_oracle(args: Sequence, n: int, k: Optional[int] = None) -> Fraction:
    """Sum over set partitions of ``[n]`` of ``prod_blocks x_{|block|}``.

    Restricted to partitions with exactly ``k`` blocks unless ``k`` is None.
    """
    if n > MAX_PARTITION_N:
        raise TooLarge(f"n={n} exceeds the enumeration limit {MAX_PARTITION_N}")
    xs = bell_arguments(args)

    def x(size):
        return xs[size - 1] if size <= len(xs) else ZERO

    total = ZERO
    for sizes, count in partition_profiles(n).items():
        if k is not None and len(sizes) != k:
            continue
        total += count * prod((x(s) for s in sizes), start=Fraction(1))
    return total
