"""B-Stirling triangles of the first and second kind.

For ``B`` with constant term 1 the first-kind triangle holds the EGF
coefficients of ``(log B)**k / k!`` and the second-kind triangle those of
``(B - 1)**k / k!``.  Two independent routes are provided (series powers and
the column recursion) and they are expected to agree exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .egf import ONE, ZERO, EgfSeries, require_class_b, format_rational, log_series, rational
from .errors import KindMismatch, OrderTooSmall, SizeMismatch


class Kind(str, enum.Enum):
    FIRST = "first"
    SECOND = "second"

    @classmethod
    def parse(cls, value) -> Kind:
        if isinstance(value, Kind):
            return value
        return cls(str(value).lower())


@dataclass(frozen=True)
class StirlingTriangle:
    """Lower-triangular array; ``rows[n][k]`` for ``0 <= k <= n <= nmax``.

    Entries above the diagonal are zero and are not stored.
    """

    kind: Kind
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind.parse(self.kind))
        rows = tuple(tuple(rational(v) for v in row) for row in self.rows)
        for n, row in enumerate(rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")
        object.__setattr__(self, "rows", rows)

    @property
    def nmax(self) -> int:
        return len(self.rows) - 1

    def entry(self, n: int, k: int) -> Fraction:
        if k < 0 or k > n:
            return ZERO
        return self.rows[n][k]

    def __getitem__(self, nk: tuple[int, int]) -> Fraction:
        return self.entry(*nk)

    def column(self, k: int) -> list[Fraction]:
        return [self.entry(n, k) for n in range(self.nmax + 1)]

    def truncate(self, nmax: int) -> StirlingTriangle:
        if nmax > self.nmax:
            raise OrderTooSmall(f"triangle has nmax {self.nmax}, asked for {nmax}")
        return StirlingTriangle(self.kind, self.rows[: nmax + 1])

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for row in self.rows for v in row)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "nmax": self.nmax,
            "rows": [[format_rational(v) for v in row] for row in self.rows],
        }

    @classmethod
    def from_dict(cls, data: dict) -> StirlingTriangle:
        tri = cls(Kind.parse(data["kind"]), data["rows"])
        if "nmax" in data and data["nmax"] != tri.nmax:
            raise ValueError(f"nmax {data['nmax']} does not match {len(tri.rows)} rows")
        return tri


def identity_triangle(kind, nmax: int) -> StirlingTriangle:
    return StirlingTriangle(
        Kind.parse(kind),
        [[ONE if k == n else ZERO for k in range(n + 1)] for n in range(nmax + 1)],
    )


def _generating_column(b: EgfSeries, kind: Kind, nmax: int) -> EgfSeries:
    """The series whose powers build the triangle: ``log B`` or ``B - 1``."""
    require_class_b(b)
    if nmax > b.order:
        raise OrderTooSmall(f"nmax {nmax} exceeds series order {b.order}")
    b = b.truncate(nmax)
    if kind is Kind.FIRST:
        return log_series(b)
    return b - EgfSeries.one(nmax)


def triangle_from_series(b: EgfSeries, kind, nmax: int) -> StirlingTriangle:
    """Read entries off the powers ``X**k / k!`` of the generating column ``X``."""
    return _triangle_from_series(b, Kind.parse(kind), nmax)


@lru_cache(maxsize=2048)
def _triangle_from_series(b: EgfSeries, kind: Kind, nmax: int) -> StirlingTriangle:
    x = _generating_column(b, kind, nmax)
    rows = [[ZERO] * (n + 1) for n in range(nmax + 1)]
    power = EgfSeries.one(nmax)
    for k in range(nmax + 1):
        if k:
            power = (power * x) * Fraction(1, k)
        for n in range(k, nmax + 1):
            rows[n][k] = power[n]
    return StirlingTriangle(kind, rows)


def triangle_recursive(
    b: EgfSeries, kind, nmax: int, *, binomial_weights: bool = True
) -> StirlingTriangle:
    """Column-by-column recursion from column 1.

    ``T(n, k) = (1/k) sum_{j=k-1}^{n-1} C(n, j) T(j, k-1) T(n-j, 1)``.

    ``binomial_weights=False`` drops ``C(n, j)`` from the first-kind sum.  That
    variant does not reproduce :func:`triangle_from_series`; it exists so the
    test suite can pin the disagreement down.
    """
    kind = Kind.parse(kind)
    x = _generating_column(b, kind, nmax)
    weighted = binomial_weights or kind is Kind.SECOND
    rows = [[ZERO] * (n + 1) for n in range(nmax + 1)]
    rows[0][0] = ONE
    for n in range(1, nmax + 1):
        rows[n][1] = x[n]
    for k in range(2, nmax + 1):
        inv_k = Fraction(1, k)
        for n in range(k, nmax + 1):
            acc = ZERO
            for j in range(k - 1, n):
                term = rows[j][k - 1] * rows[n - j][1]
                acc += comb(n, j) * term if weighted else term
            rows[n][k] = inv_k * acc
    return StirlingTriangle(kind, rows)


@lru_cache(maxsize=None)
def classical_first(nmax: int) -> StirlingTriangle:
    """Signed Stirling numbers of the first kind, ``s(n+1,k) = s(n,k-1) - n s(n,k)``."""
    rows = [[1]]
    for n in range(nmax):
        prev = rows[-1] + [0]
        rows.append([(prev[k - 1] if k else 0) - n * prev[k] for k in range(n + 2)])
    return StirlingTriangle(Kind.FIRST, rows)


@lru_cache(maxsize=None)
def classical_second(nmax: int) -> StirlingTriangle:
    """Stirling numbers of the second kind, ``S(n+1,k) = S(n,k-1) + k S(n,k)``."""
    rows = [[1]]
    for n in range(nmax):
        prev = rows[-1] + [0]
        rows.append([(prev[k - 1] if k else 0) + k * prev[k] for k in range(n + 2)])
    return StirlingTriangle(Kind.SECOND, rows)


def lower_matmul(left: StirlingTriangle, right: StirlingTriangle, kind) -> StirlingTriangle:
    """``(left @ right)(n, k) = sum_{j=k}^{n} left(n, j) right(j, k)``."""
    if left.nmax != right.nmax:
        raise SizeMismatch(f"nmax {left.nmax} vs {right.nmax}")
    nmax = left.nmax
    lr, rr = left.rows, right.rows
    rows = []
    for n in range(nmax + 1):
        row = []
        for k in range(n + 1):
            row.append(sum((lr[n][j] * rr[j][k] for j in range(k, n + 1)), ZERO))
        rows.append(row)
    return StirlingTriangle(Kind.parse(kind), rows)


def _expect_kind(tri: StirlingTriangle, kind: Kind, what: str) -> None:
    if tri.kind is not kind:
        raise KindMismatch(f"{what} must be a {kind.value}-kind triangle, got {tri.kind.value}")


def convert_second_to_first(second: StirlingTriangle) -> StirlingTriangle:
    _expect_kind(second, Kind.SECOND, "input")
    return lower_matmul(second, classical_first(second.nmax), Kind.FIRST)


def convert_first_to_second(first: StirlingTriangle) -> StirlingTriangle:
    _expect_kind(first, Kind.FIRST, "input")
    return lower_matmul(first, classical_second(first.nmax), Kind.SECOND)


def compose_circ_triangles(kind, t_b: StirlingTriangle, t_c_second: StirlingTriangle) -> StirlingTriangle:
    """Triangle of ``circ(B, C)`` from the ``kind`` triangle of B and S_C."""
    kind = Kind.parse(kind)
    _expect_kind(t_b, kind, "T_B")
    _expect_kind(t_c_second, Kind.SECOND, "T_C")
    return lower_matmul(t_c_second, t_b, kind)


def compose_diamond_triangles(kind, t_b: StirlingTriangle, t_c_first: StirlingTriangle) -> StirlingTriangle:
    """Triangle of ``diamond(B, C)`` from the ``kind`` triangle of B and s_C."""
    kind = Kind.parse(kind)
    _expect_kind(t_b, kind, "T_B")
    _expect_kind(t_c_first, Kind.FIRST, "T_C")
    return lower_matmul(t_c_first, t_b, kind)


def diagonal_law_holds(tri: StirlingTriangle) -> bool:
    """``T(k, k) == T(1, 1)**k`` along the whole diagonal."""
    if tri.nmax == 0:
        return tri.rows[0][0] == 1
    base = tri.rows[1][1]
    return all(tri.rows[k][k] == base**k for k in range(tri.nmax + 1))

