"""Potential polynomials ``P_n(B; x)``, the EGF coefficients of ``B(z)**x``.

A :class:`PotentialPolynomial` carries its coefficients in the monomial basis
``x**k`` and in the falling-factorial basis ``(x)_k`` at the same time; for a
polynomial built from a series these are exactly the first- and second-kind
B-Stirling numbers of row ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .egf import ZERO, EgfSeries, format_rational, pow_scalar, rational, require_class_b
from .errors import OrderTooSmall
from .stirling import Kind, classical_first, classical_second, triangle_from_series


def _falling_to_monomial(falling: Sequence[Fraction]) -> list[Fraction]:
    # (x)_k = sum_j s(k, j) x^j
    n = len(falling) - 1
    s = classical_first(n)
    return [sum((falling[k] * s.entry(k, j) for k in range(j, n + 1)), ZERO) for j in range(n + 1)]


def _monomial_to_falling(monomial: Sequence[Fraction]) -> list[Fraction]:
    # x^j = sum_k S(j, k) (x)_k
    n = len(monomial) - 1
    S = classical_second(n)
    return [sum((monomial[j] * S.entry(j, k) for j in range(k, n + 1)), ZERO) for k in range(n + 1)]


@dataclass(frozen=True)
class PotentialPolynomial:
    """Degree-``n`` polynomial stored in both the monomial and falling bases.

    ``degree`` is the nominal index ``n``; the leading coefficient may vanish.
    """

    monomial: tuple[Fraction, ...]
    falling: tuple[Fraction, ...]

    def __post_init__(self):
        mono = tuple(rational(c) for c in self.monomial)
        fall = tuple(rational(c) for c in self.falling)
        if not mono or len(mono) != len(fall):
            raise ValueError("both bases need the same nonzero number of coefficients")
        if list(mono) != _falling_to_monomial(fall):
            raise ValueError("monomial and falling-factorial coefficients disagree")
        object.__setattr__(self, "monomial", mono)
        object.__setattr__(self, "falling", fall)

    @property
    def degree(self) -> int:
        return len(self.monomial) - 1

    @classmethod
    def from_monomial(cls, coeffs: Sequence) -> PotentialPolynomial:
        mono = [rational(c) for c in coeffs]
        return cls(tuple(mono), tuple(_monomial_to_falling(mono)))

    @classmethod
    def from_falling(cls, coeffs: Sequence) -> PotentialPolynomial:
        fall = [rational(c) for c in coeffs]
        return cls(tuple(_falling_to_monomial(fall)), tuple(fall))

    @classmethod
    def zero(cls, degree: int = 0) -> PotentialPolynomial:
        z = (ZERO,) * (degree + 1)
        return cls(z, z)

    def __call__(self, x0) -> Fraction:
        return evaluate(self, x0)

    def __add__(self, other: PotentialPolynomial) -> PotentialPolynomial:
        n = max(self.degree, other.degree)
        a = list(self.monomial) + [ZERO] * (n - self.degree)
        b = list(other.monomial) + [ZERO] * (n - other.degree)
        return PotentialPolynomial.from_monomial([x + y for x, y in zip(a, b)])

    def scale(self, factor) -> PotentialPolynomial:
        f = rational(factor)
        return PotentialPolynomial(
            tuple(f * c for c in self.monomial), tuple(f * c for c in self.falling)
        )

    def padded(self, degree: int) -> PotentialPolynomial:
        """Same polynomial with zero coefficients appended up to ``degree``."""
        extra = (ZERO,) * (degree - self.degree)
        return PotentialPolynomial(self.monomial + extra, self.falling + extra)

    def same_polynomial(self, other: PotentialPolynomial) -> bool:
        """Equality as polynomials, ignoring trailing zero coefficients."""
        n = max(self.degree, other.degree)
        return self.padded(n).monomial == other.padded(n).monomial

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "monomial": [format_rational(c) for c in self.monomial],
            "falling": [format_rational(c) for c in self.falling],
        }

    @classmethod
    def from_dict(cls, data: dict) -> PotentialPolynomial:
        poly = cls(tuple(data["monomial"]), tuple(data["falling"]))
        if "degree" in data and data["degree"] != poly.degree:
            raise ValueError("degree does not match coefficient count")
        return poly

    def pretty(self, basis: str = "monomial") -> str:
        if basis == "monomial":
            coeffs, power = self.monomial, lambda k: "x" if k == 1 else f"x^{k}"
        else:
            coeffs, power = self.falling, lambda k: f"(x)_{k}"
        return _pretty_terms(coeffs, power)


def _pretty_terms(coeffs, power) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        elif mag == 1:
            body = power(k)
        elif mag.denominator == 1:
            body = f"{mag}*{power(k)}"
        else:
            body = f"({mag})*{power(k)}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def potential(b: EgfSeries, n: int) -> PotentialPolynomial:
    """``P_n(B; x)`` with monomial coefficients s_B(n, k) and falling S_B(n, k)."""
    return potential_family(b, n)[n]


def evaluate(p: PotentialPolynomial, x0) -> Fraction:
    x0 = rational(x0)
    acc = ZERO
    for c in reversed(p.monomial):
        acc = acc * x0 + c
    return acc


def falling_factorial(x0, n: int) -> Fraction:
    return degenerate_falling(x0, n, 1)


def degenerate_falling(x0, n: int, lam) -> Fraction:
    """``x (x - lam) ... (x - (n-1) lam)``; empty product is 1."""
    x0, lam = rational(x0), rational(lam)
    acc = Fraction(1)
    for i in range(n):
        acc *= x0 - i * lam
    return acc


def derivative(p: PotentialPolynomial, r: int) -> PotentialPolynomial:
    """``p^(r) / r!``; the zero polynomial when ``r`` exceeds the degree."""
    if r < 0:
        raise ValueError("derivative order must be nonnegative")
    n = p.degree
    if r > n:
        return PotentialPolynomial.zero()
    return PotentialPolynomial.from_monomial(
        [comb(k, r) * p.monomial[k] for k in range(r, n + 1)]
    )


def forward_difference(p: PotentialPolynomial, r: int) -> PotentialPolynomial:
    """``Delta**r p / r!`` using ``Delta**r (x)_k / r! = C(k, r) (x)_(k-r)``."""
    if r < 0:
        raise ValueError("difference order must be nonnegative")
    n = p.degree
    if r > n:
        return PotentialPolynomial.zero()
    return PotentialPolynomial.from_falling([comb(k, r) * p.falling[k] for k in range(r, n + 1)])


def forward_difference_pointwise(p: PotentialPolynomial, r: int, x0) -> Fraction:
    """Unnormalised ``Delta**r p(x0)`` as an alternating sum of values."""
    x0 = rational(x0)
    return sum(
        (comb(r, j) * (-1) ** (r - j) * evaluate(p, x0 + j) for j in range(r + 1)), ZERO
    )


def _combine(weights: Sequence[Fraction], polys: Sequence[PotentialPolynomial], degree: int):
    acc = [ZERO] * (degree + 1)
    for w, poly in zip(weights, polys):
        if not w:
            continue
        for k, c in enumerate(poly.monomial):
            acc[k] += w * c
    return PotentialPolynomial.from_monomial(acc)


@lru_cache(maxsize=512)
def potential_family(b: EgfSeries, n: int) -> tuple[PotentialPolynomial, ...]:
    """``[P_0(B; x), ..., P_n(B; x)]`` from a single pair of triangles."""
    require_class_b(b)
    if n > b.order:
        raise OrderTooSmall(f"degree {n} exceeds series order {b.order}")
    first = triangle_from_series(b, Kind.FIRST, n)
    second = triangle_from_series(b, Kind.SECOND, n)
    return tuple(PotentialPolynomial(first.rows[m], second.rows[m]) for m in range(n + 1))


def derivative_expansion(b: EgfSeries, n: int, r: int) -> PotentialPolynomial:
    """``sum_{j=r}^{n} C(n, j) s_B(j, r) P_(n-j)(B; x)``, the cross-check for
    :func:`derivative` applied to ``potential(b, n)``."""
    s_b = triangle_from_series(b, Kind.FIRST, n)
    polys = potential_family(b, n)
    weights = [comb(n, j) * s_b.entry(j, r) for j in range(r, n + 1)]
    return _combine(weights, [polys[n - j] for j in range(r, n + 1)], max(n - r, 0))


def difference_expansion(b: EgfSeries, n: int, r: int) -> PotentialPolynomial:
    """``sum_{j=r}^{n} C(n, j) S_B(j, r) P_(n-j)(B; x)``."""
    S_b = triangle_from_series(b, Kind.SECOND, n)
    polys = potential_family(b, n)
    weights = [comb(n, j) * S_b.entry(j, r) for j in range(r, n + 1)]
    return _combine(weights, [polys[n - j] for j in range(r, n + 1)], max(n - r, 0))


def sheffer_combine(a: EgfSeries, b: EgfSeries, n: int) -> PotentialPolynomial:
    """n-th EGF coefficient of ``A(z) B(z)**x``; ``a`` need not have constant term 1."""
    require_class_b(b)
    if n > min(a.order, b.order):
        raise OrderTooSmall(f"degree {n} exceeds series orders {a.order}, {b.order}")
    polys = potential_family(b, n)
    weights = [comb(n, k) * a[k] for k in range(n + 1)]
    return _combine(weights, [polys[n - k] for k in range(n + 1)], n)


def compose_potential_circ(b: EgfSeries, c: EgfSeries, n: int) -> PotentialPolynomial:
    """``P_n(circ(B, C); x)`` as ``sum_k S_C(n, k) P_k(B; x)``."""
    require_class_b(b, c)
    S_c = triangle_from_series(c, Kind.SECOND, n)
    return _combine(S_c.rows[n], potential_family(b, n), n)


def compose_potential_diamond(b: EgfSeries, c: EgfSeries, n: int) -> PotentialPolynomial:
    """``P_n(diamond(B, C); x)`` as ``sum_k s_C(n, k) P_k(B; x)``."""
    require_class_b(b, c)
    s_c = triangle_from_series(c, Kind.FIRST, n)
    return _combine(s_c.rows[n], potential_family(b, n), n)


def coefficient_of_power(b: EgfSeries, x0, n: int) -> Fraction:
    """n-th EGF coefficient of ``B(z)**x0`` computed directly on the series."""
    return pow_scalar(b.truncate(n), x0)[n]
