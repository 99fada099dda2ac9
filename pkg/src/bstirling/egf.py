"""Truncated exponential generating functions over the rationals.

A series is stored by its taylor coefficients ``U_0 .. U_N`` so that it stands
for ``sum U_n z**n / n!`` up to ``O(z**(N+1))``.  Every operation returns a
series whose order is the minimum of its inputs' orders; nothing is ever
extended past what the inputs determine.

Scalars are :class:`fractions.Fraction`, which keeps everything exact and in
lowest terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from numbers import Rational
from typing import Iterable, Sequence

from .errors import NonzeroConstantTerm, NotInClassB

ZERO = Fraction(0)
ONE = Fraction(1)


def rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: they would smuggle rounding into exact data.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"not an exact rational literal: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(q: Fraction) -> str:
    """Canonical ``num/den`` text, denominator omitted when it is 1."""
    return str(q)


@dataclass(frozen=True)
class EgfSeries:
    """Truncated EGF with exact coefficients ``coeffs[n] = U_n``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable):
        cs = tuple(rational(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    @property
    def in_class_b(self) -> bool:
        return self.coeffs[0] == 1

    def truncate(self, order: int) -> EgfSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return EgfSeries(self.coeffs[: order + 1])

    def ordinary(self) -> list[Fraction]:
        """Ordinary power-series coefficients ``U_n / n!``."""
        return [c / factorial(n) for n, c in enumerate(self.coeffs)]

    @classmethod
    def from_ordinary(cls, coeffs: Sequence) -> EgfSeries:
        return cls(rational(c) * factorial(n) for n, c in enumerate(coeffs))

    @classmethod
    def constant(cls, value, order: int) -> EgfSeries:
        return cls([rational(value)] + [ZERO] * order)

    @classmethod
    def zero(cls, order: int) -> EgfSeries:
        return cls.constant(0, order)

    @classmethod
    def one(cls, order: int) -> EgfSeries:
        return cls.constant(1, order)

    @classmethod
    def variable(cls, order: int) -> EgfSeries:
        """The series ``z`` (zero when ``order`` is 0)."""
        coeffs = [ZERO] * (order + 1)
        if order >= 1:
            coeffs[1] = ONE
        return cls(coeffs)

    def __add__(self, other):
        if not isinstance(other, EgfSeries):
            return NotImplemented
        return add(self, other)

    def __neg__(self):
        return EgfSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, EgfSeries):
            return NotImplemented
        return add(self, -other)

    def __mul__(self, other):
        if isinstance(other, EgfSeries):
            return binomial_convolution(self, other)
        try:
            factor = rational(other)
        except TypeError:
            return NotImplemented
        return EgfSeries(factor * c for c in self.coeffs)

    def __rmul__(self, other):
        return self.__mul__(other)

    def to_dict(self) -> dict:
        return {"order": self.order, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_dict(cls, data: dict) -> EgfSeries:
        coeffs = [rational(c) for c in data["coeffs"]]
        if "order" in data and data["order"] != len(coeffs) - 1:
            raise ValueError(
                f"order {data['order']} does not match {len(coeffs)} coefficients"
            )
        return cls(coeffs)


def require_class_b(*series: EgfSeries) -> None:
    for s in series:
        if s.coeffs[0] != 1:
            raise NotInClassB(f"constant term is {s.coeffs[0]}, expected 1")


def require_zero_constant(s: EgfSeries) -> None:
    if s.coeffs[0] != 0:
        raise NonzeroConstantTerm(f"constant term is {s.coeffs[0]}, expected 0")


def add(a: EgfSeries, b: EgfSeries) -> EgfSeries:
    n = min(a.order, b.order)
    return EgfSeries(a.coeffs[i] + b.coeffs[i] for i in range(n + 1))


def binomial_convolution(a: EgfSeries, b: EgfSeries) -> EgfSeries:
    """Product of two EGFs: ``(a x b)_n = sum_j C(n, j) a_j b_(n-j)``."""
    order = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for n in range(order + 1):
        out.append(sum((comb(n, j) * ac[j] * bc[n - j] for j in range(n + 1)), ZERO))
    return EgfSeries(out)


def log_series(b: EgfSeries) -> EgfSeries:
    """Formal logarithm of a series with constant term 1."""
    require_class_b(b)
    u = b.coeffs
    logs = [ZERO]
    # B' = B L' gives U_n = sum_{j=1}^{n} C(n-1, j-1) L_j U_(n-j).
    for n in range(1, b.order + 1):
        acc = u[n]
        for j in range(1, n):
            acc -= comb(n - 1, j - 1) * logs[j] * u[n - j]
        logs.append(acc)
    return EgfSeries(logs)


def exp_series(a: EgfSeries) -> EgfSeries:
    """Formal exponential of a series with constant term 0."""
    require_zero_constant(a)
    l = a.coeffs
    u = [ONE]
    for n in range(1, a.order + 1):
        u.append(sum((comb(n - 1, j - 1) * l[j] * u[n - j] for j in range(1, n + 1)), ZERO))
    return EgfSeries(u)


def pow_scalar(b: EgfSeries, alpha) -> EgfSeries:
    """``b ** alpha`` for any rational exponent, via ``exp(alpha * log b)``."""
    require_class_b(b)
    return exp_series(rational(alpha) * log_series(b))


def substitute(b: EgfSeries, g: EgfSeries) -> EgfSeries:
    """Composition ``b(g(z))`` for ``g`` with zero constant term."""
    require_zero_constant(g)
    order = min(b.order, g.order)
    outer = b.truncate(order).ordinary()
    inner = g.truncate(order).ordinary()
    acc = [outer[order]] + [ZERO] * order
    for coeff in reversed(outer[:order]):
        acc = _poly_mul_truncated(acc, inner, order)
        acc[0] += coeff
    return EgfSeries.from_ordinary(acc)


def _poly_mul_truncated(p: list, q: list, order: int) -> list:
    out = [ZERO] * (order + 1)
    for i, pi in enumerate(p):
        if not pi:
            continue
        for j in range(order + 1 - i):
            if q[j]:
                out[i + j] += pi * q[j]
    return out


def circ(b: EgfSeries, c: EgfSeries) -> EgfSeries:
    """``B(C(z) - 1)``; the identity element is ``1 + z``."""
    require_class_b(b, c)
    return substitute(b, c - EgfSeries.one(c.order))


def diamond(b: EgfSeries, c: EgfSeries) -> EgfSeries:
    """``B(log C(z))``; the identity element is ``e**z``."""
    require_class_b(b, c)
    return substitute(b, log_series(c))
