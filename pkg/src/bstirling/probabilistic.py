"""Probabilistic Stirling numbers attached to a random variable ``Y``.

``B(z) = E exp(zY)`` is the moment generating function of ``Y``.  Then
``s_Y(n, k) = (-1)**(n-k) s_B(n, k)``, ``S_Y(n, k) = S_B(n, k)``, and the
potential polynomial at an integer ``m`` is the n-th moment of the sum of ``m``
independent copies of ``Y``.

Only distributions with exact rational moments are supported: finite support
with rational points and probabilities, and Poisson with rational mean.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial, prod
from typing import Union

from .egf import ZERO, EgfSeries, exp_series, rational
from .errors import BadDistribution, TooLarge
from .potential import evaluate, potential
from .stirling import Kind, StirlingTriangle, triangle_from_series

MAX_OUTCOMES = 10**6


@dataclass(frozen=True)
class FiniteSupport:
    points: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        pts = tuple((rational(v), rational(p)) for v, p in self.points)
        if not pts:
            raise BadDistribution("finite support needs at least one point")
        if any(p <= 0 for _, p in pts):
            raise BadDistribution("probabilities must be positive")
        if sum(p for _, p in pts) != 1:
            raise BadDistribution(f"probabilities sum to {sum(p for _, p in pts)}, not 1")
        object.__setattr__(self, "points", pts)

    def __str__(self):
        return "finite:" + ",".join(f"{v}:{p}" for v, p in self.points)


@dataclass(frozen=True)
class Poisson:
    mu: Fraction

    def __post_init__(self):
        mu = rational(self.mu)
        if mu <= 0:
            raise BadDistribution(f"Poisson mean must be positive, got {mu}")
        object.__setattr__(self, "mu", mu)

    def __str__(self):
        return f"poisson:{self.mu}"


DistributionSpec = Union[FiniteSupport, Poisson]


def bernoulli(p) -> FiniteSupport:
    p = rational(p)
    return FiniteSupport(((0, 1 - p), (1, p)))


def point_mass(value) -> FiniteSupport:
    return FiniteSupport(((value, 1),))


def parse_distribution(text: str) -> DistributionSpec:
    """``"finite:0:1/2,1:1/2"`` or ``"poisson:1"``."""
    family, _, rest = text.strip().partition(":")
    try:
        if family == "poisson":
            return Poisson(rational(rest))
        if family == "finite":
            points = []
            for item in rest.split(","):
                value, sep, prob = item.partition(":")
                if not sep:
                    raise BadDistribution(f"expected value:prob, got {item!r}")
                points.append((rational(value), rational(prob)))
            return FiniteSupport(tuple(points))
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, BadDistribution):
            raise
        raise BadDistribution(f"cannot parse distribution {text!r}: {exc}") from None
    raise BadDistribution(f"unknown distribution family {family!r}")


def mgf_series(d: DistributionSpec, order: int) -> EgfSeries:
    """EGF of the moment sequence ``E Y**n``."""
    if isinstance(d, Poisson):
        # exp(mu (e^z - 1))
        return exp_series(EgfSeries([ZERO] + [d.mu] * order))
    return EgfSeries(sum((p * v**n for v, p in d.points), ZERO) for n in range(order + 1))


def probabilistic_triangles(d: DistributionSpec, nmax: int) -> tuple[StirlingTriangle, StirlingTriangle]:
    b = mgf_series(d, nmax)
    first = triangle_from_series(b, Kind.FIRST, nmax)
    signed = [[(-1) ** (n - k) * v for k, v in enumerate(row)] for n, row in enumerate(first.rows)]
    return StirlingTriangle(Kind.FIRST, signed), triangle_from_series(b, Kind.SECOND, nmax)


def moment(d: DistributionSpec, m: int, n: int) -> Fraction:
    """``E W_m**n`` for ``W_m`` a sum of ``m`` independent copies of ``Y``."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    return evaluate(potential(mgf_series(d, n), n), m)


@lru_cache(maxsize=None)
def _sum_law(d: FiniteSupport, m: int) -> dict:
    """Exact law of ``Y_1 + ... + Y_m`` by walking every outcome tuple."""
    if len(d.points) ** m > MAX_OUTCOMES:
        raise TooLarge(f"{len(d.points)}**{m} outcomes exceed {MAX_OUTCOMES}")
    law = defaultdict(Fraction)
    for outcome in product(d.points, repeat=m):
        law[sum((v for v, _ in outcome), ZERO)] += prod((p for _, p in outcome), start=Fraction(1))
    return dict(law)


def moment_oracle(d: FiniteSupport, m: int, n: int) -> Fraction:
    if not isinstance(d, FiniteSupport):
        raise BadDistribution("the enumeration oracle needs a finite-support distribution")
    return sum((p * w**n for w, p in _sum_law(d, m).items()), ZERO)


def stirling_from_moments(d: FiniteSupport, nmax: int) -> StirlingTriangle:
    """Second-kind triangle from alternating sums of enumerated moments."""
    rows = []
    for n in range(nmax + 1):
        moments = [moment_oracle(d, j, n) for j in range(n + 1)]
        rows.append([
            sum((comb(r, j) * (-1) ** (r - j) * moments[j] for j in range(r + 1)), ZERO)
            / factorial(r)
            for r in range(n + 1)
        ])
    return StirlingTriangle(Kind.SECOND, rows)
