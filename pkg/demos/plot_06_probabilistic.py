"""
Probabilistic Stirling numbers
==============================

A random variable ``Y`` enters through its moment generating function.
Potential polynomials at an integer ``m`` give moments of a sum of ``m``
independent copies of ``Y``.
"""

from fractions import Fraction

from bstirling.probabilistic import (
    FiniteSupport,
    Poisson,
    moment,
    moment_oracle,
    probabilistic_triangles,
    stirling_from_moments,
)

Y = FiniteSupport(((0, Fraction(1, 4)), (1, Fraction(1, 2)), (2, Fraction(1, 4))))
for m in range(4):
    print(f"E W_{m}^n:", [str(moment(Y, m, n)) for n in range(6)])
    assert all(moment(Y, m, n) == moment_oracle(Y, m, n) for n in range(6))

first, second = probabilistic_triangles(Y, 6)
assert second == stirling_from_moments(Y, 6)
print("S_Y rows:", [[str(v) for v in row] for row in second.rows])

# %%
# Poisson(1) has the Bell numbers as moments
_, second = probabilistic_triangles(Poisson(1), 6)
print("Poisson(1) S_Y row sums:", [sum(row) for row in second.rows])
