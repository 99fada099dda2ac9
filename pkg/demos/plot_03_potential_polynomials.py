"""
Potential polynomials
=====================

``P_n(B; x)`` is the n-th EGF coefficient of ``B(z)**x``.  Its monomial
coefficients are first-kind numbers and its falling-factorial coefficients
are second-kind numbers.
"""

from bstirling import series
from bstirling.potential import coefficient_of_power, derivative, evaluate, forward_difference, potential

B = series("Rge(2)", 8)
for n in range(6):
    p = potential(B, n)
    print(f"P_{n}(x) = {p.pretty()}")
    print(f"       = {p.pretty('falling')}")

# %%
# Integer arguments are powers of the series
p = potential(B, 6)
for m in range(-2, 4):
    assert evaluate(p, m) == coefficient_of_power(B, m, 6)
print("P_6 at x = -2..3:", [str(evaluate(p, m)) for m in range(-2, 4)])

# %%
# Derivatives and forward differences at 0 read off the two triangles
print("derivatives at 0 :", [str(evaluate(derivative(p, r), 0)) for r in range(7)])
print("differences at 0 :", [str(evaluate(forward_difference(p, r), 0)) for r in range(7)])
print("difference of order 7 is", forward_difference(p, 7).pretty())
