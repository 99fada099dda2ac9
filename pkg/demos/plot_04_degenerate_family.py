"""
The degenerate exponential pair
===============================

``Blambda(l) = (1 + l z)**(1/l)`` and ``Clambda(l) = exp(((1 + z)**l - 1)/l)``
undo each other under both inner operations.
"""

from fractions import Fraction

from bstirling import Kind, circ, classical_first, degenerate_falling, diamond, potential, series, triangle_from_series

lam = Fraction(1, 2)
B = series(f"Blambda({lam})", 10)
C = series(f"Clambda({lam})", 10)
print("circ(C, B) == E:", circ(C, B) == series("E", 10))
print("diamond(B, C) == I:", diamond(B, C) == series("I", 10))

# %%
# First-kind numbers of Blambda are scaled classical ones
s = classical_first(10)
t = triangle_from_series(B, Kind.FIRST, 10)
print("s_B(n,k) = lam^(n-k) s(n,k):",
      all(t.entry(n, k) == lam ** (n - k) * s.entry(n, k) for n in range(11) for k in range(n + 1)))

# %%
# Potential polynomials of Blambda are degenerate falling factorials
for n in range(5):
    p = potential(B, n)
    print(f"P_{n}(Blambda; x) = {p.pretty()}")
    assert all(p(x) == degenerate_falling(x, n, lam) for x in range(-3, 4))
