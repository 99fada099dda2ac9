"""
Exponential generating functions with exact coefficients
========================================================

Series are stored by their EGF coefficients ``U_n``, so ``e^z`` is all ones.
"""

from fractions import Fraction

from bstirling import EgfSeries, binomial_convolution, circ, diamond, exp_series, log_series, pow_scalar, series

# e^z and 1 + z, truncated at order 8
E = series("E", 8)
I = series("I", 8)
print("E         ", [str(c) for c in E.coeffs])
print("I         ", [str(c) for c in I.coeffs])

# products of EGFs are binomial convolutions: e^z * e^z = e^(2z)
print("E*E       ", [str(c) for c in binomial_convolution(E, E).coeffs])

# log(1 + z) and back again
L = log_series(I)
print("log I     ", [str(c) for c in L.coeffs])
assert exp_series(L) == I

# rational powers stay exact
root = pow_scalar(I, Fraction(1, 2))
print("sqrt(1+z) ", [str(c) for c in root.coeffs])

# %%
# The two inner operations.  ``circ(B, C) = B(C - 1)`` has identity I and
# ``diamond(B, C) = B(log C)`` has identity E.  Composing e^z with itself
# gives the Bell numbers.
bell = circ(E, E)
print("circ(E,E) ", [int(c) for c in bell.coeffs])
assert circ(bell, I) == bell and diamond(bell, E) == bell

# arbitrary rational coefficients are fine as long as U_0 = 1
B = EgfSeries([1, Fraction(-2, 3), 5, 0, 1, 0, 0, 0, 0])
print("B(e^z - 1)", [str(c) for c in circ(B, E).coeffs])
