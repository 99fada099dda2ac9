"""
Bell polynomials at rational points
===================================

Partial Bell polynomials are second-kind numbers of
``1 + sum x_m z^m / m!``; an enumeration over set partitions checks them.
"""

from fractions import Fraction

from bstirling import bell_oracle, complete_bell, partial_bell

args = [Fraction(1), Fraction(-1, 2), Fraction(2, 3), Fraction(3)]
for n in range(1, 6):
    row = [partial_bell(args, n, k) for k in range(1, n + 1)]
    print(f"B_{n},k:", [str(v) for v in row])
    assert row == [bell_oracle(args, n, k) for k in range(1, n + 1)]

ones = [1] * 10
print("Bell numbers:", [int(complete_bell(ones, n)) for n in range(11)])
