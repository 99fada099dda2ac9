"""
Restricted partitions and permutations
======================================

Truncating ``e^z`` or ``-log(1 - z)`` restricts block or cycle sizes.  The
second-kind triangle of the truncated series counts the restricted objects,
which we confirm by brute force.
"""

from bstirling import Kind, series, triangle_from_series
from bstirling.restricted import AtLeast, EvenOnly, count_partitions, count_permutations

n = 8
even = triangle_from_series(series("cosh", n), Kind.SECOND, n)
print("partitions into even blocks, n=8:", [int(v) for v in even.rows[n]])
assert all(even.entry(n, k) == count_partitions(n, k, EvenOnly()) for k in range(n + 1))

no_fixed = triangle_from_series(series("Pge(2)", n), Kind.SECOND, n)
print("derangements of 1..8 by cycle count:", [int(v) for v in no_fixed.rows[n]])
assert all(no_fixed.entry(n, k) == count_permutations(n, k, AtLeast(2)) for k in range(n + 1))
print("total derangements:", sum(no_fixed.rows[n]))
