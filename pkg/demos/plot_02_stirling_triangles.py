"""
Stirling triangles attached to a series
=======================================

Every series with constant term 1 has a first-kind and a second-kind
triangle.  Two independent routes compute them and must agree.
"""

from bstirling import (
    Kind,
    classical_first,
    classical_second,
    convert_second_to_first,
    series,
    triangle_from_series,
    triangle_recursive,
)


def show(title, tri):
    print(title)
    for n, row in enumerate(tri.rows):
        print(f"  {n:2d}: " + " ".join(f"{str(v):>6}" for v in row))


# 1 + z gives the signed first-kind numbers, e^z the second-kind ones
show("first kind of I", triangle_from_series(series("I", 6), Kind.FIRST, 6))
show("second kind of E", triangle_from_series(series("E", 6), Kind.SECOND, 6))

# %%
# Lah numbers come from 1/(1 - z)
geom = series("geom", 6)
lah = triangle_from_series(geom, Kind.SECOND, 6)
show("second kind of geom", lah)
assert triangle_recursive(geom, Kind.SECOND, 6) == lah

# %%
# Multiplying by the classical triangle converts one kind into the other
B = series("circ(cosh,Blambda(1/2))", 8)
first = triangle_from_series(B, Kind.FIRST, 8)
assert convert_second_to_first(triangle_from_series(B, Kind.SECOND, 8)) == first
show("first kind of circ(cosh, Blambda(1/2))", first)

# the classical triangles are inverse to each other
n = 10
s, S = classical_first(n), classical_second(n)
print("S s = identity:", all(
    sum(S.entry(i, j) * s.entry(j, k) for j in range(n + 1)) == (i == k)
    for i in range(n + 1) for k in range(n + 1)
))
