from fractions import Fraction
from math import factorial

import pytest
import sympy
from hypothesis import strategies as st

from bstirling.egf import EgfSeries

ACCEPTANCE_LINES = []

z = sympy.Symbol("z")


def taylor_egf(expr, order):
    """EGF coefficients of a closed-form expression, computed by sympy."""
    poly = sympy.series(expr, z, 0, order + 1).removeO()
    return [Fraction(str(sympy.Rational(poly.coeff(z, n)) * factorial(n))) for n in range(order + 1)]


small_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@st.composite
def egf_series(draw, constant=None, min_order=0, max_order=7, order=None):
    if order is None:
        order = draw(st.integers(min_order, max_order))
    coeffs = draw(st.lists(small_rationals, min_size=order + 1, max_size=order + 1))
    if constant is not None:
        coeffs[0] = Fraction(constant)
    return EgfSeries(coeffs)


@pytest.fixture
def record_acceptance():
    def record(label, passed, detail=""):
        ACCEPTANCE_LINES.append(f"{'PASS' if passed else 'FAIL'} {label}" + (f"  [{detail}]" if detail else ""))
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# Series specifications used for parser round trips; mixes spacing, signs and nesting.
ROUND_TRIP_SPECS = [
    "I", "E", "cosh", "geom", "involution", "pairing",
    "Blambda(1/2)", "Blambda(-1/3)", "Blambda( 2 )", "Clambda(1/2)", "Clambda(-2)", "Clambda(3/6)",
    "Rle(3)", "Rge(2)", "Ple(1)", "Pge(4)", "bellargs(1,1,2/3)", "bellargs(-1/2)", "custom(1,0,-1,1/2)",
    "circ(E,E)", "circ( E , Blambda(1/3) )", "diamond(Blambda(1/2),Clambda(1/2))",
    "diamond(E,geom)", "circ(I,Blambda(2))", "circ(circ(E,cosh),Rge(2))",
    "diamond(circ(Clambda(1/2),Blambda(1/2)),Pge(2))", "circ(geom,diamond(E,Ple(3)))",
    "diamond(diamond(cosh,E),circ(I,I))", "circ(bellargs(1,2),custom(1,1))",
    "\tcirc(\ncosh,\tinvolution)  ",
]
