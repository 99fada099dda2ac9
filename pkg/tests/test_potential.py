from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from bstirling import catalog
from bstirling.egf import EgfSeries, circ, diamond
from bstirling.errors import NotInClassB, OrderTooSmall
from bstirling.potential import (
    PotentialPolynomial,
    coefficient_of_power,
    compose_potential_circ,
    compose_potential_diamond,
    degenerate_falling,
    derivative,
    derivative_expansion,
    difference_expansion,
    evaluate,
    falling_factorial,
    forward_difference,
    forward_difference_pointwise,
    potential,
    sheffer_combine,
)
from bstirling.stirling import Kind, classical_second, triangle_from_series
from conftest import egf_series, z

SPECS = ["I", "E", "Blambda(1/2)", "Blambda(2)", "Clambda(1/2)", "cosh", "geom",
         "involution", "pairing", "Rle(3)", "Rge(2)", "Ple(3)", "Pge(2)"]
x = sympy.Symbol("x")


def P(spec, n, order=None):
    return potential(catalog.series(spec, order or n), n)


def as_sympy(p):
    return sympy.expand(sum(sympy.Rational(str(c)) * x**k for k, c in enumerate(p.monomial)))


def test_potential_examples():
    assert P("E", 3).monomial == (0, 0, 0, 1)
    assert P("I", 3).monomial == (0, 2, -3, 1)
    assert P("I", 3).falling == (0, 0, 0, 1)
    assert P("Blambda(1/3)", 2).monomial == (0, Fraction(-1, 3), 1)


def test_potential_is_coefficient_of_power():
    # P_n(B; x) against the n-th EGF coefficient of B^x computed by sympy
    b = catalog.series("cosh", 6)
    expected = sympy.series(sympy.cosh(z) ** x, z, 0, 7).removeO()
    for n in range(7):
        coeff = sympy.expand(expected.coeff(z, n) * sympy.factorial(n))
        assert sympy.simplify(as_sympy(potential(b, n)) - coeff) == 0


def test_potential_errors():
    with pytest.raises(NotInClassB):
        potential(EgfSeries([2, 1, 0]), 2)
    with pytest.raises(OrderTooSmall):
        potential(EgfSeries([1, 1]), 3)


def test_bases_must_agree():
    with pytest.raises(ValueError):
        PotentialPolynomial((0, 1), (0, 2))
    p = PotentialPolynomial.from_falling([0, 0, 1])
    assert p.monomial == (0, -1, 1)


def test_evaluate_examples():
    assert evaluate(P("E", 3), 2) == 8
    assert evaluate(P("I", 3), 3) == 6
    p = P("geom", 4)
    assert evaluate(p, 0) == p.monomial[0]
    assert p(Fraction(1, 2)) == evaluate(p, "1/2")


def test_falling_factorials():
    assert falling_factorial(5, 3) == 60
    assert degenerate_falling(2, 3, 0) == 8
    assert degenerate_falling(1, 2, Fraction(1, 2)) == Fraction(1, 2)
    assert degenerate_falling(7, 0, 3) == 1


@given(st.fractions(max_denominator=12), st.integers(0, 8),
       st.fractions(max_denominator=12).filter(lambda v: v != 0))
def test_degenerate_falling_scaling(x0, n, lam):
    assert degenerate_falling(x0, n, lam) == falling_factorial(x0 / lam, n) * lam**n


def test_derivative_examples():
    p = P("E", 3)
    assert derivative(p, 0) == p
    assert derivative(p, 1).monomial == (0, 0, 3)
    assert derivative(p, 4) == PotentialPolynomial.zero()


def test_forward_difference_examples():
    p = P("E", 3)
    assert forward_difference(p, 1).monomial == (1, 3, 3)
    assert forward_difference(p, 4).same_polynomial(PotentialPolynomial.zero())
    assert forward_difference_pointwise(P("I", 3), 3, 0) == 6
    assert forward_difference_pointwise(p, 0, 5) == 125


@pytest.mark.parametrize("spec", SPECS)
def test_constant_terms_reproduce_triangles(spec):
    b = catalog.series(spec, 8)
    s_b = triangle_from_series(b, Kind.FIRST, 8)
    S_b = triangle_from_series(b, Kind.SECOND, 8)
    for n in range(9):
        p = potential(b, n)
        for r in range(n + 1):
            assert evaluate(derivative(p, r), 0) == s_b.entry(n, r)
            assert evaluate(forward_difference(p, r), 0) == S_b.entry(n, r)


@pytest.mark.parametrize("spec", SPECS)
def test_derivative_and_difference_expansions(spec):
    b = catalog.series(spec, 10)
    for n in range(11):
        p = potential(b, n)
        for r in range(n + 1):
            assert derivative(p, r).same_polynomial(derivative_expansion(b, n, r))
            assert forward_difference(p, r).same_polynomial(difference_expansion(b, n, r))


def test_remark_formula_for_classical_second_kind():
    S = classical_second(10)
    for n in range(11):
        power = PotentialPolynomial.from_monomial([0] * n + [1])
        for r in range(n + 1):
            assert forward_difference_pointwise(power, r, 0) / sympy.factorial(r) == S.entry(n, r)


@settings(max_examples=25, deadline=None)
@given(egf_series(constant=1, min_order=1, max_order=6), st.data())
def test_pointwise_difference_matches_basis_formula(b, data):
    n = data.draw(st.integers(0, b.order))
    r = data.draw(st.integers(0, n + 1))
    x0 = data.draw(st.fractions(max_denominator=6))
    p = potential(b, n)
    assert forward_difference_pointwise(p, r, x0) == sympy.factorial(r) * evaluate(forward_difference(p, r), x0)


@settings(max_examples=25, deadline=None)
@given(egf_series(constant=1, min_order=1, max_order=6), st.integers(-3, 5))
def test_potential_at_integers_matches_series_power(b, m):
    for n in range(b.order + 1):
        assert evaluate(potential(b, n), m) == coefficient_of_power(b, m, n)


def test_sheffer_examples():
    b = catalog.series("geom", 5)
    assert sheffer_combine(EgfSeries.one(5), b, 4).same_polynomial(potential(b, 4))
    e = catalog.series("E", 4)
    assert sheffer_combine(e, e, 2).monomial == (1, 2, 1)
    assert sheffer_combine(e, e, 0).monomial == (1,)
    with pytest.raises(NotInClassB):
        sheffer_combine(e, EgfSeries([0, 1, 0]), 1)


def test_sheffer_accepts_any_a():
    a = EgfSeries([3, 0, 1])
    b = catalog.series("E", 2)
    # 3 e^(xz) + z^2/2 e^(xz): second coefficient 3x^2 + 1
    assert sheffer_combine(a, b, 2).monomial == (1, 0, 3)


def test_compose_potential_examples():
    n = 6
    b = catalog.series("cosh", n)
    assert compose_potential_circ(b, catalog.series("I", n), n).same_polynomial(potential(b, n))
    c = catalog.series("geom", n)
    S_c = triangle_from_series(c, Kind.SECOND, n)
    assert compose_potential_circ(catalog.series("E", n), c, n).monomial == S_c.rows[n]
    got = compose_potential_diamond(catalog.series("Blambda(1/2)", n), catalog.series("Clambda(1/2)", n), n)
    assert got.falling == (0,) * n + (1,)


@pytest.mark.parametrize("b_spec,c_spec", [("E", "cosh"), ("geom", "Blambda(2)"), ("Rle(3)", "Pge(2)"),
                                           ("involution", "Clambda(1/2)")])
def test_compose_potential_matches_direct(b_spec, c_spec):
    n = 8
    b, c = catalog.series(b_spec, n), catalog.series(c_spec, n)
    for m in range(n + 1):
        assert compose_potential_circ(b, c, m).same_polynomial(potential(circ(b, c), m))
        assert compose_potential_diamond(b, c, m).same_polynomial(potential(diamond(b, c), m))


def test_polynomial_json_and_pretty():
    p = P("I", 2)
    data = p.to_dict()
    assert data == {"degree": 2, "monomial": ["0", "-1", "1"], "falling": ["0", "0", "1"]}
    assert PotentialPolynomial.from_dict(data) == p
    assert "x^2" in p.pretty()
    assert p.pretty("falling") != p.pretty()
