"""Named series families and a tiny expression language over them.

Grammar (whitespace is ignored, names are case-sensitive)::

    expr   := atom | 'circ' '(' expr ',' expr ')' | 'diamond' '(' expr ',' expr ')'
    atom   := NAME [ '(' param { ',' param } ')' ]
    param  := ['-'] INT [ '/' ['-'] INT ]

Examples: ``E``, ``Blambda(1/2)``, ``circ(E, Rge(2))``,
``diamond(Blambda(1/2), Clambda(1/2))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Union

from . import egf
from .egf import ONE, ZERO, EgfSeries, format_rational, rational
from .errors import (
    BadArity,
    BadParameter,
    NotInClassB,
    SeriesSyntaxError,
    UnknownName,
    ZeroLambda,
)

RATIONAL = "rational"
POSITIVE_INT = "positive integer"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: tuple[str, ...]
    builder: Callable[..., EgfSeries]
    variadic: bool = False
    summary: str = ""

    def check(self, params: tuple) -> tuple:
        if self.variadic:
            if not params:
                raise BadArity(f"{self.name} takes at least one parameter")
            kinds = (self.params[0],) * len(params)
        else:
            if len(params) != len(self.params):
                raise BadArity(
                    f"{self.name} takes {len(self.params)} parameter(s), got {len(params)}"
                )
            kinds = self.params
        out = []
        for kind, value in zip(kinds, params):
            value = rational(value)
            if kind == POSITIVE_INT and (value.denominator != 1 or value < 1):
                raise BadParameter(f"{self.name} needs a positive integer, got {value}")
            out.append(int(value) if kind == POSITIVE_INT else value)
        return tuple(out)


def _identity(order):
    return EgfSeries([ONE, ONE][: order + 1] + [ZERO] * (order - 1))


def _exp(order):
    return EgfSeries([ONE] * (order + 1))


def _blambda(order, lam):
    # (1 + lam z)^(1/lam)
    if lam == 0:
        raise ZeroLambda("Blambda needs a nonzero parameter")
    line = EgfSeries([ONE, lam][: order + 1] + [ZERO] * (order - 1))
    return egf.exp_series((1 / lam) * egf.log_series(line))


def _clambda(order, lam):
    # exp(((1 + z)^lam - 1) / lam)
    if lam == 0:
        raise ZeroLambda("Clambda needs a nonzero parameter")
    inner = egf.pow_scalar(_identity(order), lam) - EgfSeries.one(order)
    return egf.exp_series((1 / lam) * inner)


def _from_taylor(order, coeff_at):
    """Series ``1 + sum_{n>=1} coeff_at(n) z^n / n!``."""
    return EgfSeries([ONE] + [rational(coeff_at(n)) for n in range(1, order + 1)])


def _cosh(order):
    return _from_taylor(order, lambda n: 1 if n % 2 == 0 else 0)


def _geom(order):
    return EgfSeries(factorial(n) for n in range(order + 1))


def _involution(order):
    return _from_taylor(order, lambda n: 1 if n <= 2 else 0)


def _pairing(order):
    return _from_taylor(order, lambda n: 1 if n == 2 else 0)


def _rle(order, m):
    return _from_taylor(order, lambda n: 1 if n <= m else 0)


def _rge(order, m):
    return _from_taylor(order, lambda n: 1 if n >= m else 0)


def _ple(order, m):
    # z^i / i has EGF coefficient (i - 1)!
    return _from_taylor(order, lambda n: factorial(n - 1) if n <= m else 0)


def _pge(order, m):
    return _from_taylor(order, lambda n: factorial(n - 1) if n >= m else 0)


def _bellargs(order, *xs):
    return _from_taylor(order, lambda n: xs[n - 1] if n <= len(xs) else 0)


def _custom(order, *coeffs):
    if coeffs[0] != 1:
        raise NotInClassB(f"custom series must start with 1, got {coeffs[0]}")
    return EgfSeries(coeffs[n] if n < len(coeffs) else ZERO for n in range(order + 1))


CATALOG: dict[str, CatalogEntry] = {
    e.name: e
    for e in (
        CatalogEntry("I", (), _identity, summary="1 + z"),
        CatalogEntry("E", (), _exp, summary="e^z"),
        CatalogEntry("Blambda", (RATIONAL,), _blambda, summary="(1 + lambda z)^(1/lambda)"),
        CatalogEntry("Clambda", (RATIONAL,), _clambda, summary="exp(((1 + z)^lambda - 1)/lambda)"),
        CatalogEntry("cosh", (), _cosh, summary="cosh z"),
        CatalogEntry("geom", (), _geom, summary="1/(1 - z)"),
        CatalogEntry("involution", (), _involution, summary="1 + z + z^2/2"),
        CatalogEntry("pairing", (), _pairing, summary="1 + z^2/2"),
        CatalogEntry("Rle", (POSITIVE_INT,), _rle, summary="1 + sum_{i<=m} z^i/i!"),
        CatalogEntry("Rge", (POSITIVE_INT,), _rge, summary="1 + sum_{i>=m} z^i/i!"),
        CatalogEntry("Ple", (POSITIVE_INT,), _ple, summary="1 + sum_{i<=m} z^i/i"),
        CatalogEntry("Pge", (POSITIVE_INT,), _pge, summary="1 + sum_{i>=m} z^i/i"),
        CatalogEntry("bellargs", (RATIONAL,), _bellargs, variadic=True,
                     summary="1 + sum_m x_m z^m/m!"),
        CatalogEntry("custom", (RATIONAL,), _custom, variadic=True,
                     summary="explicit EGF coefficients U_0 = 1, U_1, ..."),
    )
}


def build(name: str, params=(), order: int = 16) -> EgfSeries:
    """Build catalog series ``name`` truncated at ``order``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    try:
        entry = CATALOG[name]
    except KeyError:
        raise UnknownName(f"unknown series {name!r}") from None
    return entry.builder(order, *entry.check(tuple(params)))


# --- expression trees -------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    name: str
    params: tuple = ()

    def __str__(self):
        if not self.params:
            return self.name
        return f"{self.name}({','.join(format_rational(Fraction(p)) for p in self.params)})"


@dataclass(frozen=True)
class Circ:
    left: "SeriesExpr"
    right: "SeriesExpr"

    def __str__(self):
        return f"circ({self.left},{self.right})"


@dataclass(frozen=True)
class Diamond:
    left: "SeriesExpr"
    right: "SeriesExpr"

    def __str__(self):
        return f"diamond({self.left},{self.right})"


SeriesExpr = Union[Atom, Circ, Diamond]

_COMBINATORS = {"circ": Circ, "diamond": Diamond}


class _Parser:
    """Recursive descent over the raw string; ``pos`` is a 0-based index."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message, pos=None):
        raise SeriesSyntaxError(message, (self.pos if pos is None else pos) + 1)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char):
        if self.peek() != char:
            found = repr(self.peek()) if self.peek() else "end of input"
            self.fail(f"expected {char!r}, found {found}")
        self.pos += 1

    def name(self):
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and (self.text[self.pos].isalpha() or self.text[self.pos] == "_"):
            self.pos += 1
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            return self.text[start:self.pos], start
        found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
        self.fail(f"expected a series name, found {found}")

    def integer(self):
        self.skip_ws()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            self.fail(f"expected an integer, found {found}")
        return int(self.text[start:self.pos])

    def param(self):
        start = self.pos
        num = self.integer()
        if self.peek() == "/":
            self.pos += 1
            den = self.integer()
            if den == 0:
                self.fail("zero denominator", start)
            return Fraction(num, den)
        return Fraction(num)

    def expr(self):
        ident, start = self.name()
        if ident in _COMBINATORS:
            self.expect("(")
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(")")
            return _COMBINATORS[ident](left, right)
        if ident not in CATALOG:
            raise UnknownName(f"unknown series {ident!r} at offset {start + 1}")
        params = []
        if self.peek() == "(":
            self.pos += 1
            params.append(self.param())
            while self.peek() == ",":
                self.pos += 1
                params.append(self.param())
            self.expect(")")
        try:
            checked = CATALOG[ident].check(tuple(params))
        except (BadArity, BadParameter) as exc:
            raise type(exc)(f"{exc} (at offset {start + 1})") from None
        return Atom(ident, tuple(Fraction(p) for p in checked))

    def parse(self):
        if not self.text.strip():
            self.fail("empty series specification")
        tree = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.fail(f"unexpected trailing input {self.text[self.pos:]!r}")
        return tree


def parse(spec: str) -> SeriesExpr:
    return _Parser(spec).parse()


def eval_expr(expr: SeriesExpr, order: int) -> EgfSeries:
    if isinstance(expr, Atom):
        return build(expr.name, expr.params, order)
    left = eval_expr(expr.left, order)
    right = eval_expr(expr.right, order)
    if isinstance(expr, Circ):
        return egf.circ(left, right)
    return egf.diamond(left, right)


def series(spec: str, order: int = 16) -> EgfSeries:
    """Parse and evaluate in one step: ``series("circ(E,E)", 5)``."""
    return eval_expr(parse(spec), order)
