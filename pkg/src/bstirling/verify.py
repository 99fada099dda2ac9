"""Named identity checks, runnable one at a time or as a full suite.

Each check recomputes both sides of an identity by different routes and
compares them exactly.  Tags (``eq42``, ``thm4``, ...) are stable identifiers
used by ``bstirling verify --identity TAG``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Optional

from . import restricted
from .bell import bell_oracle, complete_bell, partial_bell_row
from .catalog import build, series
from .egf import EgfSeries, circ, diamond, pow_scalar, rational
from .potential import (
    PotentialPolynomial,
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
    potential_family,
)
from .probabilistic import (
    bernoulli,
    FiniteSupport,
    Poisson,
    mgf_series,
    moment,
    moment_oracle,
    probabilistic_triangles,
    stirling_from_moments,
)
from .stirling import (
    Kind,
    classical_first,
    classical_second,
    compose_circ_triangles,
    compose_diamond_triangles,
    convert_first_to_second,
    convert_second_to_first,
    diagonal_law_holds,
    identity_triangle,
    lower_matmul,
    triangle_from_series,
    triangle_recursive,
)

FIRST, SECOND = Kind.FIRST, Kind.SECOND

STANDARD_SPECS = (
    "I", "E", "Blambda(1/2)", "Blambda(2)", "Clambda(1/2)", "cosh", "geom",
    "involution", "pairing", "Rle(3)", "Rge(2)", "Ple(3)", "Pge(2)",
)
STANDARD_DISTRIBUTIONS = (Poisson(1), bernoulli(Fraction(1, 3)))

COMPOSITION_PAIRS = (
    ("E", "E"),
    ("Blambda(1/2)", "cosh"),
    ("cosh", "Blambda(1/2)"),
    ("geom", "Rge(2)"),
    ("Clambda(1/2)", "involution"),
    ("involution", "Pge(2)"),
    ("Rle(3)", "geom"),
    ("Blambda(-1/3)", "Clambda(2)"),
    ("pairing", "E"),
    ("E", "bellargs(1,-2,3/4)"),
)

ORACLE_DISTRIBUTIONS = (
    bernoulli(Fraction(1, 3)),
    FiniteSupport(((-1, Fraction(1, 2)), (1, Fraction(1, 2)))),
    FiniteSupport(((0, Fraction(1, 4)), (1, Fraction(1, 2)), (2, Fraction(1, 4)))),
)

DEFAULT_LAMBDAS = (Fraction(1, 2), Fraction(2), Fraction(-1, 3))


def standard_series(order: int) -> list[tuple[str, EgfSeries]]:
    """Every catalog family used by the checks, plus two moment generating functions."""
    out = [(spec, series(spec, order)) for spec in STANDARD_SPECS]
    out += [(f"mgf({d})", mgf_series(d, order)) for d in STANDARD_DISTRIBUTIONS]
    return out


@dataclass
class Context:
    order: int = 12
    lambdas: tuple = DEFAULT_LAMBDAS
    nmax: Optional[int] = None

    def cap(self, limit: int) -> int:
        n = self.order if self.nmax is None else self.nmax
        return min(n, limit)


@dataclass
class CheckResult:
    tag: str
    label: str
    passed: bool
    params: str
    notes: list = field(default_factory=list)
    seconds: float = 0.0

    def lines(self) -> list[str]:
        head = f"{'PASS' if self.passed else 'FAIL'} {self.tag} {self.label} ({self.params})"
        return [head] + [f"NOTE {self.tag}: {n}" for n in self.notes]


@dataclass(frozen=True)
class Check:
    tag: str
    family: str
    label: str
    run: Callable[[Context], tuple]


CHECKS: dict[str, Check] = {}


def check(tag, family, label):
    def register(fn):
        CHECKS[tag] = Check(tag, family, label, fn)
        return fn
    return register


def _lams(ctx):
    return ", ".join(str(l) for l in ctx.lambdas)


# --- classical embeddings and the two routes --------------------------------


@check("eq6", "classical", "s_I = s, S_I = delta")
def _eq6(ctx):
    n = ctx.order
    b = build("I", (), n)
    ok = (triangle_from_series(b, FIRST, n) == classical_first(n)
          and triangle_from_series(b, SECOND, n) == identity_triangle(SECOND, n))
    return ok, f"nmax={n}"


@check("eq9", "classical", "s_E = delta, S_E = S")
def _eq9(ctx):
    n = ctx.order
    b = build("E", (), n)
    ok = (triangle_from_series(b, FIRST, n) == identity_triangle(FIRST, n)
          and triangle_from_series(b, SECOND, n) == classical_second(n))
    return ok, f"nmax={n}"


@check("remark9", "classical", "S s = s S = identity")
def _remark9(ctx):
    n = ctx.order
    s, S = classical_first(n), classical_second(n)
    ok = (lower_matmul(S, s, FIRST) == identity_triangle(FIRST, n)
          and lower_matmul(s, S, FIRST) == identity_triangle(FIRST, n))
    return ok, f"nmax={n}"


@check("remark5", "classical", "(1/r!) sum C(r,j)(-1)^(r-j) j^n = S(n,r)")
def _remark5(ctx):
    n = ctx.order
    S = classical_second(n)
    ok = all(
        Fraction(sum(comb(r, j) * (-1) ** (r - j) * j**m for j in range(r + 1)), factorial(r))
        == S.entry(m, r)
        for m in range(n + 1) for r in range(n + 1)
    )
    return ok, f"n<={n}"


@check("eq17", "classical", "T(k,k) = T(1,1)^k")
def _eq17(ctx):
    n = ctx.order
    ok = all(
        diagonal_law_holds(triangle_from_series(b, kind, n))
        and diagonal_law_holds(triangle_recursive(b, kind, n))
        for _, b in standard_series(n) for kind in (FIRST, SECOND)
    )
    return ok, f"{len(standard_series(n))} series, nmax={n}"


@check("thm3dual", "classical", "recursive triangle = series triangle")
def _thm3dual(ctx):
    n = ctx.order
    ok = all(
        triangle_recursive(b, kind, n) == triangle_from_series(b, kind, n)
        for _, b in standard_series(n) for kind in (FIRST, SECOND)
    )
    return ok, f"{len(standard_series(n))} series, both kinds, nmax={n}"


@check("thm1", "potential", "P_n(B;x) in both bases = [z^n/n!] B(z)^x")
def _thm1(ctx):
    n = ctx.cap(8)
    points = (Fraction(-2), Fraction(1, 3), Fraction(3))
    ok = True
    for _, b in standard_series(n):
        polys = potential_family(b, n)
        for x0 in points:
            power = pow_scalar(b, x0)
            ok &= all(evaluate(polys[m], x0) == power[m] for m in range(n + 1))
            ok &= all(
                sum((c * falling_factorial(x0, k) for k, c in enumerate(polys[m].falling)), Fraction(0))
                == power[m]
                for m in range(n + 1)
            )
    return ok, f"n<={n}, x in {{-2, 1/3, 3}}"


@check("thm4", "potential", "derivative and difference expansions; Delta^(n+1) P_n = 0")
def _thm4(ctx):
    n = ctx.cap(10)
    ok = True
    for _, b in standard_series(n):
        polys = potential_family(b, n)
        for m in range(n + 1):
            p = polys[m]
            ok &= forward_difference(p, m + 1).same_polynomial(PotentialPolynomial.zero())
            ok &= all(forward_difference_pointwise(p, m + 1, x0) == 0 for x0 in (0, Fraction(5, 2)))
            for r in range(m + 1):
                ok &= derivative(p, r).same_polynomial(derivative_expansion(b, m, r))
                ok &= forward_difference(p, r).same_polynomial(difference_expansion(b, m, r))
                ok &= forward_difference_pointwise(p, r, Fraction(1, 2)) == factorial(r) * evaluate(
                    forward_difference(p, r), Fraction(1, 2)
                )
    return ok, f"n<={n}, 0<=r<=n"


@check("eq23", "potential", "P^(r)(0)/r! = s_B(n,r), Delta^r P(0)/r! = S_B(n,r)")
def _eq23(ctx):
    n = ctx.cap(10)
    ok = True
    for _, b in standard_series(n):
        s_b, S_b = triangle_from_series(b, FIRST, n), triangle_from_series(b, SECOND, n)
        polys = potential_family(b, n)
        for m in range(n + 1):
            for r in range(m + 1):
                ok &= evaluate(derivative(polys[m], r), 0) == s_b.entry(m, r)
                ok &= evaluate(forward_difference(polys[m], r), 0) == S_b.entry(m, r)
                ok &= forward_difference_pointwise(polys[m], r, 0) / factorial(r) == S_b.entry(m, r)
    return ok, f"n<={n}"


# --- inner operations -------------------------------------------------------


@check("eq25", "composition", "circ with I and diamond with E are identities")
def _eq25(ctx):
    n = ctx.order
    i, e = build("I", (), n), build("E", (), n)
    ok = all(
        circ(b, i) == b and circ(i, b) == b and diamond(b, e) == b and diamond(e, b) == b
        for _, b in standard_series(n)
    )
    return ok, f"order={n}"


def _pairs(n):
    return [(f"{x},{y}", series(x, n), series(y, n)) for x, y in COMPOSITION_PAIRS]


def _circ_triangles(kind, n):
    return all(
        compose_circ_triangles(kind, triangle_from_series(b, kind, n), triangle_from_series(c, SECOND, n))
        == triangle_from_series(circ(b, c), kind, n)
        for _, b, c in _pairs(n)
    )


def _diamond_triangles(kind, n):
    return all(
        compose_diamond_triangles(kind, triangle_from_series(b, kind, n), triangle_from_series(c, FIRST, n))
        == triangle_from_series(diamond(b, c), kind, n)
        for _, b, c in _pairs(n)
    )


@check("eq26", "composition", "s_{circ(B,C)} = S_C s_B")
def _eq26(ctx):
    n = ctx.cap(12)
    return _circ_triangles(FIRST, n), f"{len(COMPOSITION_PAIRS)} pairs, nmax={n}"


@check("eq27", "composition", "S_{circ(B,C)} = S_C S_B")
def _eq27(ctx):
    n = ctx.cap(12)
    return _circ_triangles(SECOND, n), f"{len(COMPOSITION_PAIRS)} pairs, nmax={n}"


@check("eq30", "composition", "s_{diamond(B,C)} = s_C s_B")
def _eq30(ctx):
    n = ctx.cap(12)
    return _diamond_triangles(FIRST, n), f"{len(COMPOSITION_PAIRS)} pairs, nmax={n}"


@check("eq31", "composition", "S_{diamond(B,C)} = s_C S_B")
def _eq31(ctx):
    n = ctx.cap(12)
    return _diamond_triangles(SECOND, n), f"{len(COMPOSITION_PAIRS)} pairs, nmax={n}"


@check("eq28", "composition", "s_C = S_C s")
def _eq28(ctx):
    n = ctx.order
    ok = all(
        convert_second_to_first(triangle_from_series(b, SECOND, n)) == triangle_from_series(b, FIRST, n)
        for _, b in standard_series(n)
    )
    return ok, f"nmax={n}"


@check("eq32", "composition", "S_C = s_C S")
def _eq32(ctx):
    n = ctx.order
    ok = all(
        convert_first_to_second(triangle_from_series(b, FIRST, n)) == triangle_from_series(b, SECOND, n)
        for _, b in standard_series(n)
    )
    return ok, f"nmax={n}"


@check("eq33", "composition", "P_n(circ(B,C);x) = sum_k S_C(n,k) P_k(B;x)")
def _eq33(ctx):
    n = ctx.cap(10)
    ok = all(
        compose_potential_circ(b, c, m) == potential(circ(b, c), m)
        for _, b, c in _pairs(n) for m in range(n + 1)
    )
    return ok, f"{len(COMPOSITION_PAIRS)} pairs, n<={n}"


@check("eq34", "composition", "P_n(diamond(B,C);x) = sum_k s_C(n,k) P_k(B;x)")
def _eq34(ctx):
    n = ctx.cap(10)
    ok = all(
        compose_potential_diamond(b, c, m) == potential(diamond(b, c), m)
        for _, b, c in _pairs(n) for m in range(n + 1)
    )
    return ok, f"{len(COMPOSITION_PAIRS)} pairs, n<={n}"


@check("eqA", "bell", "s_{circ(E,C)} = S_C, S_{circ(E,C)} = S_C S")
def _eqA(ctx):
    n = ctx.order
    e = build("E", (), n)
    ok = True
    for _, c in standard_series(n):
        S_c = triangle_from_series(c, SECOND, n)
        ec = circ(e, c)
        ok &= triangle_from_series(ec, FIRST, n).rows == S_c.rows
        ok &= triangle_from_series(ec, SECOND, n) == lower_matmul(S_c, classical_second(n), SECOND)
    return ok, f"nmax={n}"


@check("eqB", "bell", "P_n(circ(E,C);x) = sum_k S_C(n,k) x^k")
def _eqB(ctx):
    n = ctx.cap(10)
    e = build("E", (), n)
    ok = all(
        potential(circ(e, c), m).monomial == triangle_from_series(c, SECOND, n).rows[m]
        for _, c in standard_series(n) for m in range(n + 1)
    )
    return ok, f"n<={n}"


# --- degenerate family ------------------------------------------------------


@check("eq38", "degenerate", "s_{Blambda}(n,k) = lambda^(n-k) s(n,k)")
def _eq38(ctx):
    n = ctx.order
    s = classical_first(n)
    ok = True
    for lam in ctx.lambdas:
        t = triangle_from_series(build("Blambda", (lam,), n), FIRST, n)
        ok &= all(t.entry(i, k) == lam ** (i - k) * s.entry(i, k) for i in range(n + 1) for k in range(i + 1))
    return ok, f"lambda in {{{_lams(ctx)}}}, nmax={n}"


@check("eq39", "degenerate", "S_{Blambda}(n,k) = sum lambda^(n-j) s(n,j) S(j,k) = (1/k!) sum C(k,j)(-1)^(k-j) (j)_{n,lambda}")
def _eq39(ctx):
    n = ctx.cap(12)
    s, S = classical_first(n), classical_second(n)
    ok = True
    literal_ok = True
    for lam in ctx.lambdas:
        t = triangle_from_series(build("Blambda", (lam,), n), SECOND, n)
        for i in range(n + 1):
            for k in range(i + 1):
                via_classical = sum(
                    (lam ** (i - j) * s.entry(i, j) * S.entry(j, k) for j in range(k, i + 1)), Fraction(0)
                )
                alternating = Fraction(
                    sum((comb(k, j) * (-1) ** (k - j) * degenerate_falling(j, i, lam) for j in range(k + 1)),
                        Fraction(0)),
                    factorial(k),
                )
                with_step_k = Fraction(
                    sum((comb(k, j) * (-1) ** (k - j) * degenerate_falling(j, i, k) for j in range(k + 1)),
                        Fraction(0)),
                    factorial(k),
                )
                ok &= t.entry(i, k) == via_classical == alternating
                literal_ok &= t.entry(i, k) == with_step_k
    notes = ["alternating sum evaluated with step lambda in (j)_{n,lambda}; "
             + ("step k also agrees" if literal_ok else "step k in place of lambda does not agree")]
    return ok, f"lambda in {{{_lams(ctx)}}}, nmax={n}", notes


@check("eq42", "degenerate", "circ(Clambda,Blambda)=E, diamond(Blambda,Clambda)=I")
def _eq42(ctx):
    n = ctx.order
    ok = True
    for lam in ctx.lambdas:
        b, c = build("Blambda", (lam,), n), build("Clambda", (lam,), n)
        ok &= circ(c, b) == build("E", (), n) and diamond(b, c) == build("I", (), n)
    return ok, f"lambda in {{{_lams(ctx)}}}, order={n}"


def _clambda_first(lam, n):
    return triangle_from_series(build("Clambda", (lam,), n), FIRST, n)


@check("eq43", "degenerate", "S_{Blambda} s_{Clambda} = identity")
def _eq43(ctx):
    n = ctx.cap(12)
    ok = all(
        lower_matmul(triangle_from_series(build("Blambda", (lam,), n), SECOND, n), _clambda_first(lam, n), FIRST)
        == identity_triangle(FIRST, n)
        for lam in ctx.lambdas
    )
    return ok, f"lambda in {{{_lams(ctx)}}}, nmax={n}"


@check("eq44", "degenerate", "s(n,k) = sum s_{Clambda}(n,j) lambda^(j-k) s(j,k)")
def _eq44(ctx):
    n = ctx.cap(12)
    s = classical_first(n)
    ok = True
    for lam in ctx.lambdas:
        sc = _clambda_first(lam, n)
        ok &= all(
            sum((sc.entry(i, j) * lam ** (j - k) * s.entry(j, k) for j in range(k, i + 1)), Fraction(0))
            == s.entry(i, k)
            for i in range(n + 1) for k in range(i + 1)
        )
    return ok, f"lambda in {{{_lams(ctx)}}}, nmax={n}"


@check("eq45", "degenerate", "(x)_n = sum s_{Clambda}(n,k) (x)_{k,lambda}")
def _eq45(ctx):
    n = ctx.cap(12)
    ok = True
    for lam in ctx.lambdas:
        sc = _clambda_first(lam, n)
        for i in range(n + 1):
            for x0 in list(range(i + 1)) + [Fraction(-7, 3)]:
                rhs = sum((sc.entry(i, k) * degenerate_falling(x0, k, lam) for k in range(i + 1)), Fraction(0))
                ok &= rhs == falling_factorial(x0, i)
    return ok, f"lambda in {{{_lams(ctx)}}}, n<={n}, x=0..n and -7/3"


# --- Bell polynomials -------------------------------------------------------


@check("bell", "bell", "B_{n,k} and B_n against set-partition enumeration")
def _bell(ctx):
    n = ctx.cap(8)
    vectors = [
        [1] * n or [1],
        [Fraction(2), Fraction(3)],
        [Fraction(1, 2), Fraction(-3), Fraction(5, 7), Fraction(0), Fraction(2, 9), Fraction(-1)],
    ]
    ok = True
    for xs in vectors:
        for m in range(1, n + 1):
            row = partial_bell_row(xs, m)
            ok &= all(row[k] == bell_oracle(xs, m, k) for k in range(1, m + 1))
            ok &= complete_bell(xs, m) == bell_oracle(xs, m)
    return ok, f"{len(vectors)} argument vectors, n<={n}"


# --- probabilistic ----------------------------------------------------------


@check("eq47", "probabilistic", "s_Y = (-1)^(n-k) s_B, S_Y = S_B; moments in both bases")
def _eq47(ctx):
    n = ctx.cap(10)
    ok = True
    for d in STANDARD_DISTRIBUTIONS + ORACLE_DISTRIBUTIONS:
        b = mgf_series(d, n)
        s_y, S_y = probabilistic_triangles(d, n)
        s_b = triangle_from_series(b, FIRST, n)
        ok &= all((-1) ** (i - k) * s_y.entry(i, k) == s_b.entry(i, k) for i in range(n + 1) for k in range(i + 1))
        ok &= S_y == triangle_from_series(b, SECOND, n)
        for m in range(4):
            for i in range(n + 1):
                via_second = sum((S_y.entry(i, k) * falling_factorial(m, k) for k in range(i + 1)), Fraction(0))
                via_first = sum(((-1) ** (i - k) * s_y.entry(i, k) * m**k for k in range(i + 1)), Fraction(0))
                ok &= via_second == via_first == moment(d, m, i)
    return ok, f"{len(STANDARD_DISTRIBUTIONS) + len(ORACLE_DISTRIBUTIONS)} distributions, nmax={n}"


@check("eq49", "probabilistic", "P_n(B;m) = E W_m^n by outcome enumeration")
def _eq49(ctx):
    n = ctx.cap(8)
    ok = all(
        moment(d, m, i) == moment_oracle(d, m, i)
        for d in ORACLE_DISTRIBUTIONS for m in range(7) for i in range(n + 1)
    )
    return ok, f"{len(ORACLE_DISTRIBUTIONS)} distributions, m<=6, n<={n}"


@check("moments", "probabilistic", "S_Y from alternating sums of enumerated moments")
def _moments(ctx):
    n = ctx.cap(8)
    ok = all(stirling_from_moments(d, n) == probabilistic_triangles(d, n)[1] for d in ORACLE_DISTRIBUTIONS)
    return ok, f"nmax={n}"


# --- restricted families ----------------------------------------------------


def _second(spec, n):
    return triangle_from_series(series(spec, n), SECOND, n)


def _matches(tri, counter, n):
    return all(tri.entry(i, k) == counter(i, k) for i in range(n + 1) for k in range(i + 1))


@check("restricted_blocks", "restricted", "cosh, Rle(m), Rge(m) against block-restricted partitions")
def _restricted_blocks(ctx):
    n = ctx.cap(8)
    ok = _matches(_second("cosh", n), lambda i, k: restricted.count_partitions(i, k, restricted.EvenOnly()), n)
    for m in (1, 2, 3):
        ok &= _matches(_second(f"Rle({m})", n), lambda i, k: restricted.count_partitions(i, k, restricted.AtMost(m)), n)
        ok &= _matches(_second(f"Rge({m})", n), lambda i, k: restricted.count_partitions(i, k, restricted.AtLeast(m)), n)
    return ok, f"m in {{1, 2, 3}}, nmax={n}"


@check("restricted_cycles", "restricted", "Ple(m), Pge(m) against cycle-restricted permutations")
def _restricted_cycles(ctx):
    n = ctx.cap(7)
    ok = True
    for m in (1, 2, 3):
        ok &= _matches(_second(f"Ple({m})", n), lambda i, k: restricted.count_permutations(i, k, restricted.AtMost(m)), n)
        ok &= _matches(_second(f"Pge({m})", n), lambda i, k: restricted.count_permutations(i, k, restricted.AtLeast(m)), n)
    return ok, f"m in {{1, 2, 3}}, nmax={n}"


@check("lah", "restricted", "geom second kind = ordered-list partitions")
def _lah(ctx):
    n = ctx.cap(8)
    return _matches(_second("geom", n), restricted.count_list_partitions, n), f"nmax={n}"


@check("special_counts", "restricted", "derangements, involutions and pairings")
def _special_counts(ctx):
    n = ctx.cap(7)
    pge2, inv, pair = _second("Pge(2)", n), _second("involution", n), _second("pairing", n)
    ok = all(sum(pge2.rows[i]) == restricted.count_derangements(i) for i in range(n + 1))
    ok &= all(sum(inv.rows[i]) == restricted.count_involutions(i) for i in range(n + 1))
    ok &= all(pair.entry(2 * k, k) == restricted.count_pairings(2 * k) for k in range(n // 2 + 1))
    return ok, f"n<={n}"


FAMILIES = sorted({c.family for c in CHECKS.values()})


def run_check(tag: str, ctx: Context) -> CheckResult:
    chk = CHECKS[tag]
    start = time.perf_counter()
    outcome = chk.run(ctx)
    passed, params = bool(outcome[0]), outcome[1]
    notes = list(outcome[2]) if len(outcome) > 2 else []
    return CheckResult(tag, chk.label, passed, params, notes, time.perf_counter() - start)


def verify_suite(order: int = 12, lambdas=None, tags=None, families=None, nmax=None) -> list[CheckResult]:
    """Run the selected checks (all of them by default) and return their results."""
    if order < 8:
        raise ValueError("the verification suite needs order >= 8")
    ctx = Context(order, tuple(rational(l) for l in lambdas) if lambdas else DEFAULT_LAMBDAS, nmax)
    selected = [
        t for t, c in CHECKS.items()
        if (tags is None or t in tags) and (families is None or c.family in families)
    ]
    return [run_check(t, ctx) for t in selected]

