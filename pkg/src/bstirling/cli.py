"""``bstirling`` command line.

Exit codes: 0 success, 1 domain error (or a failed identity in ``verify``),
2 usage or series-spec error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import catalog
from .bell import complete_bell, parse_bell_arguments, partial_bell
from .egf import EgfSeries, format_rational, rational
from .errors import BStirlingError, SeriesSpecError
from .potential import evaluate, potential
from .probabilistic import mgf_series, moment, parse_distribution, probabilistic_triangles
from .stirling import Kind, StirlingTriangle, triangle_from_series, triangle_recursive
from .verify import CHECKS, FAMILIES, verify_suite

DEFAULT_ORDER = 16
DEFAULT_MAX_ORDER = 256


class UsageError(Exception):
    pass


def max_order() -> int:
    raw = os.environ.get("BSTIRLING_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"BSTIRLING_MAX_ORDER must be an integer, got {raw!r}") from None


def _nonneg_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def _rational_arg(text):
    try:
        return rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected an exact rational p/q, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    shared.add_argument("--order", type=_nonneg_int, default=None,
                        help=f"truncation order (default {DEFAULT_ORDER})")
    shared.add_argument("--format", choices=("md", "csv", "json"), default="md")
    shared.add_argument("--out", default=None, help="write output here instead of stdout")

    series_args = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    group = series_args.add_mutually_exclusive_group()
    group.add_argument("--series", help='series spec, e.g. "circ(E,Blambda(1/3))"')
    group.add_argument("--series-file", help="JSON file {order, coeffs}")

    parser = argparse.ArgumentParser(prog="bstirling", allow_abbrev=False,
                                     description="Exact B-Stirling numbers and potential polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", parents=[shared, series_args], allow_abbrev=False,
                       help="tabulate a Stirling triangle")
    p.add_argument("--kind", choices=("first", "second"), default="second")
    p.add_argument("--nmax", type=_nonneg_int, default=None)
    p.add_argument("--method", choices=("series", "recursive"), default="series")

    p = sub.add_parser("potential", parents=[shared, series_args], allow_abbrev=False,
                       help="print a potential polynomial")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--at", type=_rational_arg, action="append", default=[],
                   help="also evaluate at this rational point (repeatable)")

    p = sub.add_parser("bell", parents=[shared], allow_abbrev=False, help="Bell polynomials")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--partial", nargs=2, type=_nonneg_int, metavar=("N", "K"))
    mode.add_argument("--complete", type=_nonneg_int, metavar="N")
    p.add_argument("--args", required=True, help="comma-separated rationals x_1,x_2,...")

    p = sub.add_parser("prob", parents=[shared], allow_abbrev=False,
                       help="probabilistic Stirling numbers and moments")
    p.add_argument("--dist", required=True, help='"finite:0:1/2,1:1/2" or "poisson:1"')
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--triangle", type=_nonneg_int, metavar="NMAX")
    what.add_argument("--moment", nargs=2, type=_nonneg_int, metavar=("M", "N"))
    what.add_argument("--mgf", action="store_true", help="print the moment series")
    p.add_argument("--kind", choices=("first", "second"), default="second")

    p = sub.add_parser("verify", parents=[shared], allow_abbrev=False,
                       help="check identities; exit 0 iff all pass")
    p.add_argument("--identity", action="append", choices=sorted(CHECKS), default=None)
    p.add_argument("--family", action="append", choices=FAMILIES, default=None)
    p.add_argument("--lambda", dest="lambdas", action="append", type=_rational_arg, default=None)
    p.add_argument("--nmax", type=_nonneg_int, default=None,
                   help="size for enumeration-heavy checks")

    p = sub.add_parser("parse", parents=[shared, series_args], allow_abbrev=False,
                       help="parse a series spec and print its canonical form")
    p.add_argument("--coeffs", action="store_true", help="also evaluate at --order")
    return parser


# --- rendering --------------------------------------------------------------


def _markdown_table(header: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))

    def line(cells):
        padded = [c.rjust(w) for c, w in zip(cells, widths)]
        return "| " + " | ".join(padded) + " |"

    out = [line(header), "|" + "|".join("-" * (w + 1) + ":" for w in widths) + "|"]
    out += [line(row + [""] * (len(header) - len(row))) for row in rows]
    return "\n".join(out) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _json(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def render_triangle(tri: StirlingTriangle, fmt: str) -> str:
    if fmt == "json":
        return _json(tri.to_dict())
    rows = [[format_rational(v) for v in row] for row in tri.rows]
    if fmt == "csv":
        return _csv([[str(n)] + row for n, row in enumerate(rows)])
    header = ["n\\k"] + [str(k) for k in range(tri.nmax + 1)]
    return _markdown_table(header, [[str(n)] + row for n, row in enumerate(rows)])


def render_series(s: EgfSeries, fmt: str) -> str:
    if fmt == "json":
        return _json(s.to_dict())
    if fmt == "csv":
        return _csv([[n, format_rational(c)] for n, c in enumerate(s.coeffs)])
    return _markdown_table(["n", "U_n"], [[str(n), format_rational(c)] for n, c in enumerate(s.coeffs)])


# --- commands ---------------------------------------------------------------


def _order(args) -> int:
    order = DEFAULT_ORDER if args.order is None else args.order
    cap = max_order()
    if order > cap:
        raise UsageError(f"--order {order} exceeds the cap {cap} (set BSTIRLING_MAX_ORDER to raise it)")
    return order


def _load_series(args, order: int) -> EgfSeries:
    if args.series_file:
        try:
            with open(args.series_file) as fh:
                s = EgfSeries.from_dict(json.load(fh))
        except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, BStirlingError):
                raise
            raise UsageError(f"cannot read series file {args.series_file!r}: {exc}") from None
        if s.order > max_order():
            raise UsageError(f"series file order {s.order} exceeds the cap {max_order()}")
        return s
    if args.series is None:
        raise UsageError("one of --series or --series-file is required")
    return catalog.series(args.series, order)


def cmd_triangle(args) -> tuple[str, int]:
    order = _order(args)
    if args.nmax is not None and args.order is None and not args.series_file:
        order = max(order, args.nmax)
        if order > max_order():
            raise UsageError(f"--nmax {args.nmax} exceeds the cap {max_order()}")
    b = _load_series(args, order)
    nmax = b.order if args.nmax is None else args.nmax
    build = triangle_recursive if args.method == "recursive" else triangle_from_series
    return render_triangle(build(b, Kind.parse(args.kind), nmax), args.format), 0


def cmd_potential(args) -> tuple[str, int]:
    order = _order(args)
    if args.order is None and not args.series_file:
        order = max(order, args.n)
    b = _load_series(args, order)
    p = potential(b, args.n)
    values = [(x, evaluate(p, x)) for x in args.at]
    if args.format == "json":
        data = p.to_dict()
        if values:
            data["values"] = {format_rational(x): format_rational(v) for x, v in values}
        return _json(data), 0
    if args.format == "csv":
        rows = [["k", "monomial", "falling"]]
        rows += [[k, format_rational(c), format_rational(d)] for k, (c, d) in enumerate(zip(p.monomial, p.falling))]
        return _csv(rows), 0
    lines = [
        f"P_{args.n}(x) = {p.pretty('monomial')}",
        f"P_{args.n}(x) = {p.pretty('falling')}",
    ]
    lines += [f"P_{args.n}({format_rational(x)}) = {format_rational(v)}" for x, v in values]
    return "\n".join(lines) + "\n", 0


def cmd_bell(args) -> tuple[str, int]:
    try:
        xs = parse_bell_arguments(args.args)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --args {args.args!r}: {exc}") from None
    if args.partial:
        n, k = args.partial
        label, value = f"B_{{{n},{k}}}", partial_bell(xs, n, k)
    else:
        n = args.complete
        label, value = f"B_{n}", complete_bell(xs, n)
    if args.format == "json":
        return _json({"polynomial": label, "args": [format_rational(x) for x in xs],
                      "value": format_rational(value)}), 0
    if args.format == "csv":
        return _csv([["polynomial", "value"], [label, format_rational(value)]]), 0
    return f"{label}({', '.join(format_rational(x) for x in xs)}) = {format_rational(value)}\n", 0


def cmd_prob(args) -> tuple[str, int]:
    d = parse_distribution(args.dist)
    if args.triangle is not None:
        first, second = probabilistic_triangles(d, args.triangle)
        return render_triangle(first if args.kind == "first" else second, args.format), 0
    if args.mgf:
        return render_series(mgf_series(d, _order(args)), args.format), 0
    m, n = args.moment
    value = moment(d, m, n)
    if args.format == "json":
        return _json({"dist": str(d), "m": m, "n": n, "moment": format_rational(value)}), 0
    if args.format == "csv":
        return _csv([["m", "n", "moment"], [m, n, format_rational(value)]]), 0
    return f"E W_{m}^{n} = {format_rational(value)}  ({d})\n", 0


def cmd_verify(args) -> tuple[str, int]:
    order = _order(args)
    if order < 8:
        raise UsageError("verify needs --order >= 8")
    results = verify_suite(order, args.lambdas, args.identity, args.family, args.nmax)
    code = 0 if all(r.passed for r in results) else 1
    if args.format == "json":
        data = [{"tag": r.tag, "status": "PASS" if r.passed else "FAIL", "identity": r.label,
                 "params": r.params, "notes": r.notes} for r in results]
        return _json(data), code
    if args.format == "csv":
        return _csv([["tag", "status", "identity", "params"]]
                    + [[r.tag, "PASS" if r.passed else "FAIL", r.label, r.params] for r in results]), code
    lines = [line for r in results for line in r.lines()]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} identities hold")
    return "\n".join(lines) + "\n", code


def cmd_parse(args) -> tuple[str, int]:
    if args.series is None:
        raise UsageError("parse needs --series")
    tree = catalog.parse(args.series)
    canonical = str(tree)
    s = catalog.eval_expr(tree, _order(args)) if args.coeffs else None
    if args.format == "json":
        data = {"canonical": canonical}
        if s is not None:
            data["series"] = s.to_dict()
        return _json(data), 0
    text = canonical + "\n"
    if s is not None:
        text += render_series(s, args.format)
    return text, 0


COMMANDS = {
    "triangle": cmd_triangle,
    "potential": cmd_potential,
    "bell": cmd_bell,
    "prob": cmd_prob,
    "verify": cmd_verify,
    "parse": cmd_parse,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = COMMANDS[args.command](args)
    except (UsageError, SeriesSpecError) as exc:
        print(f"bstirling: error: {exc}", file=stderr)
        return 2
    except (BStirlingError, ZeroDivisionError) as exc:
        print(f"bstirling: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
