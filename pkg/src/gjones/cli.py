"""Command-line surface.

Subcommands:

  coeff    one cyclotomic coefficient, classical or generalized, any route
  jones    the (generalized) polynomial of a knot
  table    triangular tables of coefficients or transition entries
  verify   named cross-validation suites

Exit codes: 0 success, 1 validation error, 2 internal invariant violation.
All output is deterministic; polynomials render in the canonical term
order as text (default), JSON term lists, or LaTeX.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cyclo import (IntegralityViolation, a_table, coeff_det_series, coeff_series,
                    coeff_sum, coeff_t2one)
from .exactalg import LaurentPoly
from .knots import (KnotRecord, MissingHabiro, RouteUnavailable, builtin_knot,
                    generalized_jones, load_knot_file)
from .qcombo import cyclotomic_c
from .verify import SUITES, CheckFailed, run_suite


class CLIError(Exception):
    """Validation problem in flags or inputs; exits with status 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit(2)
        raise CLIError(message)


def _render_poly(p: LaurentPoly, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"terms": p.json_terms()}, separators=(",", ":"))
    return p.render(fmt)


def _parse_tspec(value: str, var: str):
    if value == "1":
        return 1
    if value in (var, "formal"):
        return None
    raise CLIError(f"--{var} accepts only '1' or the formal variable '{var}'")


def _add_common(p: argparse.ArgumentParser, *, order: bool = True) -> None:
    p.add_argument("--t1", default="t1", help="t1 specialization: 1 or formal (default)")
    p.add_argument("--t2", default="t2", help="t2 specialization: 1 or formal (default)")
    p.add_argument("--format", default="text", choices=("text", "json", "latex"))
    if order:
        p.add_argument("--order", type=int, default=None,
                       help="series truncation order (series/det routes)")


def build_parser() -> _Parser:
    ap = _Parser(prog="gjones", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("coeff", help="cyclotomic coefficient")
    pc.add_argument("-n", type=int, required=True)
    pc.add_argument("-i", type=int, required=True)
    pc.add_argument("--classic", action="store_true", help="classical coefficient")
    pc.add_argument("--route", default="sum", choices=("sum", "series", "det", "macdonald"))
    _add_common(pc)

    pj = sub.add_parser("jones", help="knot polynomial")
    src = pj.add_mutually_exclusive_group(required=True)
    src.add_argument("--knot", help="built-in knot name")
    src.add_argument("--knot-file", help="path to a knot record JSON file")
    pj.add_argument("-n", type=int, required=True)
    pj.add_argument("--route", default="sum", choices=("sum", "series", "macdonald"))
    _add_common(pj, order=False)

    pt = sub.add_parser("table", help="triangular tables")
    pt.add_argument("-n", type=int, required=True, help="maximal color")
    pt.add_argument("--what", default="coeff", choices=("coeff", "classic", "a"))
    _add_common(pt, order=False)

    pv = sub.add_parser("verify", help="cross-validation suites")
    pv.add_argument("--suite", default="all", choices=tuple(SUITES))
    pv.add_argument("--nmax", type=int, default=None)
    return ap


def _knot_from_args(args) -> KnotRecord:
    if args.knot is not None:
        try:
            return builtin_knot(args.knot)
        except KeyError as exc:
            raise CLIError(str(exc)) from None
    try:
        return load_knot_file(args.knot_file)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        raise CLIError(f"cannot load knot file: {exc}") from None


def _cmd_coeff(args) -> str:
    n, i = args.n, args.i
    if n < 1 or i < 1 or i > n:
        raise CLIError(f"need 1 <= i <= n, got n={n}, i={i}")
    t1 = _parse_tspec(args.t1, "t1")
    t2 = _parse_tspec(args.t2, "t2")
    if args.classic:
        return _render_poly(cyclotomic_c(n, i), args.format)
    order = args.order if args.order is not None else n
    if order < n:
        raise CLIError(f"--order {order} is below the requested coefficient n={n}")
    if args.route == "sum":
        poly = coeff_sum(n, i)
    elif args.route == "series":
        poly = coeff_series(i, order).coeff(n).as_poly()
    elif args.route == "det":
        if i > 3:
            raise CLIError("the det route is limited to i <= 3")
        poly = coeff_det_series(i, order).coeff(n).as_poly()
    else:
        if t2 != 1:
            raise CLIError("the macdonald route needs --t2 1")
        poly = coeff_t2one(n, i)
    if t1 == 1:
        poly = poly.substitute("t1", 1)
    if t2 == 1 and args.route != "macdonald":
        poly = poly.substitute("t2", 1)
    return _render_poly(poly, args.format)


def _cmd_jones(args) -> str:
    if args.n < 0:
        raise CLIError("need n >= 0")
    knot = _knot_from_args(args)
    t1 = _parse_tspec(args.t1, "t1")
    t2 = _parse_tspec(args.t2, "t2")
    try:
        poly = generalized_jones(knot, args.n, t1=t1, t2=t2, route=args.route)
    except RouteUnavailable as exc:
        raise CLIError(str(exc)) from None
    except MissingHabiro as exc:
        raise CLIError(str(exc)) from None
    return _render_poly(poly, args.format)


def _cmd_table(args) -> str:
    nmax = args.n
    if nmax < 1:
        raise CLIError("need n >= 1")
    t1 = _parse_tspec(args.t1, "t1")
    t2 = _parse_tspec(args.t2, "t2")
    lines: list[str] = []
    rows = []
    if args.what == "a":
        table = a_table(nmax)
        for n in range(1, nmax + 1):
            for p in range(1, n + 1):
                f = table.get(n, p).reduced()
                if args.format == "json":
                    rows.append({"n": n, "p": p, "num": f.num.json_terms(),
                                 "den": list(f.den)})
                else:
                    lines.append(f"a[{n},{p}] = {f.render(args.format)}")
    else:
        for n in range(1, nmax + 1):
            for i in range(1, n + 1):
                if args.what == "classic":
                    poly = cyclotomic_c(n, i)
                    label = "c"
                else:
                    poly = coeff_sum(n, i)
                    if t1 == 1:
                        poly = poly.substitute("t1", 1)
                    if t2 == 1:
                        poly = poly.substitute("t2", 1)
                    label = "chat"
                if args.format == "json":
                    rows.append({"n": n, "i": i, "terms": poly.json_terms()})
                else:
                    lines.append(f"{label}[{n},{i}] = {poly.render(args.format)}")
    if args.format == "json":
        return json.dumps({"rows": rows}, separators=(",", ":"))
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        if args.command == "verify":
            run_suite(args.suite, args.nmax, report=lambda line: print(line))
            return 0
        if args.command == "coeff":
            out = _cmd_coeff(args)
        elif args.command == "jones":
            out = _cmd_jones(args)
        else:
            out = _cmd_table(args)
        print(out)
        return 0
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (CheckFailed, IntegralityViolation) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
