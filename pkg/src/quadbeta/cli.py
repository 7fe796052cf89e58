"""Command-line entry point: ``quadbeta <subcommand> ...``.

Exit codes: 0 success, 1 a verification or requirement failed, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from .algebra import AlgebraError, rat_str
from .core import QuarticCoeffs, decide_beta, min_poly_beta, recover_d, square_root_quadratic
from .elliptic import torsion_report
from .families import CSV_HEADER, PoleError, c_branch, circle_family, family1, family2
from .surface import (
    default_threads,
    param_eval,
    region_csv,
    region_grid,
    region_svg,
    search_box,
    search_csv,
)
from .verify import SUITES, run_suite

_RAT = re.compile(r"[+-]?\d+(/\d+)?")
FAMILIES = {"f1": family1, "f2": family2, "circle": circle_family}


def rational(text: str) -> Fraction:
    if not _RAT.fullmatch(text):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    _, _, den = text.partition("/")
    if den and int(den) == 0:
        raise argparse.ArgumentTypeError(f"zero denominator in {text!r}")
    return Fraction(text)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


def _coeffs(args) -> QuarticCoeffs:
    return QuarticCoeffs(args.a, args.b, args.c, args.d)


def cmd_check(args) -> int:
    verdict = decide_beta(_coeffs(args))
    if args.json:
        _emit(verdict.to_json())
    else:
        line = f"{verdict.kind.value}"
        if verdict.p is not None:
            line += f": beta is a root of Y^2 + ({rat_str(verdict.p)})Y + ({rat_str(verdict.q)})"
            line += f", disc {rat_str(verdict.disc)}"
        if verdict.beta is not None:
            line += f": beta = {rat_str(verdict.beta)}"
        line += f"; f {'irreducible' if verdict.f_irreducible else 'reducible'}"
        print(line)
    if args.require_irreducible and not verdict.f_irreducible:
        return 1
    return 0


def cmd_minpoly(args) -> int:
    r = min_poly_beta(_coeffs(args))
    pq = square_root_quadratic(r)
    out = {"minpoly": r.to_str("Y"), "square_of_quadratic": pq is not None}
    if pq is not None:
        out["p"], out["q"] = rat_str(pq[0]), rat_str(pq[1])
    _emit(out)
    return 0


def _family_record(fid: str, t: Fraction, u: Fraction | None):
    if fid == "cbranch":
        if u is None:
            raise AlgebraError("family cbranch needs --u (and takes a from --t)")
        return c_branch(t, u)
    return FAMILIES[fid](t)


def cmd_family(args) -> int:
    _emit(_family_record(args.id, args.t, args.u).to_json())
    return 0


def cmd_family_scan(args) -> int:
    if args.t_step <= 0:
        raise AlgebraError("--t-step must be positive")
    lines = [CSV_HEADER]
    t = args.t_from
    while t <= args.t_to:
        try:
            lines.append(_family_record(args.id, t, args.u).csv_row())
        except PoleError as exc:
            print(f"skipped: {exc}", file=sys.stderr)
        t += args.t_step
    Path(args.csv).write_text("\n".join(lines) + "\n")
    return 0


def _int_arg(value: Fraction, flag: str) -> int:
    if value.denominator != 1:
        raise AlgebraError(f"{flag} must be an integer")
    return int(value)


def cmd_search(args) -> int:
    sols = search_box(
        _int_arg(args.amin, "--amin"), _int_arg(args.amax, "--amax"),
        _int_arg(args.bmin, "--bmin"), _int_arg(args.bmax, "--bmax"),
        threads=args.threads or default_threads(), exact=args.exact,
    )
    Path(args.csv).write_text(search_csv(sols, integral=args.integral))
    print(f"{len(sols)} points written to {args.csv}")
    return 0


def cmd_solve_d(args) -> int:
    sols = recover_d(args.a, args.b, args.c)
    if args.integral:
        sols = [s for s in sols if s.d.denominator == 1]
    _emit([
        {"d": rat_str(s.d), "p": None if s.p is None else rat_str(s.p),
         "q": None if s.q is None else rat_str(s.q), "status": s.status}
        for s in sols
    ])
    return 0


def cmd_param(args) -> int:
    _emit(param_eval(args.a, args.t, complete=not args.printed).to_json())
    return 0


def cmd_region(args) -> int:
    grid = region_grid(args.step, (args.amin, args.amax), (args.tmin, args.tmax))
    Path(args.csv).write_text(region_csv(grid))
    if args.svg:
        Path(args.svg).write_text(region_svg(grid))
    return 0


def cmd_verify(args) -> int:
    checks = run_suite(args.suite)
    _emit([c.to_json() for c in checks])
    return 0 if all(c.holds for c in checks) else 1


def cmd_torsion(args) -> int:
    rep = torsion_report()
    _emit(rep.to_json())
    return 0 if rep.divides_counts else 1


def _quartic_flags(p: argparse.ArgumentParser, with_d: bool = True) -> None:
    for name in ("a", "b", "c") + (("d",) if with_d else ()):
        p.add_argument(f"--{name}", type=rational, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadbeta",
        description="Exact tests for quadratic beta = 4x^4/(x^4-1) - x/(x-1) at roots of x^4+ax^3+bx^2+cx+d.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="classify beta for one quartic")
    _quartic_flags(p)
    p.add_argument("--require-irreducible", action="store_true", help="exit 1 if f is reducible")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("minpoly", help="characteristic polynomial of beta over the roots")
    _quartic_flags(p)
    p.set_defaults(func=cmd_minpoly)

    p = sub.add_parser("family", help="one member of a parametric family")
    p.add_argument("--id", choices=["f1", "f2", "circle", "cbranch"], required=True)
    p.add_argument("--t", type=rational, required=True, help="parameter (a for cbranch)")
    p.add_argument("--u", type=rational, help="second parameter of cbranch")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("family-scan", help="CSV of a family over a t-grid")
    p.add_argument("--id", choices=["f1", "f2", "circle", "cbranch"], required=True)
    p.add_argument("--t-from", type=rational, required=True)
    p.add_argument("--t-to", type=rational, required=True)
    p.add_argument("--t-step", type=rational, required=True)
    p.add_argument("--u", type=rational)
    p.add_argument("--csv", required=True)
    p.set_defaults(func=cmd_family_scan)

    p = sub.add_parser("search", help="integer points of F in a box of (a, b)")
    for flag in ("--amin", "--amax", "--bmin", "--bmax"):
        p.add_argument(flag, type=rational, required=True)
    p.add_argument("--threads", type=int, default=0, help="worker processes (default: all cores)")
    p.add_argument("--integral", action="store_true", help="keep only integral d")
    p.add_argument("--exact", action="store_true", help="exact root isolation only")
    p.add_argument("--csv", required=True)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("solve-d", help="rational d completing (a, b, c)")
    _quartic_flags(p, with_d=False)
    p.add_argument("--integral", action="store_true")
    p.set_defaults(func=cmd_solve_d)

    p = sub.add_parser("param", help="evaluate the parametrization over Q(a)")
    p.add_argument("--a", type=rational, required=True)
    p.add_argument("--t", type=rational, required=True)
    p.add_argument("--printed", action="store_true", help="use q without its a^9 terms")
    p.set_defaults(func=cmd_param)

    p = sub.add_parser("region", help="sign grid of -a*P1(a, t)")
    p.add_argument("--step", type=rational, required=True)
    p.add_argument("--amin", type=rational, default=Fraction(0))
    p.add_argument("--amax", type=rational, default=Fraction(10))
    p.add_argument("--tmin", type=rational, default=Fraction(-10))
    p.add_argument("--tmax", type=rational, default=Fraction(10))
    p.add_argument("--csv", required=True)
    p.add_argument("--svg")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("torsion", help="torsion of U^2 = X^3 + 6X^2 - 20X + 8")
    p.set_defaults(func=cmd_torsion)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
