"""Command-line front end.

Usage::

    umbral-laguerre eval laguerre2 n=2 x=1 y=1
    umbral-laguerre verify laguerre-gaussian n=0..4 u=1 alpha=1 --format=json
    umbral-laguerre umbral-expand laguerre n=2
    umbral-laguerre gf-check q N=30

Exit codes: 0 success / all points pass, 1 a verification failed, 2 usage error.
Data rows go to stdout; summaries and diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import csv
import itertools
import json
import sys
from fractions import Fraction

import numpy as np

from . import poly, special, umbral
from .integrals import FORMULAS, PARAMETERS, IntegralParams
from .oracle import QuadratureSpec
from .report import CSV_HEADER, verify_point

GF_TOL = 1e-10
UMBRAL_MAX_N = 20
GF_MAX_N = 40
INDEX_NAMES = ("m", "n", "N")
# keys that default to 0 when omitted
OPTIONAL_ZERO = ("mu", "nu", "beta")

EVAL_FAMILIES = {
    "hermite2": ("n", "x", "y"),
    "laguerre2": ("n", "x", "y"),
    "laguerre-assoc": ("n", "nu", "x", "y"),
    "q": ("n", "nu", "x", "y"),
    "hermite-2index": ("m", "n", "x", "y", "w", "z", "tau"),
    "q-2index": ("m", "n", "mu", "nu", "x", "y", "w", "z", "tau"),
    "t": ("m", "n", "nu", "x", "y", "w", "z", "tau"),
    "wright2": ("nu", "x"),
    "tricomi0": ("x",),
}


class UsageError(Exception):
    pass


def format_sci(value: float) -> str:
    """17 significant digits, unpadded exponent: ``-5.0000000000000000e-1``."""
    mantissa, exponent = f"{value:.16e}".split("e")
    return f"{mantissa}e{int(exponent)}"


def _number(text: str, name: str):
    try:
        if name in INDEX_NAMES:
            return int(text)
        return float(text)
    except ValueError:
        raise UsageError(f"{name}: cannot parse {text!r}") from None


def parse_values(name: str, spec: str) -> list:
    """Expand ``v``, ``v1,v2,...``, ``lo..hi`` (integer step) or ``lo..hi:count`` (linear)."""
    if ".." in spec:
        lo_text, _, rest = spec.partition("..")
        hi_text, _, count_text = rest.partition(":")
        if count_text:
            try:
                count = int(count_text)
                lo, hi = float(lo_text), float(hi_text)
            except ValueError:
                raise UsageError(f"{name}: malformed grid {spec!r}") from None
            if count < 1:
                raise UsageError(f"{name}: grid count must be positive")
            values = np.linspace(lo, hi, count).tolist()
            if name in INDEX_NAMES:
                if any(v != int(v) for v in values):
                    raise UsageError(f"{name}: grid {spec!r} does not land on integers")
                values = [int(v) for v in values]
            return values
        try:
            lo, hi = int(lo_text), int(hi_text)
        except ValueError:
            raise UsageError(f"{name}: non-integer range {spec!r} needs a ':count'") from None
        if hi < lo:
            raise UsageError(f"{name}: empty range {spec!r}")
        return [v if name in INDEX_NAMES else float(v) for v in range(lo, hi + 1)]
    return [_number(part, name) for part in spec.split(",")]


def parse_assignments(items: list[str]) -> dict[str, str]:
    out: dict[str, str] = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep or not name or not value:
            raise UsageError(f"expected key=value, got {item!r}")
        if name in out:
            raise UsageError(f"{name} given twice")
        out[name] = value
    return out


def _check_keys(given, allowed, family, optional=OPTIONAL_ZERO):
    extra = set(given) - set(allowed)
    if extra:
        raise UsageError(f"{family}: unexpected parameter(s) {', '.join(sorted(extra))}")
    missing = [k for k in allowed if k not in given and k not in optional]
    if missing:
        raise UsageError(f"{family}: missing parameter(s) {', '.join(missing)}")


def cmd_eval(args) -> int:
    family = args.family
    if family not in EVAL_FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(EVAL_FAMILIES)}")
    raw = parse_assignments(args.params)
    names = EVAL_FAMILIES[family]
    _check_keys(raw, names, family)
    v = {k: _number(raw[k], k) if k in raw else 0.0 for k in names}
    try:
        if family == "wright2":
            value = special.wright2(v["nu"], v["x"])
        elif family == "tricomi0":
            value = special.bessel_tricomi0(v["x"])
        else:
            index = {k: v[k] for k in names if k in ("m", "n")}
            reals = {k: v[k] for k in names if k not in ("m", "n")}
            value = poly.PolyEval(family, index, reals).evaluate()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(format_sci(float(value)))
    return 0


def _grid(formula_id: str, raw: dict[str, str]) -> list[IntegralParams]:
    names = PARAMETERS[formula_id]
    _check_keys(raw, names, formula_id)
    axes = [parse_values(k, raw[k]) if k in raw else [0.0] for k in names]
    points = []
    for combo in itertools.product(*axes):
        try:
            points.append(IntegralParams(**dict(zip(names, combo))))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return points


def cmd_verify(args) -> int:
    if args.family not in FORMULAS:
        raise UsageError(f"unknown integral {args.family!r}; choose from {', '.join(FORMULAS)}")
    if not args.rel_tol > 0:
        raise UsageError("--rel-tol must be positive")
    points = _grid(args.family, parse_assignments(args.params))
    try:
        spec = QuadratureSpec(initial_order=min(32, args.quad_order), max_order=args.quad_order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    writer = csv.writer(sys.stdout, lineterminator="\n") if args.format == "csv" else None
    if writer:
        writer.writerow(CSV_HEADER)
    passed = 0
    for p in points:
        report = verify_point(args.family, p, args.rel_tol, args.prefactor_convention, spec)
        passed += report.passed
        if writer:
            writer.writerow(report.to_csv_row())
        else:
            print(report.to_json())
    failed = len(points) - passed
    print(f"total={len(points)} passed={passed} failed={failed}", file=sys.stderr)
    return 0 if failed == 0 else 1


def cmd_umbral_expand(args) -> int:
    raw = parse_assignments(args.params)
    allowed = {"laguerre": ("n",), "q": ("n", "nu"), "wright": ("n", "nu")}[args.target]
    _check_keys(raw, allowed, args.target)
    n = _number(raw["n"], "n")
    if not 0 <= n <= UMBRAL_MAX_N:
        raise UsageError(f"n must lie in [0, {UMBRAL_MAX_N}], got {n}")
    try:
        nu = Fraction(raw.get("nu", "0"))
    except ValueError:
        raise UsageError(f"nu: cannot parse {raw['nu']!r}") from None
    if nu < 0:
        raise UsageError("nu must be non-negative")
    if args.target == "laguerre":
        reduced = umbral.vacuum_reduce(umbral.expand_binomial_power("y", "x", n))
        ok = reduced == umbral.laguerre_reference(n)
    elif args.target == "q":
        reduced = umbral.q_from_hermite(n, nu)
        ok = reduced == umbral.q_reference(n, nu)
    else:
        reduced = umbral.wright_from_umbral(nu, n)
        ok = reduced == umbral.wright_reference(nu, n)
    print(f"{reduced.dump()}  [{'CERTIFIED' if ok else 'MISMATCH'}]")
    return 0 if ok else 1


def cmd_gf_check(args) -> int:
    raw = parse_assignments(args.params)
    _check_keys(raw, ("N", "t", "x", "y", "nu"), args.family, optional=("t", "x", "y", "nu"))
    n_max = _number(raw["N"], "N")
    if not 0 <= n_max <= GF_MAX_N:
        raise UsageError(f"N must lie in [0, {GF_MAX_N}], got {n_max}")
    t = parse_values("t", raw.get("t", "-0.5..0.5:11"))
    x = parse_values("x", raw.get("x", "-2..2:9"))
    y = parse_values("y", raw.get("y", "-2..2:9"))
    nu = _number(raw.get("nu", "0"), "nu")
    if max(abs(v) for v in t) > 1.0:
        raise UsageError("t must stay within [-1, 1]")
    T, X, Y = np.meshgrid(t, x, y, indexing="ij")
    try:
        dev = poly.generating_function_deviation(args.family, n_max, T, X, Y, nu=nu)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ok = dev < GF_TOL
    print(
        json.dumps(
            {"family": args.family, "N": n_max, "nu": nu, "points": int(T.size), "max_dev": dev, "tol": GF_TOL, "pass": ok}
        )
    )
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="umbral-laguerre",
        description="Umbral closed forms for Laguerre-polynomial integrals, with quadrature verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a polynomial or special function")
    p.add_argument("family")
    p.add_argument("params", nargs="*", metavar="key=value")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="compare closed forms against quadrature over a grid")
    p.add_argument("family")
    p.add_argument("params", nargs="*", metavar="key=spec")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--rel-tol", type=float, default=1e-9)
    p.add_argument("--quad-order", type=int, default=256, help="highest Gauss-Hermite order")
    p.add_argument("--prefactor-convention", choices=("m", "n"), default="m")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("umbral-expand", help="print an exact umbral reduction and certify it")
    p.add_argument("target", choices=("laguerre", "q", "wright"))
    p.add_argument("params", nargs="*", metavar="key=value")
    p.set_defaults(func=cmd_umbral_expand)

    p = sub.add_parser("gf-check", help="truncated generating-function check")
    p.add_argument("family", choices=("hermite", "q"))
    p.add_argument("params", nargs="*", metavar="key=spec")
    p.set_defaults(func=cmd_gf_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"umbral-laguerre {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
