"""Command-line front end.

Every invocation prints one JSON document {inputs, result, checks, timing}.
Rationals are rendered as exact "p/q" strings.  Exit codes: 0 success,
1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from .dimensions import g_formula, g_paths, g_pfaffian
from .linalg import identity, matmul
from .pfaffian import giambelli
from .polyring import MultiPoly, render, render_scalar, structured_terms
from .series import transition_matrix
from .shapes import (
    NonStrictPartition,
    ParameterIndexError,
    StrictPartition,
    is_strict,
    parse_params,
    parse_parts,
    render_partition,
)
from .tableaux import EnumerationGuard, check_guard, q_multiparam, q_via_unmarked
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _strict(text: str, what: str) -> StrictPartition:
    try:
        return StrictPartition(parse_parts(text))
    except (ValueError, NonStrictPartition) as exc:
        raise UsageError(f"{what}: {exc}") from None


def _params(text: str):
    try:
        return parse_params(text)
    except ValueError as exc:
        raise UsageError(f"--params: {exc}") from None


def cmd_compute(args) -> tuple:
    try:
        parts = parse_parts(args.shape)
    except ValueError as exc:
        raise UsageError(f"--shape: {exc}") from None
    a = _params(args.params)
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    kind = "P" if args.p else "Q"
    inputs = {"shape": render_partition(parts), "params": a.label(), "n": args.n,
              "function": kind, "method": args.method}
    if not is_strict(parts):
        result = {"polynomial": "0", "terms": [], "identically_zero": True,
                  "notice": f"{render_partition(parts)} has a repeated part, so {kind} is identically zero"}
        return inputs, result, {}, EXIT_OK
    lam = StrictPartition(parts)
    try:
        check_guard(lam, args.n, args.force)
        if args.method == "giambelli":
            poly = giambelli(lam, a, args.n)
        elif args.method == "unmarked":
            poly = q_via_unmarked(lam, a, args.n)
        else:
            poly = q_multiparam(lam, a, args.n)
    except EnumerationGuard as exc:
        raise UsageError(str(exc)) from None
    except ParameterIndexError as exc:
        raise UsageError(f"--params: {exc}") from None
    if not isinstance(poly, MultiPoly):
        poly = MultiPoly.const(args.n, poly)
    if kind == "P":
        poly = poly.exact_div(2 ** len(lam))
    result = {"polynomial": render(poly), "terms": structured_terms(poly),
              "degree": None if poly.is_zero() else poly.degree(),
              "identically_zero": poly.is_zero()}
    return inputs, result, {}, EXIT_OK


DIM_METHODS = {"paths": g_paths, "formula": g_formula, "pfaffian": g_pfaffian}


def cmd_dim(args) -> tuple:
    lam = _strict(args.outer, "--outer")
    mu = _strict(args.inner, "--inner")
    inputs = {"outer": render_partition(lam), "inner": render_partition(mu), "method": args.method}
    methods = list(DIM_METHODS) if args.method == "all" else [args.method]
    values = {m: DIM_METHODS[m](mu, lam) for m in methods}
    checks = {}
    code = EXIT_OK
    if len(methods) > 1:
        agree = len(set(values.values())) == 1
        checks["agree"] = agree
        code = EXIT_OK if agree else EXIT_FAIL
    return inputs, values, checks, code


def cmd_verify(args) -> tuple:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    inputs = {"suites": names, "max_weight": args.max_weight, "seed": args.seed}
    reports = [run_suite(n, args.max_weight, args.seed, args.jobs) for n in names]
    result = {r.suite: r.as_dict() for r in reports}
    if not args.verbose:
        for r in result.values():
            r.pop("outcomes")
    checks = {r.suite: r.passed for r in reports}
    return inputs, result, checks, EXIT_OK if all(checks.values()) else EXIT_FAIL


def cmd_transition(args) -> tuple:
    a = _params(args.a)
    b = _params(args.b)
    if args.max_weight < 0:
        raise UsageError("--max-weight must be non-negative")
    inputs = {"a": a.label(), "b": b.label(), "max_weight": args.max_weight, "roundtrip": args.roundtrip}
    try:
        t = transition_matrix(a, b, args.max_weight)
        back = transition_matrix(b, a, args.max_weight) if args.roundtrip else None
    except ParameterIndexError as exc:
        raise UsageError(str(exc)) from None
    result = {
        "shapes": [render_partition(s) for s in t.shapes],
        "matrix": [[render_scalar(v) for v in row] for row in t.entries],
    }
    checks = {"unitriangular": t.is_unitriangular()}
    if back is not None:
        checks["roundtrip_identity"] = matmul(t.entries, back.entries) == identity(len(t.shapes))
    return inputs, result, checks, EXIT_OK if all(checks.values()) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schurq", description="Exact multiparameter Schur P- and Q-functions.")
    parser.add_argument("--timing", action="store_true", help="report wall-clock seconds (output is then not reproducible)")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="expand P_{lam;a} or Q_{lam;a} in n variables")
    c.add_argument("--shape", required=True, help='parts such as "3,1", or "-" for the empty shape')
    c.add_argument("--params", default="classical", help="classical, factorial or custom:0,a2,a3,...")
    c.add_argument("--n", type=int, required=True, help="number of variables")
    which = c.add_mutually_exclusive_group()
    which.add_argument("--p", action="store_true", help="P-function")
    which.add_argument("--q", action="store_true", help="Q-function (default)")
    c.add_argument("--method", choices=["tableau", "giambelli", "unmarked"], default="tableau")
    c.add_argument("--force", action="store_true", help="ignore the enumeration guard")
    c.set_defaults(func=cmd_compute)

    d = sub.add_parser("dim", help="number of standard fillings of a skew shifted diagram")
    d.add_argument("--outer", required=True)
    d.add_argument("--inner", default="-")
    d.add_argument("--method", choices=[*DIM_METHODS, "all"], default="paths")
    d.set_defaults(func=cmd_dim)

    v = sub.add_parser("verify", help="run a verification battery")
    v.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    v.add_argument("--max-weight", type=int, default=None, help="size bound (suite default if omitted)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--verbose", action="store_true", help="list every instance")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("transition", help="matrix expressing Q_{mu;a} through Q_{nu;b}")
    t.add_argument("--a", required=True)
    t.add_argument("--b", required=True)
    t.add_argument("--max-weight", type=int, default=4)
    t.add_argument("--roundtrip", action="store_true", help="also check T(a,b) T(b,a) = 1")
    t.set_defaults(func=cmd_transition)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        inputs, result, checks, code = args.func(args)
    except UsageError as exc:
        print(f"schurq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc = {
        "command": args.command,
        "inputs": inputs,
        "result": result,
        "checks": checks,
        "timing": {"seconds": round(time.perf_counter() - start, 6)} if args.timing else None,
    }
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
