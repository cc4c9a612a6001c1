"""Command-line surface: coefficients, polynomials, enumeration, verification, tables.

Exit codes: 0 on success, 1 when a verification or cross-method consistency
check fails, 2 on usage or parameter errors.  All big integers are printed
as decimal strings; JSON output round-trips losslessly.

The environment variable KLM_MAX_N (default 12) caps the ground-set size for
recurrence-oracle computations, which are exponential in n by design.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time

from .closedforms import (
    RhoUniformParams,
    build_rho_uniform,
    coeff_rho,
    coeff_uniform_klum,
    kl_poly_rho,
    valid_rhos,
)
from .errors import KlmatroidsError
from .exactarith import IntPoly
from .identities import (
    IdentityReport,
    run_identity_sweeps,
    sweep_gf_truncation,
)
from .matroid import kl_poly
from .tableaux import (
    count_skyt_rho_direct,
    enumerate_skyt,
    satisfies_removed_family_conditions,
)
from . import verification

DEFAULT_ORACLE_CAP = 12

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_USAGE = 2


def oracle_cap() -> int:
    raw = os.environ.get("KLM_MAX_N", "")
    try:
        return int(raw) if raw else DEFAULT_ORACLE_CAP
    except ValueError:
        return DEFAULT_ORACLE_CAP


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _envelope(query: dict, result, method: str, elapsed_ms: float) -> str:
    def stringify(value):
        if isinstance(value, bool):
            return value
        if isinstance(value, int):
            return str(value)
        if isinstance(value, IntPoly):
            return [str(c) for c in value.coeffs]
        if isinstance(value, dict):
            return {k: stringify(v) for k, v in value.items()}
        if isinstance(value, (list, tuple)):
            return [stringify(v) for v in value]
        return value

    payload = {
        "query": stringify(query),
        "result": stringify(result),
        "method": method,
        "elapsed_ms": round(elapsed_ms, 3),
    }
    return json.dumps(payload)


def _coeff_by_method(method: str, params: RhoUniformParams, i: int) -> int:
    if method == "tableau":
        return coeff_rho(params.m, params.d, i, params.rho)
    if method == "direct":
        return count_skyt_rho_direct(params.m, params.d, i, params.rho)
    if method == "closed-form":
        return coeff_uniform_klum(params.m, params.d, i)
    if method == "oracle":
        return kl_poly(build_rho_uniform(params)).coeff(i)
    raise ValueError(f"unknown method {method!r}")


def _methods_for(method: str, params: RhoUniformParams, exhaustive_allowed: bool) -> list[str]:
    if method != "all":
        return [method]
    methods = ["tableau"]
    if exhaustive_allowed:
        methods.append("direct")
    if params.rho == 0:
        methods.append("closed-form")
    if exhaustive_allowed:
        methods.append("oracle")
    return methods


def cmd_coeff(args) -> int:
    try:
        params = RhoUniformParams(args.m, args.d, args.rho)
    except KlmatroidsError as exc:
        return _fail_usage(str(exc))
    if args.method == "closed-form" and params.rho != 0:
        return _fail_usage("the closed-form method applies to rho = 0 only")
    # both the recurrence and filtered enumeration are exponential in m + d
    exhaustive_allowed = params.n <= oracle_cap()
    if args.method in ("oracle", "direct") and not exhaustive_allowed:
        return _fail_usage(
            f"method {args.method} needs {params.n} elements, above the "
            f"KLM_MAX_N cap {oracle_cap()}"
        )
    methods = _methods_for(args.method, params, exhaustive_allowed)
    start = time.perf_counter()
    values: dict[str, int] = {}
    for method in methods:
        values[method] = _coeff_by_method(method, params, args.i)
    elapsed = (time.perf_counter() - start) * 1000
    agreed = len(set(values.values())) == 1
    query = {"m": args.m, "d": args.d, "i": args.i, "rho": args.rho}
    if args.format == "json":
        result = values if len(values) > 1 else next(iter(values.values()))
        print(_envelope(query, result, args.method, elapsed))
    else:
        if len(values) == 1:
            print(next(iter(values.values())))
        else:
            for method, value in values.items():
                print(f"{method}: {value}")
            print("OK" if agreed else "FAIL: methods disagree")
    return EXIT_OK if agreed else EXIT_INCONSISTENT


def cmd_klpoly(args) -> int:
    try:
        params = RhoUniformParams(args.m, args.d, args.rho)
    except KlmatroidsError as exc:
        return _fail_usage(str(exc))
    oracle_allowed = params.n <= oracle_cap()
    if args.method == "oracle" and not oracle_allowed:
        return _fail_usage(
            f"oracle needs {params.n} elements, above the KLM_MAX_N cap {oracle_cap()}"
        )
    start = time.perf_counter()
    polys: dict[str, IntPoly] = {}
    if args.method in ("tableau", "all"):
        polys["tableau"] = kl_poly_rho(params)
    if args.method == "oracle" or (args.method == "all" and oracle_allowed):
        polys["oracle"] = kl_poly(build_rho_uniform(params))
    elapsed = (time.perf_counter() - start) * 1000
    agreed = len(set(polys.values())) == 1
    query = {"m": args.m, "d": args.d, "rho": args.rho}
    if args.format == "json":
        result = (
            {name: poly for name, poly in polys.items()}
            if len(polys) > 1
            else next(iter(polys.values()))
        )
        print(_envelope(query, result, args.method, elapsed))
    else:
        if len(polys) == 1:
            print(str(next(iter(polys.values()))))
        else:
            for name, poly in polys.items():
                print(f"{name}: {poly}")
            print("OK" if agreed else "FAIL: methods disagree")
    return EXIT_OK if agreed else EXIT_INCONSISTENT


def cmd_enumerate(args) -> int:
    if args.i < 1:
        return _fail_usage("enumeration needs i >= 1 (i = 0 shapes are count conventions)")
    family = args.family
    d = args.d
    if family == "rho":
        derived = args.b + 2 * args.i - 1
        if d is None:
            d = derived
        elif d != derived:
            return _fail_usage(
                f"shape (a={args.a}, i={args.i}, b={args.b}) carries d={derived}, not {d}"
            )
    try:
        fillings = enumerate_skyt(args.a, args.i, args.b)
    except KlmatroidsError as exc:
        return _fail_usage(str(exc))
    if family == "overline":
        n = args.a + 2 * args.i + args.b - 2
        largest = set(range(n - (args.a - 2) + 1, n + 1))
        fillings = [
            f
            for f in fillings
            if f.value_at(0, 0) == 1
            and set(f.columns[0][2:]) == largest
        ]
    elif family == "rho":
        fillings = [
            f for f in fillings if satisfies_removed_family_conditions(f, d, args.rho)
        ]
    for f in fillings:
        if args.format == "json":
            print(f.to_json())
        else:
            cols = " | ".join(",".join(str(v) for v in col) for col in f.columns)
            print(f"[{cols}]")
    if args.format == "json":
        print(json.dumps({"count": len(fillings)}))
    else:
        print(f"count: {len(fillings)}")
    return EXIT_OK


def _print_reports(reports: list[IdentityReport], fmt: str) -> int:
    if fmt == "json":
        print(json.dumps([r.to_json_dict() for r in reports]))
    else:
        for r in reports:
            print(r.summary())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_INCONSISTENT


def cmd_verify(args) -> int:
    jobs = args.jobs if args.jobs else verification.default_jobs()
    max_n = args.max_n
    if max_n > oracle_cap():
        return _fail_usage(
            f"--max-n {max_n} is above the KLM_MAX_N cap {oracle_cap()}"
        )
    runners = {
        "theorem1": lambda: [verification.sweep_theorem1(max_n, jobs)],
        "theorem2": lambda: [verification.sweep_theorem2(max_n, jobs)],
        "symmetry": lambda: [
            verification.sweep_counting(jobs=jobs),
            verification.sweep_symmetry(jobs=jobs),
        ],
        "charpoly": lambda: [verification.sweep_charpoly(max_n, jobs)],
        "minors": lambda: [verification.sweep_minors(max_n, jobs)],
        "flats": lambda: [verification.sweep_flats(max_n, jobs)],
        "identities": lambda: run_identity_sweeps(order=args.series_order, include_gf=False),
        "gf": lambda: [sweep_gf_truncation(order=args.series_order)],
        "monotonicity": lambda: [verification.sweep_monotonicity(max_n, jobs)],
    }
    if args.suite == "all":
        reports = []
        for name in runners:
            reports.extend(runners[name]())
    else:
        reports = runners[args.suite]()
    return _print_reports(reports, args.format)


def cmd_table(args) -> int:
    if args.m_max < 1 or args.d_max < 1:
        return _fail_usage("--m-max and --d-max must be at least 1")
    rows = []
    for m in range(1, args.m_max + 1):
        for d in range(1, args.d_max + 1):
            if args.rho not in valid_rhos(m, d):
                continue
            for i in range((d - 1) // 2 + 1):
                rows.append((m, d, args.rho, i, coeff_rho(m, d, i, args.rho)))
    if args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["m", "d", "rho", "i", "coefficient"])
        for row in rows:
            writer.writerow([str(v) for v in row])
    elif args.format == "json":
        payload = [
            {"m": m, "d": d, "rho": rho, "i": i, "coefficient": str(c)}
            for (m, d, rho, i, c) in rows
        ]
        print(json.dumps(payload))
    else:
        print(f"{'m':>3} {'d':>3} {'rho':>4} {'i':>3} {'coefficient':>16}")
        for (m, d, rho, i, c) in rows:
            print(f"{m:>3} {d:>3} {rho:>4} {i:>3} {c:>16}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klm",
        description="Exact Kazhdan-Lusztig polynomials of matroids, three independent ways",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    coeff = sub.add_parser("coeff", help="one KL coefficient of U(m, d; rho)")
    coeff.add_argument("--m", type=int, required=True)
    coeff.add_argument("--d", type=int, required=True)
    coeff.add_argument("--i", type=int, required=True)
    coeff.add_argument("--rho", type=int, default=0)
    coeff.add_argument(
        "--method",
        choices=["tableau", "direct", "closed-form", "oracle", "all"],
        default="tableau",
        help="tableau: counting formula; direct: filtered enumeration; "
        "closed-form: older uniform-only formula; oracle: defining recurrence",
    )
    coeff.add_argument("--format", choices=["text", "json"], default="text")
    coeff.set_defaults(func=cmd_coeff)

    klpoly = sub.add_parser("klpoly", help="the full KL polynomial, low degree first")
    klpoly.add_argument("--m", type=int, required=True)
    klpoly.add_argument("--d", type=int, required=True)
    klpoly.add_argument("--rho", type=int, default=0)
    klpoly.add_argument(
        "--method", choices=["tableau", "oracle", "all"], default="tableau"
    )
    klpoly.add_argument("--format", choices=["text", "json"], default="text")
    klpoly.set_defaults(func=cmd_klpoly)

    enum = sub.add_parser("enumerate", help="stream the legal fillings of a shape")
    enum.add_argument("--a", type=int, required=True)
    enum.add_argument("--i", type=int, required=True)
    enum.add_argument("--b", type=int, required=True)
    enum.add_argument(
        "--family",
        choices=["skyt", "overline", "rho"],
        default="skyt",
        help="skyt: all fillings; overline: top-left 1 with maximal left tail; "
        "rho: fillings passing the removed-family boundary conditions",
    )
    enum.add_argument("--d", type=int, default=None, help="rank for --family rho (derived from the shape when omitted)")
    enum.add_argument("--rho", type=int, default=0)
    enum.add_argument("--format", choices=["text", "json"], default="text")
    enum.set_defaults(func=cmd_enumerate)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument(
        "--suite",
        required=True,
        choices=[
            "theorem1",
            "theorem2",
            "symmetry",
            "charpoly",
            "minors",
            "flats",
            "identities",
            "gf",
            "monotonicity",
            "all",
        ],
    )
    verify.add_argument("--max-n", type=int, default=9, help="cap on m + d for matroid sweeps")
    verify.add_argument("--jobs", type=int, default=0, help="parallel workers (0 = all cores)")
    verify.add_argument("--series-order", type=int, default=10)
    verify.add_argument("--format", choices=["text", "json"], default="text")
    verify.set_defaults(func=cmd_verify)

    table = sub.add_parser("table", help="triangle of coefficients over (m, d, i)")
    table.add_argument("--m-max", type=int, required=True)
    table.add_argument("--d-max", type=int, required=True)
    table.add_argument("--rho", type=int, default=0)
    table.add_argument("--format", choices=["text", "csv", "json"], default="text")
    table.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except KlmatroidsError as exc:
        return _fail_usage(str(exc))
    except BrokenPipeError:
        # downstream consumer (head, less) closed the stream mid-output
        try:
            sys.stdout.close()
        except Exception:
            pass
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
