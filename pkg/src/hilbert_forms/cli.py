"""Command-line front end: bound reports, grid scans, spectral runs, verification.

Output is CSV (header row, round-trip float repr, '.' decimal point) or
JSON with the field names of the underlying result records.  Exit codes:
0 success, 1 runtime or verification failure, 2 usage error.  Grid scans
may run their points on a thread pool capped by HILBERT_FORMS_THREADS;
rows are emitted in grid order either way.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict

from . import __version__, bounds, normest, roots, verify
from .errors import AccuracyError, BracketError, ConvergenceError

__all__ = ["main", "entry"]


class _UsageError(Exception):
    pass


def _grid_map(fn, items):
    threads = int(os.environ.get("HILBERT_FORMS_THREADS", "1") or "1")
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _linspace(lo, hi, steps):
    return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise _UsageError(message)


def _bounds_payload(alpha: float) -> dict:
    report = bounds.theorem_bounds(alpha)
    re_w = alpha + 0.5
    comp_lower, comp_upper = bounds.composition_bounds(re_w)
    payload = asdict(report)
    payload["composition"] = {"re_w": re_w, "lower": comp_lower, "upper": comp_upper}
    return payload


def _cmd_bounds(args) -> int:
    _require(args.alpha > 0.0, f"--alpha must be positive, got {args.alpha}")
    payload = _bounds_payload(args.alpha)
    if args.format == "json":
        _emit(_json_text(payload), args.output)
    else:
        comp = payload["composition"]
        header = [
            "alpha", "lower", "upper", "exact", "lower_method", "upper_method",
            "comp_re_w", "comp_lower", "comp_upper",
        ]
        row = [
            payload["alpha"], payload["lower"], payload["upper"], payload["exact"],
            payload["lower_method"], payload["upper_method"],
            comp["re_w"], comp["lower"], comp["upper"],
        ]
        _emit(_csv_text(header, [row]), args.output)
    return 0


_SCAN_HEADER = [
    "alpha", "two_over_alpha", "zeta_1p_alpha", "zeta_1p_2alpha",
    "improved_lower", "lower", "upper",
]


def _scan_row(alpha: float):
    from .special import zeta

    report = bounds.theorem_bounds(alpha)
    improved = bounds.improved_lower_value(alpha) if alpha > 1.0 else math.nan
    return [
        alpha, 2.0 / alpha, zeta(1.0 + alpha), zeta(1.0 + 2.0 * alpha),
        improved, report.lower, report.upper,
    ]


def _check_grid(args) -> None:
    _require(args.alpha_min < args.alpha_max, "--alpha-min must be below --alpha-max")
    _require(args.steps >= 2, "--steps must be at least 2")
    _require(args.alpha_min > 0.0, "--alpha-min must be positive")


def _cmd_scan(args) -> int:
    _check_grid(args)
    rows = _grid_map(_scan_row, _linspace(args.alpha_min, args.alpha_max, args.steps))
    _emit(_csv_text(_SCAN_HEADER, rows), args.output)
    return 0


def _cmd_sup(args) -> int:
    _require(args.alpha > 0.0, f"--alpha must be positive, got {args.alpha}")
    _require(args.m_max >= 2, "--m-max must be at least 2")
    sup, argmax = bounds.s_alpha_sup(args.alpha, args.m_max, args.tol)
    payload = {"alpha": args.alpha, "m_max": args.m_max, "sup": sup, "argmax": argmax}
    if args.format == "json":
        _emit(_json_text(payload), args.output)
    else:
        _emit(_csv_text(["alpha", "m_max", "sup", "argmax"],
                        [[args.alpha, args.m_max, sup, argmax]]), args.output)
    return 0


def _cmd_eig(args) -> int:
    _require(args.alpha > 0.0, f"--alpha must be positive, got {args.alpha}")
    _require(args.n >= 1, "--n must be a positive integer")
    if args.n <= 4096:
        result = normest.top_eigen(normest.build_truncated(args.alpha, args.n),
                                   args.tol, args.max_iter)
    else:
        result = normest.top_eigen_matrix_free(args.alpha, args.n, args.tol, args.max_iter)
    payload = {"alpha": args.alpha, "n": args.n, **asdict(result)}
    if args.format == "json":
        _emit(_json_text(payload), args.output)
    else:
        _emit(_csv_text(["alpha", "n", "value", "iterations", "residual"],
                        [[args.alpha, args.n, result.value, result.iterations, result.residual]]),
              args.output)
    return 0


def _cmd_rayleigh(args) -> int:
    _require(args.alpha > 0.0, f"--alpha must be positive, got {args.alpha}")
    _require(args.n >= 1, "--n must be a positive integer")
    if args.kind == "eps_family":
        _require(args.eps is not None, "--eps is required for eps_family")
        _require(0.0 < args.eps < args.alpha, "--eps must lie in (0, alpha)")
    else:
        _require(args.alpha > 1.0, "alpha_family needs --alpha > 1")
    value = normest.rayleigh_quotient(args.alpha, args.n, kind=args.kind, eps=args.eps)
    payload = {"alpha": args.alpha, "kind": args.kind, "eps": args.eps, "n": args.n,
               "value": value}
    if args.format == "json":
        _emit(_json_text(payload), args.output)
    else:
        _emit(_csv_text(["alpha", "kind", "eps", "n", "value"],
                        [[args.alpha, args.kind, args.eps, args.n, value]]), args.output)
    return 0


def _cmd_roots(args) -> int:
    named = {
        "alpha0": roots.solve_alpha0(args.tol),
    }
    h = roots.solve_h_roots(args.tol)
    named["alpha1"] = h.alpha1
    named["alpha2"] = h.alpha2
    crossings = roots.solve_crossings(args.tol)
    named["zeta_vs_2a"] = crossings.zeta_vs_2a
    named["zeta2_vs_2a"] = crossings.zeta2_vs_2a
    named["improved_vs_2a"] = crossings.improved_vs_2a
    if args.format == "json":
        _emit(_json_text({name: asdict(r) for name, r in named.items()}), args.output)
    else:
        header = ["name", "value", "bracket_lo", "bracket_hi", "residual", "iterations"]
        rows = [[name, r.value, r.bracket_lo, r.bracket_hi, r.residual, r.iterations]
                for name, r in named.items()]
        _emit(_csv_text(header, rows), args.output)
    return 0


def _cmd_verify(args) -> int:
    outcome = verify.run_suite(args.suite)
    payload = {"suite": outcome.suite, "cases": outcome.cases, "failures": outcome.failures}
    _emit(_json_text(payload), args.output)
    return 0 if outcome.passed else 1


def _cmd_sandwich(args) -> int:
    _check_grid(args)
    _require(args.alpha_min >= 2.0, "--alpha-min must be at least 2 for the sandwich scan")

    def row(alpha):
        report = bounds.theorem_bounds(alpha)
        return [alpha,
                (report.lower - 1.0) * 4.0**alpha,
                (report.upper - 1.0) * 2.0**alpha]

    rows = _grid_map(row, _linspace(args.alpha_min, args.alpha_max, args.steps))
    header = ["alpha", "lower_minus_1_times_4_pow_alpha", "upper_minus_1_times_2_pow_alpha"]
    _emit(_csv_text(header, rows), args.output)
    return 0


def _seed_info() -> dict:
    h = roots.solve_h_roots(1e-10)
    return {
        "alpha0": roots.solve_alpha0(1e-10).value,
        "alpha1": h.alpha1.value,
        "alpha2": h.alpha2.value,
        "version": __version__,
    }


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbert-forms",
        description="Bounds, constants and spectral estimates for the discrete "
                    "Hilbert-type bilinear forms.",
    )
    parser.add_argument("--seed-info", action="store_true",
                        help="print the computed named constants and the library version")
    sub = parser.add_subparsers(dest="command")

    def common(p, fmt=True):
        if fmt:
            p.add_argument("--format", choices=("csv", "json"), default="json")
        p.add_argument("--output", default=None, help="write to this path instead of stdout")

    p = sub.add_parser("bounds", help="lower/upper bound report for one alpha")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    common(p)
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("scan", help="CSV of the bound curves over an alpha grid")
    p.add_argument("--alpha-min", type=float, default=1.0)
    p.add_argument("--alpha-max", type=float, default=2.0)
    p.add_argument("--steps", type=int, default=101)
    common(p, fmt=False)
    p.set_defaults(handler=_cmd_scan)

    p = sub.add_parser("sup", help="supremum of the majorant sequence")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--m-max", type=int, default=10**5)
    p.add_argument("--tol", type=float, default=1e-10)
    common(p)
    p.set_defaults(handler=_cmd_sup)

    p = sub.add_parser("eig", help="dominant eigenvalue of a finite section")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--max-iter", type=int, default=100_000)
    common(p)
    p.set_defaults(handler=_cmd_eig)

    p = sub.add_parser("rayleigh", help="test-vector quotient on a finite section")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--kind", choices=("eps_family", "alpha_family"), default="eps_family")
    p.add_argument("--eps", type=float, default=None)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(handler=_cmd_rayleigh)

    p = sub.add_parser("roots", help="solve the named equations and crossings")
    p.add_argument("--tol", type=float, default=1e-10)
    common(p)
    p.set_defaults(handler=_cmd_roots)

    p = sub.add_parser("verify", help="run one verification suite")
    p.add_argument("--suite", choices=sorted(verify.SUITES), required=True)
    common(p, fmt=False)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("sandwich", help="normalized large-alpha gap columns")
    p.add_argument("--alpha-min", type=float, default=2.0)
    p.add_argument("--alpha-max", type=float, default=8.0)
    p.add_argument("--steps", type=int, default=61)
    common(p, fmt=False)
    p.set_defaults(handler=_cmd_sandwich)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.seed_info:
        sys.stdout.write(_json_text(_seed_info()))
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceError, AccuracyError, BracketError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())
