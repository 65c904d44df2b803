"""Command line: ``overpartition {compute,metrics,table,selftest,bench}``.

Exit status: 0 success, 1 selftest failure, 2 usage error, 3 corrupt cache
with fallback disabled.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import checks, metrics
from .errors import DomainError, FormatError
from .kernel import compute
from .plan import ComputePlan, Method, OutputFormat, default_workers

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_CACHE = 0, 1, 2, 3
CACHE_ENV = "OVERP_CACHE"


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _positive(text: str) -> int:
    value = _natural(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _emit(record: dict, fmt: OutputFormat, plain: str, out) -> None:
    if fmt is OutputFormat.STRUCTURED:
        print(json.dumps(record), file=out)
    else:
        print(plain, file=out)


def _plan(args) -> ComputePlan:
    cache = args.cache if args.cache is not None else os.environ.get(CACHE_ENV) or None
    return ComputePlan(
        method=Method(args.method),
        workers=args.workers,
        cache_path=Path(cache) if cache else None,
        output=OutputFormat(args.format),
        cache_fallback=not args.no_cache_fallback,
    )


def cmd_compute(args, out) -> int:
    plan = _plan(args)
    start = time.perf_counter()
    value = compute(args.n, plan)
    elapsed = time.perf_counter() - start
    digits = len(str(value))
    record = {
        "n": args.n,
        "value": str(value),
        "method": plan.method.value,
        "digits": digits,
        "elapsed": round(elapsed, 6),
    }
    _emit(record, plan.output, str(value), out)
    return EXIT_OK


def cmd_metrics(args, out) -> int:
    if args.n < 1:
        raise DomainError("metrics need n >= 1")
    report = metrics.m2_instrumented(args.n)
    plain = f"n={report.n} M1={report.m1} M2={report.m2} ratio={report.ratio_str}"
    _emit(report.as_record(), OutputFormat(args.format), plain, out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    ns = args.ns or [row[0] for row in metrics.PUBLISHED_TABLES[args.residue]]
    rows = metrics.ratio_table(args.residue, ns)
    if OutputFormat(args.format) is OutputFormat.STRUCTURED:
        for row in rows:
            print(json.dumps(row.as_record()), file=out)
    else:
        print(f"Values for M1(n) and M2(n) with n = {args.residue} (mod 4)", file=out)
        print(metrics.format_table(rows), file=out)
    return EXIT_OK


def cmd_selftest(args, out) -> int:
    max_n = args.max_n if args.max_n is not None else args.bound
    if max_n < 12:
        raise DomainError("selftest needs max_n >= 12 to cover every residue class")
    cache = args.cache if args.cache is not None else os.environ.get(CACHE_ENV) or None
    results = checks.run_all(max_n, Path(cache) if cache else None)
    for result in results:
        print(result.line(), file=out)
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} suites passed", file=out)
    return EXIT_OK if failed == 0 else EXIT_FAILED


def cmd_bench(args, out) -> int:
    plan = _plan(args)
    for n in args.ns:
        start = time.perf_counter()
        value = compute(n, plan)
        elapsed = time.perf_counter() - start
        record = {
            "n": n,
            "method": plan.method.value,
            "workers": plan.workers,
            "elapsed": round(elapsed, 6),
            "digits": len(str(value)),
            "value": str(value),
        }
        plain = f"n={n} method={plan.method.value} workers={plan.workers} digits={record['digits']} elapsed={elapsed:.3f}s"
        _emit(record, plan.output, plain, out)
    return EXIT_OK


def _add_plan_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--method", choices=[m.value for m in Method], default=Method.HYBRID.value)
    p.add_argument("--workers", type=_positive, default=default_workers())
    p.add_argument("--cache", metavar="PATH", default=None, help=f"table cache file (default: ${CACHE_ENV})")
    p.add_argument("--no-cache-fallback", action="store_true", help="fail with status 3 on a corrupt cache")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.PLAIN.value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="overpartition", description="Exact values of the overpartition function.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print p̄(n)")
    p.add_argument("n", type=_natural)
    _add_plan_options(p)
    _add_format(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("metrics", help="print M1(n), M2(n) and their ratio")
    p.add_argument("n", type=_natural)
    _add_format(p)
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("table", help="reproduce an M1/M2 table for one residue class")
    p.add_argument("ns", nargs="*", type=_positive)
    p.add_argument("--residue", type=int, choices=range(4), required=True)
    _add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("selftest", help="run the verification suites")
    p.add_argument("bound", nargs="?", type=_natural, default=200)
    p.add_argument("--max-n", type=_natural, default=None)
    p.add_argument("--cache", metavar="PATH", default=None)
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("bench", help="time p̄(n) for each n")
    p.add_argument("ns", nargs="+", type=_natural)
    _add_plan_options(p)
    _add_format(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except DomainError as exc:
        print(f"overpartition: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FormatError as exc:
        print(f"overpartition: corrupt cache: {exc}", file=sys.stderr)
        return EXIT_CACHE


if __name__ == "__main__":
    sys.exit(main())
