"""
Command-line front end.

    streammoments stats    [FILE|-]  summary statistics in one pass
    streammoments parallel [FILE|-]  same, via per-chunk accumulators and merge
    streammoments compare            stable vs naive accumulation on huge-mean data
    streammoments bench              update throughput and per-update operation counts

Exit status: 0 on success, 1 on data or I/O errors, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from typing import Optional, Sequence

import numpy as np

from .core import MAX_ORDER, MomentAccumulator
from .errors import MomentsError, ParseError
from .flops import count_update_ops
from .merge import accumulate_chunks
from .oracles import PowerSumAccumulator, naive_central_moments, twopass_central_moments
from .streamio import ParseConfig, chunk, chunk_size_for, open_source, parse_stream

DEFAULT_SEED = 20080917

REPORT_KEYS = (
    "input", "n", "mean", "variance", "sample_variance", "skewness", "kurtosis",
    "excess_kurtosis", "central_moments", "bad_tokens", "elapsed_ms", "state",
)


class DataError(Exception):
    """Input problem reported with exit status 1."""


def _fmt(value) -> str:
    if value is None:
        return "n/a"
    if isinstance(value, (int, str)):
        return str(value)
    return f"{value:.6g}"


def _table(rows: Sequence[tuple[str, object]]) -> str:
    width = max(len(name) for name, _ in rows)
    return "\n".join(f"{name:<{width}}  {_fmt(value)}" for name, value in rows)


# -- reports ----------------------------------------------------------------

def build_report(acc: MomentAccumulator, input_name: str, bad_tokens: int,
                 elapsed_ms: Optional[float]) -> dict:
    s = acc.summarize()
    report = {
        "input": input_name,
        "n": s.count,
        "mean": s.mean,
        "variance": s.variance,
        "sample_variance": s.sample_variance,
        "skewness": s.skewness,
        "kurtosis": s.kurtosis,
        "excess_kurtosis": s.excess_kurtosis,
        "central_moments": list(s.central_moments),
        "bad_tokens": bad_tokens,
        "elapsed_ms": elapsed_ms,
        "state": acc.to_dict(),
    }
    assert tuple(report) == REPORT_KEYS
    return report


def render_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report)
    rows = [
        ("input", report["input"]),
        ("n", report["n"]),
        ("mean", report["mean"]),
        ("variance", report["variance"]),
        ("sample variance", report["sample_variance"]),
        ("skewness", report["skewness"]),
        ("kurtosis", report["kurtosis"]),
        ("excess kurtosis", report["excess_kurtosis"]),
    ]
    rows += [(f"central moment {q}", m)
             for q, m in enumerate(report["central_moments"], start=2)]
    rows.append(("bad tokens", report["bad_tokens"]))
    if report["elapsed_ms"] is not None:
        rows.append(("elapsed ms", report["elapsed_ms"]))
    return _table(rows)


# -- argument parsing ---------------------------------------------------------

def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _order(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 2 <= value <= MAX_ORDER:
        raise argparse.ArgumentTypeError(f"order must be in 2..{MAX_ORDER}, got {value}")
    return value


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", default="-",
                   help="input file, or - for standard input (default)")
    p.add_argument("--order", type=_order, default=4,
                   help=f"highest central moment to track, 2..{MAX_ORDER} (default 4)")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--csv", action="store_true", help="read a CSV column instead of plain text")
    p.add_argument("--column", type=int, default=None,
                   help="0-based CSV column (default 0; requires --csv)")
    p.add_argument("--delimiter", default=",", help="CSV delimiter (default ,)")
    p.add_argument("--skip-bad", action="store_true",
                   help="skip unparseable tokens instead of failing")
    p.add_argument("--no-timing", action="store_true",
                   help="emit elapsed_ms as null for reproducible output")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="streammoments",
        description="One-pass, numerically stable central moments.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="summary statistics in one pass")
    _add_input_flags(p)

    p = sub.add_parser("parallel", help="chunked accumulation combined by merge")
    _add_input_flags(p)
    split = p.add_mutually_exclusive_group()
    split.add_argument("--chunks", type=_positive_int, default=None,
                       help="number of chunks (default: available CPUs)")
    split.add_argument("--chunk-size", type=_positive_int, default=None)
    p.add_argument("--jobs", type=_positive_int, default=None,
                   help="worker processes (default: available CPUs)")

    p = sub.add_parser("compare", help="stable vs naive accumulation on huge-mean data")
    p.add_argument("--n", type=_positive_int, default=10**6)
    p.add_argument("--mean-offset", type=float, default=1e9)
    p.add_argument("--stddev", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--order", type=_order, default=4)
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("bench", help="update throughput and operation counts")
    p.add_argument("--n", type=_positive_int, default=10**5)
    p.add_argument("--order", type=_order, default=4)
    p.add_argument("--instrument", action="store_true",
                   help="also count floating-point operations per update")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--format", choices=("table", "json"), default="table")
    return parser


def _parse_config(parser: argparse.ArgumentParser, args) -> ParseConfig:
    if args.column is not None and not args.csv:
        parser.error("--column requires --csv")
    if len(args.delimiter) != 1:
        parser.error("--delimiter must be a single character")
    if args.column is not None and args.column < 0:
        parser.error("--column must be >= 0")
    return ParseConfig(
        format="csv" if args.csv else "plain",
        column=(args.column or 0) if args.csv else None,
        delimiter=args.delimiter,
        on_bad_token="skip" if args.skip_bad else "error",
    )


def _read(args, config: ParseConfig):
    try:
        if args.input == "-":
            parsed = parse_stream(open_source("-"), config)
        else:
            with open_source(args.input) as fh:
                parsed = parse_stream(fh, config)
    except OSError as exc:
        raise DataError(f"cannot read {args.input}: {exc.strerror or exc}")
    except ParseError as exc:
        raise DataError(f"{args.input}: {exc}")
    if not parsed.values:
        raise DataError("no data")
    return parsed


# -- commands -------------------------------------------------------------------

def cmd_stats(parser, args) -> int:
    config = _parse_config(parser, args)
    start = time.perf_counter()
    parsed = _read(args, config)
    acc = MomentAccumulator.from_values(parsed.values, args.order)
    elapsed = None if args.no_timing else (time.perf_counter() - start) * 1e3
    print(render_report(build_report(acc, args.input, parsed.bad_tokens, elapsed),
                        args.format))
    return 0


def cmd_parallel(parser, args) -> int:
    config = _parse_config(parser, args)
    cpus = os.cpu_count() or 1
    start = time.perf_counter()
    parsed = _read(args, config)
    values = parsed.values
    size = args.chunk_size or chunk_size_for(len(values), args.chunks or cpus)
    acc = accumulate_chunks(chunk(values, size), args.order, jobs=args.jobs or cpus)
    elapsed = None if args.no_timing else (time.perf_counter() - start) * 1e3
    print(render_report(build_report(acc, args.input, parsed.bad_tokens, elapsed),
                        args.format))
    return 0


def _errors(value: float, truth: float) -> tuple[float, Optional[float]]:
    err = abs(value - truth)
    return err, (err / abs(truth) if truth != 0.0 else None)


def compare_rows(n: int, mean_offset: float, stddev: float, seed: int,
                 order: int) -> list[dict]:
    """Stable, naive and two-pass central moments ``M_q / n`` on generated data."""
    rng = np.random.default_rng(seed)
    data = (mean_offset + stddev * rng.standard_normal(n)).tolist()

    stable = MomentAccumulator.from_values(data, order)
    naive = PowerSumAccumulator(order)
    naive.extend(data)
    _, naive_sums = naive_central_moments(naive)
    _, oracle_sums = twopass_central_moments(data, order)

    rows = []
    for q in range(2, order + 1):
        truth = oracle_sums[q - 2] / n
        s = stable.central_sum(q) / n
        v = naive_sums[q - 2] / n
        s_abs, s_rel = _errors(s, truth)
        v_abs, v_rel = _errors(v, truth)
        rows.append({
            "statistic": "variance" if q == 2 else f"central_moment_{q}",
            "oracle": truth,
            "stable": s, "stable_abs_error": s_abs, "stable_rel_error": s_rel,
            "naive": v, "naive_abs_error": v_abs, "naive_rel_error": v_rel,
        })
    return rows


def cmd_compare(parser, args) -> int:
    if not math.isfinite(args.mean_offset):
        parser.error("--mean-offset must be finite")
    if not (math.isfinite(args.stddev) and args.stddev >= 0):
        parser.error("--stddev must be finite and >= 0")
    rows = compare_rows(args.n, args.mean_offset, args.stddev, args.seed, args.order)
    if args.format == "json":
        print(json.dumps({
            "n": args.n, "mean_offset": args.mean_offset, "stddev": args.stddev,
            "seed": args.seed, "order": args.order, "rows": rows,
        }))
        return 0
    print(f"n={args.n} mean_offset={args.mean_offset:g} stddev={args.stddev:g} "
          f"seed={args.seed}")
    header = ("statistic", "oracle", "stable", "stable abs err", "stable rel err",
              "naive", "naive abs err", "naive rel err")
    keys = ("statistic", "oracle", "stable", "stable_abs_error", "stable_rel_error",
            "naive", "naive_abs_error", "naive_rel_error")
    cells = [header] + [tuple(r[k] if k == "statistic" else _fmt(r[k]) for k in keys)
                        for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    for row in cells:
        print("  ".join(c.rjust(w) if i else c.ljust(w)
                        for i, (c, w) in enumerate(zip(row, widths))))
    return 0


def _throughput(step, values) -> float:
    start = time.perf_counter()
    for x in values:
        step(x)
    return len(values) / (time.perf_counter() - start)


def cmd_bench(parser, args) -> int:
    rng = np.random.default_rng(args.seed)
    values = rng.standard_normal(args.n).tolist()
    paths = [
        (f"generic order {args.order}", args.order, "generic",
         MomentAccumulator(args.order).update),
        ("unrolled order 4", 4, "order4", MomentAccumulator(4).update_order4),
    ]
    results = []
    for name, order, path, step in paths:
        row = {"path": name, "order": order, "values_per_second": _throughput(step, values)}
        if args.instrument:
            counter, updates = count_update_ops(values[:1000], order, path)
            per = counter.per_update(updates)
            row["flops_per_update"] = per["flops"]
            row["divisions_per_update"] = per["divs"]
        results.append(row)
    if args.format == "json":
        print(json.dumps({"n": args.n, "paths": results}))
        return 0
    for row in results:
        line = f"{row['path']:<18}  {row['values_per_second']:12.0f} values/s"
        if args.instrument:
            line += (f"  {_fmt(row['flops_per_update'])} FLOPs/update"
                     f"  {_fmt(row['divisions_per_update'])} divisions/update")
        print(line)
    return 0


COMMANDS = {
    "stats": cmd_stats,
    "parallel": cmd_parallel,
    "compare": cmd_compare,
    "bench": cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](parser, args)
    except SystemExit as exc:  # argparse usage errors and --help
        return exc.code if isinstance(exc.code, int) else 2
    except (DataError, MomentsError) as exc:
        print(f"streammoments: {exc}", file=sys.stderr)
        return 1
