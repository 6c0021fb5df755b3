"""Command-line front end.

Thin adapter over the library: parses arguments, reads the JSON
mass-function format, and renders reports and sweep tables.  Exit codes
are stable: 0 success, 2 input or validation error, 3 oracle mismatch.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .core import mass_from_json
from .dimension import DimensionReport, information_dimension
from .experiments import (
    ConvergenceRow,
    ConvergenceTable,
    detect_limit,
    render_plot_data,
    render_table,
    run_convergence,
)
from .families import FAMILIES
from .oracle import brute_force_report, compare_reports

ORACLE_TOLERANCE = 1e-9
_BASES = {"2": 2.0, "e": math.e, "10": 10.0}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evidim",
        description="Information dimension of Dempster-Shafer mass functions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="dimension report for a mass-function JSON file")
    compute.add_argument("file", help="path to a mass-function JSON file")
    compute.add_argument("--format", choices=("json", "csv", "markdown"), default="json")
    compute.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check against the brute-force reference; exit 3 on divergence",
    )
    _common_flags(compute)

    sweep = sub.add_parser("sweep", help="convergence table for a parametric family")
    sweep.add_argument("family", help=f"one of {', '.join(sorted(FAMILIES))}")
    sweep.add_argument("n_min", type=int)
    sweep.add_argument("n_max", type=int)
    sweep.add_argument("--format", choices=("json", "csv", "markdown"), default="csv")
    sweep.add_argument(
        "--detect-limit",
        nargs=2,
        metavar=("TOL", "WINDOW"),
        help="append a convergence verdict for the final WINDOW rows at tolerance TOL",
    )
    sweep.add_argument(
        "--plot-data",
        metavar="PATH",
        help="write full-precision split_scale/entropy/N columns to PATH",
    )
    _common_flags(sweep)
    return parser


def _common_flags(cmd: argparse.ArgumentParser):
    cmd.add_argument("--decimals", type=int, default=4, help="rounded display digits, 1-15")
    cmd.add_argument(
        "--base",
        choices=tuple(_BASES),
        default="2",
        help="logarithm base for the entropy and split-scale fields (the dimension is base-free)",
    )


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "compute":
            return _cmd_compute(args)
        return _cmd_sweep(args)
    except (ValueError, OSError) as exc:
        # EvidenceError subclasses name the violated rule (NonUnitTotalError,
        # EmptySubsetError, ...); JSON and file errors land here too
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def _cmd_compute(args) -> int:
    _check_decimals(args.decimals)
    mass = mass_from_json(Path(args.file).read_text(encoding="utf-8"))
    report = information_dimension(mass)
    if args.oracle:
        reference = brute_force_report(mass)
        if not compare_reports(report, reference, ORACLE_TOLERANCE):
            print(
                f"oracle mismatch beyond {ORACLE_TOLERANCE}: "
                f"main={_triple(report)} oracle={_triple(reference)}",
                file=sys.stderr,
            )
            return 3
    scale = math.log2(_BASES[args.base])
    entropy = report.entropy_bits if scale == 1.0 else report.entropy_bits / scale
    split = report.split_scale_bits if scale == 1.0 else report.split_scale_bits / scale
    if args.format == "json":
        payload = {
            "entropy_bits": entropy,
            "split_scale_bits": split,
            "dimension": report.dimension,
            "degenerate": report.degenerate,
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        d = args.decimals
        cells = (f"{entropy:.{d}f}", f"{split:.{d}f}", f"{report.dimension:.{d}f}",
                 "true" if report.degenerate else "false")
        header = ("entropy_bits", "split_scale_bits", "dimension", "degenerate")
        if args.format == "csv":
            sys.stdout.write(",".join(header) + "\n" + ",".join(cells) + "\n")
        else:
            sys.stdout.write(
                "| " + " | ".join(header) + " |\n"
                + "|" + " --- |" * len(header) + "\n"
                + "| " + " | ".join(cells) + " |\n"
            )
    return 0


def _cmd_sweep(args) -> int:
    _check_decimals(args.decimals)
    table = run_convergence(args.family, args.n_min, args.n_max)
    verdict = None
    if args.detect_limit is not None:
        tol, window = float(args.detect_limit[0]), int(args.detect_limit[1])
        verdict = detect_limit(table, window, tol)
    scale = math.log2(_BASES[args.base])
    display = table if scale == 1.0 else _rescale(table, scale)
    if args.plot_data:
        Path(args.plot_data).write_text(render_plot_data(display), encoding="utf-8")
    out = render_table(display, args.format, args.decimals)
    if verdict is not None:
        if args.format == "json":
            payload = json.loads(out)
            payload["verdict"] = {
                "converged": verdict.converged,
                "limit_estimate": verdict.limit_estimate,
                "achieved_at_n": verdict.achieved_at_n,
                "tolerance": verdict.tolerance,
            }
            out = json.dumps(payload, indent=2) + "\n"
        else:
            word = "converged" if verdict.converged else "not-converged"
            out += f"{word} limit={verdict.limit_estimate:.{args.decimals}f}\n"
    sys.stdout.write(out)
    return 0


def _rescale(table: ConvergenceTable, scale: float) -> ConvergenceTable:
    rows = tuple(
        ConvergenceRow(r.n, r.entropy_bits / scale, r.split_scale_bits / scale, r.dimension)
        for r in table.rows
    )
    return ConvergenceTable(table.family, rows)


def _check_decimals(decimals: int):
    if not 1 <= decimals <= 15:
        raise ValueError("decimals must be between 1 and 15")


def _triple(report: DimensionReport) -> str:
    return (
        f"({report.entropy_bits!r}, {report.split_scale_bits!r}, "
        f"{report.dimension!r}, degenerate={report.degenerate})"
    )


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
