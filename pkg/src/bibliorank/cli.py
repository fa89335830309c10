"""Command line interface: ``bibliorank {table,classes,scenario,plot}``.

Exit codes: 0 success, 2 input error, 3 degenerate distribution,
4 scenario step failure.  Diagnostics go to stderr as a single line.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .core import INDICATORS, class_report, indicator_table
from .exceptions import DegenerateDistribution, InputError, ScenarioStepError
from .io import (
    FORMATS,
    INPUT_FORMATS,
    parse_dataset,
    parse_scenario,
    write_paper_series,
    write_scenario_report,
    write_table,
)
from .scenario import analyze_scenario, run_scenario

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_SCENARIO = 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _read(path: str) -> tuple:
    if path == "-":
        return sys.stdin.read(), "<stdin>"
    try:
        return Path(path).read_text(encoding="utf-8"), path
    except (OSError, UnicodeDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_INPUT) from None


def _sniff(text: str) -> str:
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            return "aggregated" if line.replace(" ", "").lower() == "u,n" else "counts"
    return "counts"


def load_dataset(args):
    text, source = _read(args.input)
    fmt = args.input_format if args.input_format != "auto" else _sniff(text)
    dist, _ = parse_dataset(text, fmt, source)
    return dist, source


def _thresholds(raw: str) -> list:
    try:
        values = [float(x) for x in raw.split(",") if x.strip()]
    except ValueError:
        raise CliError(f"invalid threshold list {raw!r}", EXIT_INPUT) from None
    if not values:
        raise CliError("no thresholds given", EXIT_INPUT)
    for t in values:
        if not 0 < t < 100:
            raise CliError(f"threshold {t:g} outside (0, 100)", EXIT_INPUT)
    return values


def cmd_table(args, out):
    dist, source = load_dataset(args)
    out.write(write_table(indicator_table(dist, source), args.format))


def cmd_plot(args, out):
    dist, source = load_dataset(args)
    out.write(write_paper_series(indicator_table(dist, source)))


def cmd_classes(args, out):
    thresholds = _thresholds(args.at)
    dist, _ = load_dataset(args)
    names = INDICATORS if args.indicator == "all" else (args.indicator,)
    records = []
    for name in names:
        for t in thresholds:
            hit = class_report(dist, name, t)
            records.append(
                {
                    "indicator": name,
                    "threshold": t,
                    "min_citations": None if hit is None else hit.min_citations,
                    "paper_count": None if hit is None else hit.paper_count,
                }
            )
    if args.format == "json":
        out.write(json.dumps(records, indent=2) + "\n")
        return
    sep = "," if args.format == "csv" else " "
    lines = [sep.join(("indicator", "threshold", "min_citations", "paper_count"))]
    for r in records:
        cells = [r["indicator"], f"{r['threshold']:g}"]
        cells += ["-", "0"] if r["min_citations"] is None else [str(r["min_citations"]), str(r["paper_count"])]
        lines.append(sep.join(cells))
    out.write("\n".join(lines) + "\n")


def cmd_scenario(args, out):
    if not args.scenario:
        raise CliError("scenario requires --scenario PATH", EXIT_INPUT)
    dist, _ = load_dataset(args)
    text, _ = _read(args.scenario)
    s = parse_scenario(text)
    try:
        results = run_scenario(s, base=dist)
    except ScenarioStepError as exc:
        code = EXIT_DEGENERATE if exc.step == 0 else EXIT_SCENARIO
        raise CliError(f"scenario {s.name}: {exc}", code) from None
    reports = analyze_scenario(results)
    out.write(write_scenario_report(s.name, results, reports, args.format))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bibliorank",
        description="Percentile-based citation impact indicators over a reference set.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", required=True, help="dataset path, '-' for stdin")
    common.add_argument(
        "--input-format",
        choices=("auto", *INPUT_FORMATS),
        default="auto",
        help="'aggregated' for u,n lines; 'auto' picks it when the first record is the u,n header",
    )
    common.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("table", parents=[common], help="all indicators per citation level")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("classes", parents=[common], help="citations needed to reach percentile thresholds")
    p.add_argument("--indicator", choices=("all", *INDICATORS), default="all")
    p.add_argument("--at", required=True, help="comma-separated thresholds in (0, 100)")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("scenario", parents=[common], help="run mutations and report paradoxes")
    p.add_argument("--scenario", help="scenario file")
    p.set_defaults(func=cmd_scenario)

    p = sub.add_parser("plot", parents=[common], help="per-paper csv series for plotting")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        args.func(args, out)
    except CliError as exc:
        err.write(f"bibliorank: error: {exc}\n")
        return exc.code
    except DegenerateDistribution as exc:
        err.write(f"bibliorank: error: {exc}\n")
        return EXIT_DEGENERATE
    except InputError as exc:
        err.write(f"bibliorank: error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
