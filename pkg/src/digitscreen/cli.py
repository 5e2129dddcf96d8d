"""Command-line front door.

Subcommands: analyze datasets against the screening intervals, print the
law table, dump sequence plot data, run the self-verification suite, or
serve the same operations over HTTP.

Exit codes: 0 clean, 2 digits flagged, 1 operational error.  Reports go to
stdout, diagnostics to stderr, so shell pipelines can branch on the verdict.
"""

from __future__ import annotations

import argparse
import contextlib
import logging
import os
import sys
from typing import Sequence

from . import __version__
from .errors import DigitScreenError, DomainError
from .ingest import ColumnSpec, FORMATS, IngestStats
from .pipeline import tally_source
from .report import (
    parse_digit_selector,
    render_report,
    render_table,
    render_verify_text,
    sequence_to_dict,
    verify_to_dict,
    write_sequence_csv,
    dump_json,
)
from .screening import DEFAULT_MIN_N, DigitCounts, parse_slack, screen
from .subsequence import DEFAULT_SEQUENCE_CAP
from .verification import DEFAULT_BASES, DEFAULT_COUNT_LIMIT, run_all

EXIT_CLEAN = 0
EXIT_ERROR = 1
EXIT_FLAGGED = 2

NMAX_CAP_ENV = "DIGITSCREEN_NMAX_CAP"


class _UsageError(DigitScreenError):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage, but 2 means "digits flagged"
    # here, so usage problems are routed through the normal error path.
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="digitscreen",
        description="Screen numeric data against leading-digit laws.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="screen the leading digits of data files")
    analyze.add_argument("paths", nargs="+", help="input files; '-' reads stdin")
    analyze.add_argument("--base", type=int, default=10, help="radix for digit analysis (default 10)")
    analyze.add_argument("--column", default=None, help="CSV column name/index or JSONL field path")
    analyze.add_argument("--format", choices=FORMATS, default=None,
                         help="input format (default: inferred from the file extension)")
    analyze.add_argument("--out", choices=("text", "json", "csv"), default="text")
    analyze.add_argument("--slack", default="0", help="widen intervals by this rational, e.g. 1/100")
    analyze.add_argument("--min-n", type=int, default=DEFAULT_MIN_N,
                         help="values needed before verdicts count (default %(default)s)")
    analyze.add_argument("--exclude", default="", help="comma-separated selectors that must not be analyzed")

    table = sub.add_parser("table", help="print the first-digit law and screening intervals")
    table.add_argument("--base", type=int, default=10)
    table.add_argument("--out", choices=("text", "json", "csv"), default="text")

    seq = sub.add_parser("sequence", help="dump uniform leading-digit probabilities as plot data")
    seq.add_argument("--base", type=int, default=10)
    seq.add_argument("--digit", default="all", help="digit to trace, or 'all' (default)")
    seq.add_argument("--n-max", type=int, default=1000, help="largest population cutoff (default %(default)s)")
    seq.add_argument("--out", choices=("text", "json", "csv"), default="csv")

    verify = sub.add_parser("verify", help="run the self-verification suite")
    verify.add_argument("--base", type=int, default=None, help="restrict to one base (default: 2,3,8,10,16)")
    verify.add_argument("--n-max", type=int, default=DEFAULT_COUNT_LIMIT,
                        help="enumeration bound for the counting oracle (default %(default)s)")
    verify.add_argument("--out", choices=("text", "json"), default="text")

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)

    return parser


def _sequence_cap() -> int:
    raw = os.environ.get(NMAX_CAP_ENV)
    if raw is None:
        return DEFAULT_SEQUENCE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise DomainError(f"{NMAX_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise DomainError(f"{NMAX_CAP_ENV} must be positive, got {cap}")
    return cap


def _infer_format(path: str) -> str:
    lowered = path.lower()
    if lowered.endswith(".csv"):
        return "csv"
    if lowered.endswith((".jsonl", ".ndjson")):
        return "jsonl"
    return "plain"


def _parse_selector(column: str | None) -> str | int | None:
    if column is None:
        return None
    try:
        return int(column)
    except ValueError:
        return column


def _open_source(path: str):
    if path == "-":
        return contextlib.nullcontext(sys.stdin)
    # newline="" lets the csv module handle quoted newlines itself
    return open(path, encoding="utf-8-sig", newline="")


def cmd_analyze(args) -> int:
    slack = parse_slack(args.slack)
    exclusions = tuple(s.strip() for s in args.exclude.split(",") if s.strip())
    selector = _parse_selector(args.column)
    counts = DigitCounts.empty(args.base)
    stats = IngestStats()
    for path in args.paths:
        fmt = args.format or _infer_format(path)
        spec = ColumnSpec(format=fmt, selector=selector, exclusions=exclusions)
        with _open_source(path) as source:
            file_counts, file_stats = tally_source(source, spec, base=args.base)
        counts = counts.merge(file_counts)
        stats = stats.merge(file_stats)
    report = screen(counts, slack=slack, min_n=args.min_n, source=",".join(args.paths))
    sys.stdout.write(render_report(report, args.out, ingest=stats))
    if report.indeterminate:
        print(
            f"digitscreen: insufficient data: {report.total} values < min_n {report.min_n}",
            file=sys.stderr,
        )
        return EXIT_ERROR
    return EXIT_FLAGGED if report.flagged_digits else EXIT_CLEAN


def cmd_table(args) -> int:
    sys.stdout.write(render_table(args.base, args.out))
    return EXIT_CLEAN


def cmd_sequence(args) -> int:
    digit = parse_digit_selector(args.digit)
    cap = _sequence_cap()
    if args.out == "json":
        sys.stdout.write(dump_json(sequence_to_dict(args.base, digit, args.n_max, cap)))
    else:
        # text is an alias for csv: sequence output is inherently tabular
        write_sequence_csv(sys.stdout, args.base, digit, args.n_max, cap)
    return EXIT_CLEAN


def cmd_verify(args) -> int:
    bases = (args.base,) if args.base is not None else DEFAULT_BASES
    results = run_all(bases=bases, limit=args.n_max)
    if args.out == "json":
        sys.stdout.write(dump_json(verify_to_dict(results)))
    else:
        sys.stdout.write(render_verify_text(results))
    return EXIT_CLEAN if all(r.passed for r in results) else EXIT_ERROR


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_CLEAN


_COMMANDS = {
    "analyze": cmd_analyze,
    "table": cmd_table,
    "sequence": cmd_sequence,
    "verify": cmd_verify,
    "serve": cmd_serve,
}


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, format="digitscreen: %(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"digitscreen: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except DigitScreenError as exc:
        print(f"digitscreen: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"digitscreen: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
