"""Serialization of screening reports, law tables, and sequence plot data.

Exact rationals travel as "num/den" strings so arbitrary precision survives
the text round-trip; decimals are presentation only.  All renderings are
deterministic: digits ascend, rows ascend by n, and nothing time- or
environment-dependent is emitted, so identical inputs give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterator, Union

from .benford import benford_prob
from .errors import DomainError
from .ingest import IngestStats
from .screening import ScreeningReport
from .subsequence import (
    DEFAULT_SEQUENCE_CAP,
    extremum_positions,
    iter_sequence,
    screen_interval,
)
from .verification import PropertyResult

SCHEMA_VERSION = 1

DigitSelector = Union[int, str]  # a digit or "all"


def fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def decimal6(value) -> float:
    """Presentation rounding; repr of the result is stable across runs."""
    return round(float(value), 6)


def fixed6(value) -> str:
    return f"{float(value):.6f}"


def parse_digit_selector(text: DigitSelector) -> DigitSelector:
    """Accept a digit number or the literal "all"."""
    if isinstance(text, int):
        return text
    if text.strip().lower() == "all":
        return "all"
    try:
        return int(text)
    except ValueError:
        raise DomainError(f"digit must be an integer or 'all', got {text!r}") from None


# ---------------------------------------------------------------------------
# screening report


def report_to_dict(report: ScreeningReport, ingest: IngestStats | None = None) -> dict:
    verdicts = []
    for v in report.verdicts:
        verdicts.append(
            {
                "digit": v.digit,
                "observed": fraction_str(v.observed),
                "observed_decimal": float(v.observed),
                "interval_lo": fraction_str(v.interval.lo),
                "interval_lo_decimal": float(v.interval.lo),
                "interval_hi": fraction_str(v.interval.hi),
                "interval_hi_decimal": float(v.interval.hi),
                "in_interval": v.in_interval,
                "benford_expected": v.benford_expected,
            }
        )
    out = {
        "schema_version": SCHEMA_VERSION,
        "source": report.source,
        "base": report.base,
        "total": report.total,
        "skipped": report.skipped,
        "slack": fraction_str(report.slack),
        "min_n": report.min_n,
        "indeterminate": report.indeterminate,
        "flagged_digits": report.flagged_digits,
        "chi_square": report.chi_square,
        "mad": report.mad,
        "verdicts": verdicts,
    }
    if ingest is not None:
        out["ingest"] = {
            "parsed": ingest.parsed,
            "skipped_zero": ingest.skipped_zero,
            "skipped_nonnumeric": ingest.skipped_nonnumeric,
            "sign_stripped": ingest.sign_stripped,
            "bad_rows": ingest.bad_rows,
        }
    return out


def dump_json(payload: dict) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def render_report_text(report: ScreeningReport, ingest: IngestStats | None = None) -> str:
    lines = [
        f"source: {report.source or '-'}",
        f"base: {report.base}  values: {report.total}  skipped: {report.skipped}"
        f"  slack: {fraction_str(report.slack)}  min_n: {report.min_n}",
    ]
    if ingest is not None:
        lines.append(
            f"ingest: parsed {ingest.parsed}, zero {ingest.skipped_zero},"
            f" non-numeric {ingest.skipped_nonnumeric}, sign stripped {ingest.sign_stripped},"
            f" bad rows {ingest.bad_rows}"
        )
    lines.append("")
    lines.append(f"{'digit':>5}  {'observed':>9}  {'benford':>9}  {'interval':<22}  verdict")
    for v in report.verdicts:
        interval = f"[{fixed6(v.interval.lo)}, {fixed6(v.interval.hi)}]"
        if v.in_interval is None:
            verdict = "indeterminate"
        else:
            verdict = "ok" if v.in_interval else "FLAG"
        lines.append(
            f"{v.digit:>5}  {fixed6(v.observed):>9}  {fixed6(v.benford_expected):>9}"
            f"  {interval:<22}  {verdict}"
        )
    lines.append("")
    if report.chi_square is not None:
        lines.append(f"chi_square: {report.chi_square:.6f}")
    if report.mad is not None:
        lines.append(f"mad: {report.mad:.6f}")
    if report.indeterminate:
        lines.append(f"status: indeterminate ({report.total} values < min_n {report.min_n})")
    elif report.flagged_digits:
        lines.append(f"status: flagged digits {', '.join(map(str, report.flagged_digits))}")
    else:
        lines.append("status: clean")
    return "\n".join(lines) + "\n"


def render_report_csv(report: ScreeningReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        [
            "digit",
            "observed",
            "observed_decimal",
            "interval_lo",
            "interval_lo_decimal",
            "interval_hi",
            "interval_hi_decimal",
            "in_interval",
            "benford_expected",
        ]
    )
    for v in report.verdicts:
        writer.writerow(
            [
                v.digit,
                fraction_str(v.observed),
                decimal6(v.observed),
                fraction_str(v.interval.lo),
                decimal6(v.interval.lo),
                fraction_str(v.interval.hi),
                decimal6(v.interval.hi),
                "" if v.in_interval is None else v.in_interval,
                decimal6(v.benford_expected),
            ]
        )
    return buf.getvalue()


def render_report(report: ScreeningReport, fmt: str, ingest: IngestStats | None = None) -> str:
    if fmt == "json":
        return dump_json(report_to_dict(report, ingest))
    if fmt == "csv":
        return render_report_csv(report)
    if fmt == "text":
        return render_report_text(report, ingest)
    raise DomainError(f"unknown output format {fmt!r}")


# ---------------------------------------------------------------------------
# law table


def table_to_dict(base: int) -> dict:
    rows = []
    for k in range(1, base):
        interval = screen_interval(k, base)
        rows.append(
            {
                "digit": k,
                "benford": benford_prob(k, base),
                "interval_lo": fraction_str(interval.lo),
                "interval_lo_decimal": decimal6(interval.lo),
                "interval_hi": fraction_str(interval.hi),
                "interval_hi_decimal": decimal6(interval.hi),
            }
        )
    return {"schema_version": SCHEMA_VERSION, "base": base, "rows": rows}


def render_table(base: int, fmt: str) -> str:
    payload = table_to_dict(base)
    if fmt == "json":
        return dump_json(payload)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["digit", "benford", "interval_lo", "interval_lo_decimal", "interval_hi", "interval_hi_decimal"])
        for row in payload["rows"]:
            writer.writerow(
                [
                    row["digit"],
                    fixed6(row["benford"]),
                    row["interval_lo"],
                    fixed6(row["interval_lo_decimal"]),
                    row["interval_hi"],
                    fixed6(row["interval_hi_decimal"]),
                ]
            )
        return buf.getvalue()
    if fmt == "text":
        lines = [f"base {base}: first-digit law and screening intervals", ""]
        lines.append(f"{'digit':>5}  {'benford':>9}  {'interval_lo':<22}  {'interval_hi':<22}")
        for row in payload["rows"]:
            lo = f"{row['interval_lo']} ({fixed6(row['interval_lo_decimal'])})"
            hi = f"{row['interval_hi']} ({fixed6(row['interval_hi_decimal'])})"
            lines.append(f"{row['digit']:>5}  {fixed6(row['benford']):>9}  {lo:<22}  {hi:<22}")
        return "\n".join(lines) + "\n"
    raise DomainError(f"unknown output format {fmt!r}")


# ---------------------------------------------------------------------------
# sequence plot data

SEQUENCE_FIELDS = (
    "N",
    "digit",
    "probability_decimal",
    "probability_exact",
    "marker",
    "interval_lo",
    "interval_hi",
)


def iter_sequence_rows(
    base: int,
    digit: DigitSelector,
    n_max: int,
    cap: int = DEFAULT_SEQUENCE_CAP,
) -> Iterator[dict]:
    """Tidy rows for plotting, n ascending then digit ascending.

    Each row carries the screening-interval endpoints for its digit plus a
    marker on the exact local extrema, so the envelope and the oscillation
    can be drawn from one table.
    """
    digits = list(range(1, base)) if digit == "all" else [digit]
    streams = [iter_sequence(k, base, n_max, cap) for k in digits]
    markers = {k: extremum_positions(k, base, n_max) for k in digits}
    intervals = {k: screen_interval(k, base) for k in digits}
    for points in zip(*streams):
        for point in points:
            mins, maxs = markers[point.digit]
            if point.n in mins:
                marker = "local-min"
            elif point.n in maxs:
                marker = "local-max"
            else:
                marker = ""
            interval = intervals[point.digit]
            yield {
                "N": point.n,
                "digit": point.digit,
                "probability_decimal": decimal6(point.probability),
                "probability_exact": fraction_str(point.probability),
                "marker": marker,
                "interval_lo": decimal6(interval.lo),
                "interval_hi": decimal6(interval.hi),
            }


def write_sequence_csv(stream, base: int, digit: DigitSelector, n_max: int, cap: int = DEFAULT_SEQUENCE_CAP) -> None:
    writer = csv.DictWriter(stream, SEQUENCE_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in iter_sequence_rows(base, digit, n_max, cap):
        writer.writerow(row)


def sequence_to_dict(base: int, digit: DigitSelector, n_max: int, cap: int = DEFAULT_SEQUENCE_CAP) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "base": base,
        "digit": digit,
        "n_max": n_max,
        "rows": list(iter_sequence_rows(base, digit, n_max, cap)),
    }


# ---------------------------------------------------------------------------
# verification results


def verify_to_dict(results: list[PropertyResult]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "passed": all(r.passed for r in results),
        "results": [
            {"name": r.name, "passed": r.passed, "checks": r.checks, "detail": r.detail}
            for r in results
        ],
    }


def render_verify_text(results: list[PropertyResult]) -> str:
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        suffix = f" -- {r.detail}" if r.detail and not r.passed else ""
        lines.append(f"{status} {r.name} ({r.checks} checks){suffix}")
    return "\n".join(lines) + "\n"
