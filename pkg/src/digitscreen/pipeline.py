"""End-to-end wiring: text source -> magnitudes -> digits -> counts -> report."""

from __future__ import annotations

from typing import Iterable

from .digits import leading_digits
from .ingest import ColumnSpec, IngestStats, stream_values
from .screening import DEFAULT_MIN_N, DigitCounts, ScreeningReport, SlackLike, screen, tally


def tally_source(source: Iterable[str], spec: ColumnSpec, base: int = 10) -> tuple[DigitCounts, IngestStats]:
    """Tally the leading digits of one open text source."""
    values, stats = stream_values(source, spec)
    return tally(leading_digits(values, base), base), stats


def analyze_stream(
    source: Iterable[str],
    spec: ColumnSpec,
    base: int = 10,
    slack: SlackLike = 0,
    min_n: int = DEFAULT_MIN_N,
    source_label: str = "",
) -> tuple[ScreeningReport, IngestStats]:
    """Screen one open text source; returns the report and ingest stats."""
    counts, stats = tally_source(source, spec, base)
    return screen(counts, slack=slack, min_n=min_n, source=source_label), stats
