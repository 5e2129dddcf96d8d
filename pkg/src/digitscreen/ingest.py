"""Stream numeric values out of CSV, JSONL, and plain-text sources.

A source is read once, front to back, in constant memory.  Every selected
cell becomes exactly one token and lands in exactly one bucket: parsed
magnitude, zero skip, or non-numeric skip.  Malformed rows are logged and
skipped without killing the stream.  Columns that should never be analyzed
(identification numbers and the like follow no digit law) are refused via
an explicit exclusion list.
"""

from __future__ import annotations

import csv
import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .digits import Skip, parse_decimal
from .errors import DomainError, FormatError, IngestError

logger = logging.getLogger(__name__)

FORMATS = ("csv", "jsonl", "plain")

DEFAULT_THOUSANDS_SEP = ","
DEFAULT_CURRENCY_SYMBOLS = "$€£"

Token = Union[Fraction, Skip]


@dataclass(frozen=True)
class ColumnSpec:
    """Which values to pull out of a source, and which columns are off-limits.

    ``selector`` is a header name (CSV), a dotted field path (JSONL), or a
    0-based column index (headerless CSV); plain text has no columns.
    """

    format: str = "plain"
    selector: str | int | None = None
    exclusions: tuple[str, ...] = ()
    thousands_sep: str = DEFAULT_THOUSANDS_SEP
    currency_symbols: str = DEFAULT_CURRENCY_SYMBOLS

    def __post_init__(self) -> None:
        if self.format not in FORMATS:
            raise DomainError(f"unknown source format {self.format!r}; expected one of {FORMATS}")
        if self.format in ("csv", "jsonl") and self.selector is None:
            raise DomainError(f"{self.format} sources need a column selector")
        if isinstance(self.selector, int) and self.selector < 0:
            raise DomainError(f"column index must be >= 0, got {self.selector}")
        if self.selector is not None and str(self.selector) in {str(e) for e in self.exclusions}:
            raise DomainError(f"column {self.selector!r} is excluded from analysis")


@dataclass
class IngestStats:
    """Token accounting for one streamed source."""

    parsed: int = 0
    skipped_zero: int = 0
    skipped_nonnumeric: int = 0
    sign_stripped: int = 0
    bad_rows: int = 0

    @property
    def tokens(self) -> int:
        """Tokens examined; every one lands in exactly one of the three buckets."""
        return self.parsed + self.skipped_zero + self.skipped_nonnumeric

    def merge(self, other: "IngestStats") -> "IngestStats":
        return IngestStats(
            self.parsed + other.parsed,
            self.skipped_zero + other.skipped_zero,
            self.skipped_nonnumeric + other.skipped_nonnumeric,
            self.sign_stripped + other.sign_stripped,
            self.bad_rows + other.bad_rows,
        )


def normalize_token(token: str, spec: ColumnSpec) -> str:
    """Strip layout noise: currency marks, thousands separators, whitespace."""
    for ch in spec.currency_symbols:
        token = token.replace(ch, "")
    if spec.thousands_sep:
        token = token.replace(spec.thousands_sep, "")
    return token.strip()


def _classify(token: str, spec: ColumnSpec, stats: IngestStats) -> Token:
    value = parse_decimal(normalize_token(token, spec))
    if value is None:
        stats.skipped_nonnumeric += 1
        return Skip.NON_NUMERIC
    if value == 0:
        stats.skipped_zero += 1
        return Skip.ZERO
    if value < 0:
        stats.sign_stripped += 1
        value = -value
    stats.parsed += 1
    return value


def stream_values(source: Iterable[str], spec: ColumnSpec) -> tuple[Iterator[Token], IngestStats]:
    """Create the value stream and its stats for one open text source.

    Returns ``(iterator, stats)``; the stats object fills in as the iterator
    is consumed.  Values are yielded in file order regardless of how the
    underlying source is buffered.
    """
    stats = IngestStats()
    if spec.format == "csv":
        reader = csv.reader(source)
        index = _resolve_csv_column(reader, spec)
        values = _csv_values(reader, index, spec, stats)
    elif spec.format == "jsonl":
        values = _jsonl_values(source, spec, stats)
    else:
        values = _plain_values(source, spec, stats)
    return values, stats


def _resolve_csv_column(reader, spec: ColumnSpec) -> int:
    if isinstance(spec.selector, int):
        return spec.selector  # headerless positional mode
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise IngestError("CSV source is empty: no header row") from None
    if spec.selector not in header:
        raise IngestError(f"column {spec.selector!r} not found; header has {header}")
    return header.index(spec.selector)


def _csv_values(reader, index: int, spec: ColumnSpec, stats: IngestStats) -> Iterator[Token]:
    while True:
        try:
            row = next(reader)
        except StopIteration:
            return
        except csv.Error as exc:
            stats.bad_rows += 1
            logger.warning("%s", FormatError(f"line {reader.line_num}: {exc}"))
            continue
        if not row:
            continue
        if index >= len(row):
            stats.bad_rows += 1
            logger.warning(
                "%s", FormatError(f"line {reader.line_num}: row has {len(row)} fields, need index {index}")
            )
            continue
        yield _classify(row[index], spec, stats)


def _field_path(obj, path: str):
    for part in path.split("."):
        if not isinstance(obj, dict) or part not in obj:
            raise KeyError(path)
        obj = obj[part]
    return obj


def _jsonl_values(source: Iterable[str], spec: ColumnSpec, stats: IngestStats) -> Iterator[Token]:
    path = str(spec.selector)
    for lineno, line in enumerate(source, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            # Numbers are kept as their original text so exponents and long
            # mantissas survive exactly instead of detouring through float.
            record = json.loads(line, parse_float=str, parse_int=str)
            cell = _field_path(record, path)
        except json.JSONDecodeError as exc:
            stats.bad_rows += 1
            logger.warning("%s", FormatError(f"line {lineno}: {exc}"))
            continue
        except KeyError:
            stats.bad_rows += 1
            logger.warning("%s", FormatError(f"line {lineno}: no field {path!r}"))
            continue
        yield _classify(cell if isinstance(cell, str) else str(cell), spec, stats)


def _plain_values(source: Iterable[str], spec: ColumnSpec, stats: IngestStats) -> Iterator[Token]:
    for line in source:
        for token in line.split():
            yield _classify(token, spec, stats)
