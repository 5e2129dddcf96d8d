"""Pydantic schemas for the screening service endpoints.

Response shapes mirror the CLI's JSON output exactly: the same report
schema (version 1), exact rationals as "num/den" strings, floats only as
presentation values.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator


class HealthResponse(BaseModel):
    """Liveness probe payload."""

    status: str
    service: str
    version: str


class AnalyzeRequest(BaseModel):
    """One dataset to screen, sent inline.

    Provide either ``values`` (pre-extracted tokens) or ``content`` (raw
    text in the declared format).
    """

    content: Optional[str] = None
    values: Optional[list[str]] = None
    format: Literal["csv", "jsonl", "plain"] = "plain"
    column: Union[str, int, None] = None
    base: int = Field(default=10, ge=2, le=36)
    slack: str = "0"
    min_n: int = Field(default=50, ge=1)
    exclude: list[str] = Field(default_factory=list)
    source: str = "request"

    @model_validator(mode="after")
    def _one_payload(self):
        if (self.content is None) == (self.values is None):
            raise ValueError("provide exactly one of 'content' or 'values'")
        return self


class VerdictOut(BaseModel):
    """Screening verdict for one digit."""

    digit: int
    observed: str
    observed_decimal: float
    interval_lo: str
    interval_lo_decimal: float
    interval_hi: str
    interval_hi_decimal: float
    in_interval: Optional[bool]
    benford_expected: float


class IngestStatsOut(BaseModel):
    """Token accounting for the analyzed payload."""

    parsed: int
    skipped_zero: int
    skipped_nonnumeric: int
    sign_stripped: int
    bad_rows: int


class AnalyzeResponse(BaseModel):
    """Full screening report for one request."""

    schema_version: int
    source: str
    base: int
    total: int
    skipped: int
    slack: str
    min_n: int
    indeterminate: bool
    flagged_digits: list[int]
    chi_square: Optional[float]
    mad: Optional[float]
    verdicts: list[VerdictOut]
    ingest: Optional[IngestStatsOut] = None


class TableRow(BaseModel):
    """One digit of the law table with its screening interval."""

    digit: int
    benford: float
    interval_lo: str
    interval_lo_decimal: float
    interval_hi: str
    interval_hi_decimal: float


class TableResponse(BaseModel):
    schema_version: int
    base: int
    rows: list[TableRow]


class SequenceRow(BaseModel):
    """One (n, digit) probability point with overlay data."""

    N: int
    digit: int
    probability_decimal: float
    probability_exact: str
    marker: str
    interval_lo: float
    interval_hi: float


class SequenceResponse(BaseModel):
    schema_version: int
    base: int
    digit: Union[int, str]
    n_max: int
    rows: list[SequenceRow]


class VerifyRequest(BaseModel):
    """Self-verification run parameters."""

    bases: Optional[list[int]] = None
    n_max: int = Field(default=10_000, ge=1, le=1_000_000)


class PropertyOut(BaseModel):
    """Outcome of one verified property."""

    name: str
    passed: bool
    checks: int
    detail: str


class VerifyResponse(BaseModel):
    schema_version: int
    passed: bool
    results: list[PropertyOut]


class ErrorResponse(BaseModel):
    """Error payload for domain and ingest failures."""

    error: str
    detail: str
