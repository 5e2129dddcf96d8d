"""HTTP facade over the screening library.

Every endpoint is a thin wrapper around the same core calls the CLI uses,
so reports are byte-for-byte compatible between the two front ends.
"""

from __future__ import annotations

import io
import os

from fastapi import FastAPI, Query
from fastapi.responses import JSONResponse

from .. import __version__
from ..digits import MAX_BASE, MIN_BASE
from ..errors import DigitScreenError, DomainError, IngestError, InsufficientDataError, ResourceError
from ..ingest import ColumnSpec
from ..pipeline import analyze_stream
from ..report import parse_digit_selector, report_to_dict, sequence_to_dict, table_to_dict, verify_to_dict
from ..screening import parse_slack
from ..subsequence import DEFAULT_SEQUENCE_CAP
from ..verification import DEFAULT_BASES, run_all
from .schemas import (
    AnalyzeRequest,
    AnalyzeResponse,
    ErrorResponse,
    HealthResponse,
    SequenceResponse,
    TableResponse,
    VerifyRequest,
    VerifyResponse,
)

NMAX_CAP_ENV = "DIGITSCREEN_NMAX_CAP"

app = FastAPI(
    title="digitscreen",
    version=__version__,
    description=(
        "Leading-digit screening: observed first-digit frequencies versus the "
        "Benford-Newcomb law and exact uniform-population interval criteria."
    ),
)

_STATUS_CODES = {
    DomainError: 422,
    ResourceError: 422,
    InsufficientDataError: 422,
    IngestError: 400,
}


@app.exception_handler(DigitScreenError)
async def _toolkit_error(request, exc: DigitScreenError):
    status = _STATUS_CODES.get(type(exc), 400)
    return JSONResponse(status_code=status, content={"error": type(exc).__name__, "detail": str(exc)})


def _sequence_cap() -> int:
    raw = os.environ.get(NMAX_CAP_ENV)
    return int(raw) if raw and raw.isdigit() else DEFAULT_SEQUENCE_CAP


@app.get("/health", response_model=HealthResponse)
def health():
    return {"status": "ok", "service": "digitscreen", "version": __version__}


@app.get("/table", response_model=TableResponse, responses={422: {"model": ErrorResponse}})
def table(base: int = Query(default=10, ge=MIN_BASE, le=MAX_BASE)):
    return table_to_dict(base)


@app.get("/sequence", response_model=SequenceResponse, responses={422: {"model": ErrorResponse}})
def sequence(
    base: int = Query(default=10, ge=MIN_BASE, le=MAX_BASE),
    digit: str = Query(default="all"),
    n_max: int = Query(default=1000, ge=1),
):
    return sequence_to_dict(base, parse_digit_selector(digit), n_max, cap=_sequence_cap())


@app.post(
    "/analyze",
    response_model=AnalyzeResponse,
    responses={400: {"model": ErrorResponse}, 422: {"model": ErrorResponse}},
)
def analyze(request: AnalyzeRequest):
    if request.values is not None:
        content = "\n".join(request.values)
        fmt = "plain"
    else:
        content = request.content or ""
        fmt = request.format
    spec = ColumnSpec(format=fmt, selector=request.column, exclusions=tuple(request.exclude))
    report, stats = analyze_stream(
        io.StringIO(content),
        spec,
        base=request.base,
        slack=parse_slack(request.slack),
        min_n=request.min_n,
        source_label=request.source,
    )
    return report_to_dict(report, ingest=stats)


@app.post("/verify", response_model=VerifyResponse)
def verify(request: VerifyRequest):
    bases = tuple(request.bases) if request.bases else DEFAULT_BASES
    return verify_to_dict(run_all(bases=bases, limit=request.n_max))
