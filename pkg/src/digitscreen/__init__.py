"""Leading-digit forensics toolkit.

Screens numeric datasets for possible misrepresentation by comparing
observed leading-digit frequencies against the Benford-Newcomb law and
against exact interval criteria derived from uniform draws on initial
segments of the naturals.  All probability bookkeeping is exact rational
arithmetic; floats appear only in presentation and in the transcendental
Benford expectation itself.
"""

__version__ = "0.1.0"

from .benford import BenfordDistribution, benford_prob, benford_table
from .digits import (
    MAX_BASE,
    MIN_BASE,
    Skip,
    leading_digit_nat,
    leading_digit_real,
    leading_digits,
    parse_decimal,
    parse_magnitude,
)
from .errors import (
    DigitScreenError,
    DomainError,
    FormatError,
    IngestError,
    InsufficientDataError,
    ResourceError,
)
from .ingest import ColumnSpec, IngestStats, stream_values
from .pipeline import analyze_stream, tally_source
from .screening import (
    DEFAULT_MIN_N,
    DigitCounts,
    DigitVerdict,
    ScreeningReport,
    chi_square_stat,
    mad_stat,
    screen,
    tally,
)
from .subsequence import (
    DEFAULT_SEQUENCE_CAP,
    ScreenInterval,
    SequencePoint,
    count_leading,
    local_max,
    local_min,
    probability,
    screen_interval,
    sequence,
)
from .verification import PropertyResult, run_all

__all__ = [
    "BenfordDistribution",
    "ColumnSpec",
    "DEFAULT_MIN_N",
    "DEFAULT_SEQUENCE_CAP",
    "DigitCounts",
    "DigitScreenError",
    "DigitVerdict",
    "DomainError",
    "FormatError",
    "IngestError",
    "IngestStats",
    "InsufficientDataError",
    "MAX_BASE",
    "MIN_BASE",
    "PropertyResult",
    "ResourceError",
    "ScreenInterval",
    "ScreeningReport",
    "SequencePoint",
    "Skip",
    "analyze_stream",
    "benford_prob",
    "benford_table",
    "chi_square_stat",
    "count_leading",
    "leading_digit_nat",
    "leading_digit_real",
    "leading_digits",
    "local_max",
    "local_min",
    "mad_stat",
    "parse_decimal",
    "parse_magnitude",
    "probability",
    "run_all",
    "screen",
    "screen_interval",
    "sequence",
    "stream_values",
    "tally",
    "tally_source",
]
