"""Turn observed leading-digit counts into per-digit verdicts.

The verdict criterion is the exact envelope from :mod:`.subsequence`: a
frequency outside [1/(k(b-1)), b/((k+1)(b-1))] (closed, compared as exact
rationals) is flagged for further inquiry.  Chi-square and mean absolute
deviation against the Benford expectation ride along as raw statistics;
no significance thresholds are asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .benford import benford_prob, benford_table
from .digits import Skip, validate_base, validate_digit
from .errors import DomainError, InsufficientDataError
from .subsequence import ScreenInterval, screen_interval

DEFAULT_MIN_N = 50  # below this, verdicts are reported but marked indeterminate

SlackLike = Union[Fraction, int, str]


def parse_slack(value: SlackLike) -> Fraction:
    """Interval widening as an exact non-negative rational ("1/100", "0.01", ...)."""
    try:
        slack = Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError):
        raise DomainError(f"slack must be a rational number, got {value!r}") from None
    if slack < 0:
        raise DomainError(f"slack must be non-negative, got {slack}")
    return slack


@dataclass
class DigitCounts:
    """Leading-digit tally for one dataset or column; merge to combine chunks."""

    base: int
    counts: dict[int, int]
    total: int = 0
    skipped: int = 0

    @classmethod
    def empty(cls, base: int) -> "DigitCounts":
        validate_base(base)
        return cls(base, {k: 0 for k in range(1, base)})

    def add(self, digit: int) -> None:
        validate_digit(digit, self.base)
        self.counts[digit] += 1
        self.total += 1

    def add_skip(self) -> None:
        self.skipped += 1

    def merge(self, other: "DigitCounts") -> "DigitCounts":
        """Componentwise sum; associative and commutative with empty() as identity."""
        if other.base != self.base:
            raise DomainError(f"cannot merge base-{other.base} counts into base-{self.base}")
        merged = {k: self.counts.get(k, 0) + other.counts.get(k, 0) for k in range(1, self.base)}
        return DigitCounts(self.base, merged, self.total + other.total, self.skipped + other.skipped)

    def frequency(self, digit: int) -> Fraction:
        validate_digit(digit, self.base)
        if self.total == 0:
            raise InsufficientDataError("no counted values, frequencies undefined")
        return Fraction(self.counts.get(digit, 0), self.total)


def tally(digits: Iterable[Union[int, Skip]], base: int = 10) -> DigitCounts:
    """Count each digit once in a single pass; Skip items land in ``skipped``."""
    counts = DigitCounts.empty(base)
    for item in digits:
        if isinstance(item, Skip):
            counts.add_skip()
        else:
            counts.add(item)
    return counts


@dataclass(frozen=True)
class DigitVerdict:
    """Observed frequency of one digit against its screening interval.

    ``in_interval`` is None when the sample was too small to judge.
    """

    digit: int
    observed: Fraction
    interval: ScreenInterval
    in_interval: bool | None
    benford_expected: float


@dataclass
class ScreeningReport:
    """Per-digit verdicts plus auxiliary statistics for one analyzed source."""

    source: str
    base: int
    verdicts: list[DigitVerdict]
    flagged_digits: list[int]
    chi_square: float | None
    mad: float | None
    total: int
    skipped: int
    slack: Fraction
    min_n: int
    indeterminate: bool


def screen(
    counts: DigitCounts,
    slack: SlackLike = 0,
    min_n: int = DEFAULT_MIN_N,
    source: str = "",
) -> ScreeningReport:
    """Judge every digit of ``counts`` against its screening interval.

    Frequencies are compared as exact rationals against the closed interval,
    widened by ``slack`` on each side (default 0).  With fewer than ``min_n``
    counted values the report is still produced, but verdicts are marked
    indeterminate (in_interval None) and nothing is flagged.
    """
    slack = parse_slack(slack)
    if not isinstance(min_n, int) or isinstance(min_n, bool) or min_n < 1:
        raise DomainError(f"min_n must be a positive integer, got {min_n!r}")
    total = counts.total
    indeterminate = total < min_n
    verdicts: list[DigitVerdict] = []
    flagged: list[int] = []
    for k in range(1, counts.base):
        interval = screen_interval(k, counts.base)
        observed = Fraction(counts.counts.get(k, 0), total) if total else Fraction(0)
        if indeterminate:
            inside: bool | None = None
        else:
            inside = interval.contains(observed, slack)
            if not inside:
                flagged.append(k)
        verdicts.append(DigitVerdict(k, observed, interval, inside, benford_prob(k, counts.base)))
    return ScreeningReport(
        source=source,
        base=counts.base,
        verdicts=verdicts,
        flagged_digits=flagged,
        chi_square=chi_square_stat(counts) if total else None,
        mad=mad_stat(counts) if total else None,
        total=total,
        skipped=counts.skipped,
        slack=slack,
        min_n=min_n,
        indeterminate=indeterminate,
    )


def _frequencies(counts: DigitCounts) -> dict[int, float]:
    if counts.total == 0:
        raise InsufficientDataError("no counted values, statistics undefined")
    return {k: counts.counts.get(k, 0) / counts.total for k in range(1, counts.base)}


def _chi_square(freqs: dict[int, float], probs, total: int) -> float:
    return total * sum((freqs[k] - p) ** 2 / p for k, p in probs.items())


def _mad(freqs: dict[int, float], probs) -> float:
    return sum(abs(freqs[k] - p) for k, p in probs.items()) / len(freqs)


def chi_square_stat(counts: DigitCounts) -> float:
    """Pearson chi-square of the observed digits against the Benford expectation.

    Zero iff frequencies match exactly; in base 2 there is a single category
    and the statistic is identically zero.
    """
    return _chi_square(_frequencies(counts), benford_table(counts.base), counts.total)


def mad_stat(counts: DigitCounts) -> float:
    """Mean absolute deviation of observed frequencies from the Benford expectation."""
    return _mad(_frequencies(counts), benford_table(counts.base))
