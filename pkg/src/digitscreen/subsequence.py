"""Leading-digit probabilities of uniform draws from initial segments of N.

Fix a base b and a digit k and let P_N be the probability that a uniform
random natural in [1, N] has leading digit k.  As N grows, P_N oscillates
forever instead of converging: it falls while N sweeps through ranges led
by other digits and rises through the range led by k.  The oscillation is
exactly characterized:

* local minima sit at N = k * b**a - 1 with value
  (1 + b + ... + b**(a-1)) / (k * b**a - 1),
* local maxima sit at N = (k + 1) * b**a - 1 with value
  (1 + b + ... + b**a) / ((k + 1) * b**a - 1),

and the two families converge monotonically to 1 / (k * (b - 1)) and
b / ((k + 1) * (b - 1)).  That closed envelope is the screening interval:
an observed digit frequency outside it cannot come from any uniform
initial-segment population, however the cutoff was chosen.

Everything here is exact integer/rational arithmetic; floats appear only
when callers format output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .digits import validate_base, validate_digit
from .errors import DomainError, ResourceError

DEFAULT_SEQUENCE_CAP = 10**8


@dataclass(frozen=True)
class ScreenInterval:
    """Closed envelope [lo, hi] of the digit-k probabilities for one base."""

    digit: int
    lo: Fraction
    hi: Fraction

    def contains(self, freq: Fraction, slack: Fraction = Fraction(0)) -> bool:
        """Closed-interval membership, optionally widened by ``slack`` on each side."""
        return self.lo - slack <= freq <= self.hi + slack


@dataclass(frozen=True)
class SequencePoint:
    """Probability of drawing leading digit ``digit`` uniformly from [1, n]."""

    n: int
    digit: int
    probability: Fraction


def count_leading(digit: int, n: int, base: int = 10) -> int:
    """How many x in [1, n] have the given leading digit.

    Closed form: the digit-k numbers form the blocks
    [k * b**a, (k + 1) * b**a - 1], one per power a; sum the overlap of
    each block with [1, n].  Exact integer arithmetic throughout.
    """
    validate_digit(digit, base)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    count = 0
    p = 1
    while digit * p <= n:
        hi = (digit + 1) * p - 1
        count += min(hi, n) - digit * p + 1
        p *= base
    return count


def probability(digit: int, n: int, base: int = 10) -> Fraction:
    """Exact probability count_leading(digit, n, base) / n."""
    return Fraction(count_leading(digit, n, base), n)


def _validate_alpha(alpha: int) -> int:
    if not isinstance(alpha, int) or isinstance(alpha, bool) or alpha < 1:
        raise DomainError(f"alpha must be a positive integer, got {alpha!r}")
    return alpha


def _check_regime(n: int, base: int) -> int:
    # The min/max characterization only holds once every digit class is
    # populated, i.e. past the first full digit range.
    if n <= base:
        raise DomainError(f"extremum at n={n} is inside the startup regime (need n > {base})")
    return n


def local_min(digit: int, alpha: int, base: int = 10) -> SequencePoint:
    """The local minimum of the digit's probability at n = digit * base**alpha - 1.

    Its value (1 + base + ... + base**(alpha-1)) / n is the exact probability
    at that n: the count has not yet picked up the digit-k block of width
    base**alpha that starts at the very next n.
    """
    validate_digit(digit, base)
    _validate_alpha(alpha)
    n = _check_regime(digit * base**alpha - 1, base)
    numerator = (base**alpha - 1) // (base - 1)  # 1 + base + ... + base**(alpha-1)
    return SequencePoint(n, digit, Fraction(numerator, n))


def local_max(digit: int, alpha: int, base: int = 10) -> SequencePoint:
    """The local maximum of the digit's probability at n = (digit+1) * base**alpha - 1.

    At that n the digit-k block of width base**alpha has just been swallowed
    whole, so the probability (1 + base + ... + base**alpha) / n is about to
    start falling again.
    """
    validate_digit(digit, base)
    _validate_alpha(alpha)
    n = _check_regime((digit + 1) * base**alpha - 1, base)
    numerator = (base ** (alpha + 1) - 1) // (base - 1)  # 1 + base + ... + base**alpha
    return SequencePoint(n, digit, Fraction(numerator, n))


def screen_interval(digit: int, base: int = 10) -> ScreenInterval:
    """Envelope endpoints 1/(k(b-1)) and b/((k+1)(b-1)) for digit k.

    These are the limits of the local-minimum and local-maximum families;
    for base 2 the interval degenerates to [1, 1].
    """
    validate_digit(digit, base)
    lo = Fraction(1, digit * (base - 1))
    hi = Fraction(base, (digit + 1) * (base - 1))
    return ScreenInterval(digit, lo, hi)


def extremum_positions(digit: int, base: int, n_max: int) -> tuple[set[int], set[int]]:
    """Positions of the local minima and maxima up to ``n_max``.

    Points inside the startup regime (n <= base) are not extrema and are
    omitted.
    """
    validate_digit(digit, base)
    mins: set[int] = set()
    maxs: set[int] = set()
    alpha = 1
    while True:
        n_min = digit * base**alpha - 1
        n_max_pt = (digit + 1) * base**alpha - 1
        if n_min > n_max and n_max_pt > n_max:
            break
        if base < n_min <= n_max:
            mins.add(n_min)
        if base < n_max_pt <= n_max:
            maxs.add(n_max_pt)
        alpha += 1
    return mins, maxs


def iter_sequence(
    digit: int,
    base: int = 10,
    n_max: int = 1000,
    cap: int = DEFAULT_SEQUENCE_CAP,
) -> Iterator[SequencePoint]:
    """Points (n, P_n) for n = 1..n_max via a running count, O(n_max) total.

    The current power window [p, p * base) makes the per-step leading digit
    a single integer division.
    """
    validate_digit(digit, base)
    if not isinstance(n_max, int) or isinstance(n_max, bool) or n_max < 1:
        raise DomainError(f"n_max must be a positive integer, got {n_max!r}")
    if n_max > cap:
        raise ResourceError(f"n_max={n_max} exceeds the configured cap of {cap}")
    count = 0
    p = 1
    for n in range(1, n_max + 1):
        if n == p * base:
            p *= base
        if n // p == digit:
            count += 1
        yield SequencePoint(n, digit, Fraction(count, n))


def sequence(
    digit: int,
    base: int = 10,
    n_max: int = 1000,
    cap: int = DEFAULT_SEQUENCE_CAP,
) -> list[SequencePoint]:
    """Materialized :func:`iter_sequence`; every point equals probability()."""
    return list(iter_sequence(digit, base, n_max, cap))
