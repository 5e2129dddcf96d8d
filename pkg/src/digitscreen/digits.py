"""Exact leading-digit extraction in arbitrary bases.

The naive implementation ``floor(x / b**floor(log(x, b)))`` goes through
floating point and misrounds exactly where it matters most: next to powers
of the base, where the leading digit flips.  Everything here therefore runs
on integers and exact rationals; floats are refused outright.
"""

from __future__ import annotations

import math
import operator
import re
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .errors import DomainError

MIN_BASE = 2
MAX_BASE = 36  # printable digit alphabet 0-9A-Z

# Decimal literal: optional sign, digits with optional point, optional exponent.
_NUMBER_RE = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")

Magnitude = Union[Fraction, int]


class Skip(Enum):
    """Why a token contributes no leading digit."""

    ZERO = "zero"
    NON_NUMERIC = "non-numeric"


def validate_base(base: int) -> int:
    """Check that ``base`` is a usable radix, returning it unchanged."""
    if not isinstance(base, int) or isinstance(base, bool):
        raise DomainError(f"base must be an integer, got {base!r}")
    if not MIN_BASE <= base <= MAX_BASE:
        raise DomainError(f"base must be in [{MIN_BASE}, {MAX_BASE}], got {base}")
    return base


def validate_digit(digit: int, base: int) -> int:
    """Check that ``digit`` is a possible leading digit in ``base``."""
    validate_base(base)
    if not isinstance(digit, int) or isinstance(digit, bool):
        raise DomainError(f"digit must be an integer, got {digit!r}")
    if not 1 <= digit <= base - 1:
        raise DomainError(f"digit must be in [1, {base - 1}] for base {base}, got {digit}")
    return digit


def floor_log(x: int, base: int) -> tuple[int, int]:
    """Return ``(e, base**e)`` such that ``base**e <= x < base**(e + 1)``.

    The bit length gives a float first guess; the guess is then corrected
    with exact integer comparisons, so the result is exact for integers of
    any size.
    """
    if x < 1:
        raise DomainError(f"floor_log needs x >= 1, got {x}")
    if x < base:
        return 0, 1
    e = int((x.bit_length() - 1) * (math.log(2) / math.log(base)))
    p = base**e
    while p * base <= x:
        p *= base
        e += 1
    while p > x:
        p //= base
        e -= 1
    return e, p


def leading_digit_nat(x: int, base: int = 10) -> int:
    """Leading digit of a natural number written in ``base``.

    Exact for arbitrarily large integers: one :func:`floor_log` to find the
    top power of the base, one integer division to read the digit.
    """
    validate_base(base)
    x = operator.index(x)
    if x < 1:
        raise DomainError(f"leading digit needs x >= 1, got {x}")
    _, p = floor_log(x, base)
    return x // p


def leading_digit_real(x: Magnitude, base: int = 10) -> int:
    """Leading digit of a positive real carried as an exact fraction.

    The value is scaled by powers of the base until it lies in
    ``[1, base)``; the digit is then a single floor.  Floats are rejected:
    parse the original text with :func:`parse_magnitude` instead of
    round-tripping through binary floating point.
    """
    validate_base(base)
    if isinstance(x, float):
        raise DomainError("floats are not exact; parse the original text instead")
    x = Fraction(x)
    if x <= 0:
        raise DomainError(f"leading digit needs x > 0, got {x}")
    num, den = x.numerator, x.denominator
    if num >= den:
        _, p = floor_log(num // den, base)
        den *= p
    else:
        # floor_log underestimates den/num by at most a factor of base,
        # so at most two correction steps remain after the jump.
        _, p = floor_log(den // num, base)
        num *= p
        while num < den:
            num *= base
    return num // den


def parse_decimal(token: str) -> Fraction | None:
    """Exact signed value of a decimal literal, or None for anything else.

    Scientific notation is honored exactly: the exponent shifts the decimal
    point, no float is ever constructed.
    """
    token = token.strip()
    if not token or not _NUMBER_RE.fullmatch(token):
        return None
    return Fraction(token)


def parse_magnitude(token: str) -> Fraction | Skip:
    """Magnitude of a numeric token, ready for digit analysis.

    The sign is discarded (credits count like debits); zero and non-numeric
    tokens come back as the matching :class:`Skip` reason so callers can
    tally them instead of aborting mid-dataset.
    """
    value = parse_decimal(token)
    if value is None:
        return Skip.NON_NUMERIC
    if value == 0:
        return Skip.ZERO
    return abs(value)


def leading_digits(values: Iterable[Fraction | Skip], base: int = 10) -> Iterator[int | Skip]:
    """Map a stream of exact magnitudes to leading digits, passing skips through."""
    validate_base(base)
    for value in values:
        if isinstance(value, Skip):
            yield value
        else:
            yield leading_digit_real(value, base)
