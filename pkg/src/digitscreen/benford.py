"""The Benford-Newcomb first-digit distribution in any base."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .digits import validate_base, validate_digit


def benford_prob(digit: int, base: int = 10) -> float:
    """Probability ``log_base(1 + 1/digit)`` that a value leads with ``digit``."""
    validate_digit(digit, base)
    return math.log1p(1.0 / digit) / math.log(base)


@dataclass(frozen=True)
class BenfordDistribution:
    """First-digit probabilities for one base, keyed by digit 1..base-1."""

    base: int
    probabilities: Mapping[int, float]

    def __getitem__(self, digit: int) -> float:
        return self.probabilities[digit]

    def items(self):
        return self.probabilities.items()


def benford_table(base: int = 10) -> BenfordDistribution:
    """The full distribution for one base; the probabilities telescope to 1."""
    validate_base(base)
    return BenfordDistribution(base, {k: benford_prob(k, base) for k in range(1, base)})
