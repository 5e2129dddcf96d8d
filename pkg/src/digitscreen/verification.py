"""Self-checks of the counting identities behind the screening intervals.

Each property is checked against an independent route: closed-form counts
against one-by-one enumeration, extremum formulas against the counting
measure, monotone convergence against the exact interval endpoints.  Checks
return results instead of raising so a harness can print one line per
property and exit nonzero only at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .digits import leading_digit_nat
from .errors import DomainError
from .subsequence import count_leading, local_max, local_min, probability, screen_interval

DEFAULT_BASES = (2, 3, 8, 10, 16)
DEFAULT_COUNT_LIMIT = 10_000
DEFAULT_EXTREMA_ALPHA = 6
DEFAULT_CONVERGENCE_ALPHA = 20

CountFn = Callable[[int, int, int], int]


@dataclass
class PropertyResult:
    """Outcome of one verified property."""

    name: str
    passed: bool
    checks: int
    detail: str = ""


def _fail(name: str, checks: int, detail: str) -> PropertyResult:
    return PropertyResult(name, False, checks, detail)


def verify_counting(
    bases: Sequence[int] = DEFAULT_BASES,
    limit: int = DEFAULT_COUNT_LIMIT,
    count_fn: CountFn | None = None,
) -> PropertyResult:
    """Closed-form counts equal brute-force enumeration for every n <= limit.

    The enumeration route applies leading_digit_nat to each natural in turn
    and keeps running totals; the closed form never sees that path.
    """
    name = "counting-oracle"
    count_fn = count_fn or count_leading
    checks = 0
    for base in bases:
        running = {k: 0 for k in range(1, base)}
        for n in range(1, limit + 1):
            running[leading_digit_nat(n, base)] += 1
            for k in range(1, base):
                if count_fn(k, n, base) != running[k]:
                    return _fail(
                        name,
                        checks,
                        f"count(digit={k}, n={n}, base={base}) = {count_fn(k, n, base)},"
                        f" enumeration gives {running[k]}",
                    )
                checks += 1
    return PropertyResult(name, True, checks)


def verify_partition(
    bases: Sequence[int] = DEFAULT_BASES,
    limit: int = DEFAULT_COUNT_LIMIT,
    count_fn: CountFn | None = None,
) -> PropertyResult:
    """Digit classes partition [1, n]: counts sum to n, probabilities to 1.

    The count partition is checked at every n <= limit; the exact rational
    unit sum additionally exercises probability() on a logarithmic sample.
    """
    name = "partition-of-unity"
    count_fn = count_fn or count_leading
    checks = 0
    for base in bases:
        for n in range(1, limit + 1):
            if sum(count_fn(k, n, base) for k in range(1, base)) != n:
                return _fail(name, checks, f"counts do not partition n={n} in base {base}")
            checks += 1
        sample = sorted({1, 2, base, base + 1, limit} | {base**a for a in range(1, 8) if base**a <= limit})
        for n in sample:
            total = sum(probability(k, n, base) for k in range(1, base))
            if total != Fraction(1):
                return _fail(name, checks, f"probabilities sum to {total} at n={n}, base {base}")
            checks += 1
    return PropertyResult(name, True, checks)


def _regime_alphas(digit: int, base: int, alpha_max: int, n_of_alpha) -> list[int]:
    return [a for a in range(1, alpha_max + 1) if n_of_alpha(digit, a, base) > base]


def verify_extrema(
    bases: Sequence[int] = DEFAULT_BASES,
    alpha_max: int = DEFAULT_EXTREMA_ALPHA,
) -> PropertyResult:
    """Extremum formulas agree exactly with the counting measure.

    Every admissible (digit, alpha) must give local_min/local_max equal to
    probability() at its n, and for alpha >= 2 the point must be strictly
    extremal against both neighbors.  Base 2 is degenerate (the probability
    is constant 1), so strict extremality is only required for base >= 3.
    """
    name = "extrema-identities"
    checks = 0
    for base in bases:
        for k in range(1, base):
            for alpha in _regime_alphas(k, base, alpha_max, lambda d, a, b: d * b**a - 1):
                point = local_min(k, alpha, base)
                if point.probability != probability(k, point.n, base):
                    return _fail(name, checks, f"local_min({k}, {alpha}, {base}) != measure at n={point.n}")
                checks += 1
                if alpha >= 2 and base >= 3:
                    left = probability(k, point.n - 1, base)
                    right = probability(k, point.n + 1, base)
                    if not (left > point.probability < right):
                        return _fail(name, checks, f"n={point.n} is not a strict minimum (base {base})")
                    checks += 1
            for alpha in _regime_alphas(k, base, alpha_max, lambda d, a, b: (d + 1) * b**a - 1):
                point = local_max(k, alpha, base)
                if point.probability != probability(k, point.n, base):
                    return _fail(name, checks, f"local_max({k}, {alpha}, {base}) != measure at n={point.n}")
                checks += 1
                if alpha >= 2 and base >= 3:
                    left = probability(k, point.n - 1, base)
                    right = probability(k, point.n + 1, base)
                    if not (left < point.probability > right):
                        return _fail(name, checks, f"n={point.n} is not a strict maximum (base {base})")
                    checks += 1
    return PropertyResult(name, True, checks)


def verify_convergence(
    bases: Sequence[int] = DEFAULT_BASES,
    alpha_max: int = DEFAULT_CONVERGENCE_ALPHA,
) -> PropertyResult:
    """Extremum families converge monotonically onto the interval endpoints.

    Minima are non-decreasing and never exceed the lower endpoint; maxima
    are non-increasing and never fall below the upper endpoint.  At
    alpha_max the remaining gap must be below 1 / base**(alpha_max - 2).
    All comparisons are exact rationals; no tolerance is involved.
    """
    name = "interval-convergence"
    if alpha_max < 2:
        raise DomainError(f"alpha_max must be >= 2, got {alpha_max}")
    checks = 0
    for base in bases:
        for k in range(1, base):
            interval = screen_interval(k, base)
            bound = Fraction(1, base ** (alpha_max - 2))

            mins = [local_min(k, a, base).probability
                    for a in _regime_alphas(k, base, alpha_max, lambda d, a, b: d * b**a - 1)]
            for earlier, later in zip(mins, mins[1:]):
                if later < earlier:
                    return _fail(name, checks, f"min family not monotone (digit {k}, base {base})")
                checks += 1
            for p in mins:
                if p > interval.lo:
                    return _fail(name, checks, f"min above lower endpoint (digit {k}, base {base})")
                checks += 1
            if mins and interval.lo - mins[-1] > bound:
                return _fail(name, checks, f"min family too far from endpoint (digit {k}, base {base})")
            checks += 1

            maxs = [local_max(k, a, base).probability
                    for a in _regime_alphas(k, base, alpha_max, lambda d, a, b: (d + 1) * b**a - 1)]
            for earlier, later in zip(maxs, maxs[1:]):
                if later > earlier:
                    return _fail(name, checks, f"max family not monotone (digit {k}, base {base})")
                checks += 1
            for p in maxs:
                if p < interval.hi:
                    return _fail(name, checks, f"max below upper endpoint (digit {k}, base {base})")
                checks += 1
            if maxs and maxs[-1] - interval.hi > bound:
                return _fail(name, checks, f"max family too far from endpoint (digit {k}, base {base})")
            checks += 1
    return PropertyResult(name, True, checks)


def run_all(
    bases: Sequence[int] = DEFAULT_BASES,
    limit: int = DEFAULT_COUNT_LIMIT,
    extrema_alpha: int = DEFAULT_EXTREMA_ALPHA,
    convergence_alpha: int = DEFAULT_CONVERGENCE_ALPHA,
    count_fn: CountFn | None = None,
) -> list[PropertyResult]:
    """Run the whole suite; failures are reported results, not exceptions."""
    for base in bases:
        if not isinstance(base, int) or isinstance(base, bool):
            raise DomainError(f"bases must be integers, got {base!r}")
    return [
        verify_counting(bases, limit, count_fn),
        verify_partition(bases, limit, count_fn),
        verify_extrema(bases, extrema_alpha),
        verify_convergence(bases, convergence_alpha),
    ]
