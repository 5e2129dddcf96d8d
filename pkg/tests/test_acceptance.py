"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines.  Every criterion carries its tolerance and a wall-clock budget;
exact-arithmetic checks use rational equality with no tolerance at all.
"""

import json
import time
from fractions import Fraction

import pytest

from digitscreen import (
    benford_table,
    count_leading,
    leading_digit_nat,
    local_max,
    local_min,
    probability,
    screen,
    screen_interval,
    tally,
)
from digitscreen.cli import EXIT_CLEAN, EXIT_FLAGGED, main
from digitscreen.screening import DigitCounts

ORACLE_BASES = (2, 3, 8, 10, 16)
EXTREMA_BASES = (3, 10, 16)


class Budget:
    """Context manager asserting a wall-clock ceiling and reporting the line."""

    def __init__(self, criterion: str, seconds: float):
        self.criterion = criterion
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        print(f"ACCEPTANCE {status}: {self.criterion} ({elapsed:.2f}s, budget {self.seconds:.0f}s)")
        if exc_type is None:
            assert elapsed < self.seconds, f"{self.criterion}: {elapsed:.2f}s over budget"
        return False


def test_criterion_1_benford_table_reproduction():
    expected = {1: 0.301, 2: 0.176, 3: 0.125, 4: 0.097, 5: 0.079, 6: 0.067, 7: 0.058, 8: 0.051, 9: 0.046}
    with Budget("1 base-10 Benford table to 3 decimals, unit sum to 1e-12", 1.0):
        table = benford_table(10)
        for k, value in expected.items():
            assert round(table[k], 3) == value, k
        assert abs(sum(p for _, p in table.items()) - 1.0) < 1e-12


def test_criterion_2_counting_oracle_equivalence():
    with Budget("2 closed-form counts = enumeration for n <= 10^4, bases 2,3,8,10,16", 60.0):
        for base in ORACLE_BASES:
            running = {k: 0 for k in range(1, base)}
            for n in range(1, 10_001):
                running[leading_digit_nat(n, base)] += 1
                assert sum(running.values()) == n  # partition of [1, n]
                for k in range(1, base):
                    assert count_leading(k, n, base) == running[k], (k, n, base)


def test_criterion_3_extrema_identities():
    with Budget("3 extremum formulas equal the measure exactly, locally extremal", 30.0):
        for base in EXTREMA_BASES:
            for k in range(1, base):
                for alpha in range(1, 7):
                    n_min = k * base**alpha - 1
                    if n_min > base:
                        point = local_min(k, alpha, base)
                        assert point.n == n_min
                        assert point.probability == probability(k, n_min, base)
                        if alpha >= 2:
                            assert probability(k, n_min - 1, base) > point.probability
                            assert probability(k, n_min + 1, base) > point.probability
                    n_max = (k + 1) * base**alpha - 1
                    if n_max > base:
                        point = local_max(k, alpha, base)
                        assert point.n == n_max
                        assert point.probability == probability(k, n_max, base)
                        if alpha >= 2:
                            assert probability(k, n_max - 1, base) < point.probability
                            assert probability(k, n_max + 1, base) < point.probability


def test_criterion_4_interval_convergence():
    with Budget("4 extremum families converge monotonically onto the endpoints", 10.0):
        for base in EXTREMA_BASES:
            for k in range(1, base):
                interval = screen_interval(k, base)
                bound = Fraction(1, base**18)

                mins = [local_min(k, a, base).probability for a in range(1, 21) if k * base**a - 1 > base]
                for earlier, later in zip(mins, mins[1:]):
                    assert earlier <= later  # non-decreasing, exact comparison
                assert all(p <= interval.lo for p in mins)
                assert interval.lo - mins[-1] <= bound

                maxs = [local_max(k, a, base).probability for a in range(1, 21) if (k + 1) * base**a - 1 > base]
                for earlier, later in zip(maxs, maxs[1:]):
                    assert earlier >= later  # non-increasing
                assert all(p >= interval.hi for p in maxs)
                assert maxs[-1] - interval.hi <= bound


def test_criterion_5_screening_sanity():
    with Budget("5 screening: powers of two clean, all-nines flagged, exact endpoint", 30.0):
        # (a) leading digits of 2^n, n = 1..5000, are Benford-conforming
        digits = [leading_digit_nat(2**n, 10) for n in range(1, 5001)]
        report = screen(tally(digits, 10))
        assert report.flagged_digits == []

        # (b) 1000 all-leading-9 values flag digit 9 (freq 1 > 1/9) and digit 1 (freq 0 < 1/9)
        counts = DigitCounts.empty(10)
        for _ in range(1000):
            counts.add(9)
        report = screen(counts)
        assert 9 in report.flagged_digits
        assert 1 in report.flagged_digits
        assert report.verdicts[8].observed == Fraction(1) > report.verdicts[8].interval.hi
        assert report.verdicts[0].observed == Fraction(0) < report.verdicts[0].interval.lo

        # (c) full enumeration 1..999999: digit-1 frequency is exactly the closed endpoint
        n = 999_999
        counts = DigitCounts.empty(10)
        for k in range(1, 10):
            counts.counts[k] = count_leading(k, n, 10)
        counts.total = sum(counts.counts.values())
        assert counts.total == n
        report = screen(counts)
        digit1 = report.verdicts[0]
        assert digit1.observed == Fraction(1, 9) == digit1.interval.lo
        assert digit1.in_interval is True


def test_criterion_6_figure_data_regeneration(capsys):
    with Budget("6 sequence data: every detected extremum matches the predicted n", 10.0):
        code = main(["sequence", "--base", "10", "--digit", "1", "--n-max", "10000", "--out", "csv"])
        out = capsys.readouterr().out
        assert code == EXIT_CLEAN
        lines = out.strip().splitlines()
        assert lines[0].split(",")[0:4] == ["N", "digit", "probability_decimal", "probability_exact"]
        probs = {}
        markers = {}
        for line in lines[1:]:
            fields = line.split(",")
            n = int(fields[0])
            num, den = fields[3].split("/")
            probs[n] = Fraction(int(num), int(den))
            markers[n] = fields[4]
        assert len(probs) == 10_000

        # detect strict local extrema of the emitted data, past the startup regime
        detected_mins, detected_maxs = set(), set()
        for n in range(11, 10_000):
            if probs[n - 1] > probs[n] < probs[n + 1]:
                detected_mins.add(n)
            if probs[n - 1] < probs[n] > probs[n + 1]:
                detected_maxs.add(n)
        predicted_mins = {10**a - 1 for a in range(2, 5)}  # k * b^a - 1, k = 1
        predicted_maxs = {2 * 10**a - 1 for a in range(1, 4)}  # (k+1) * b^a - 1
        assert detected_mins == predicted_mins
        assert detected_maxs == predicted_maxs
        for n in predicted_mins:
            assert markers[n] == "local-min"
        for n in predicted_maxs:
            assert markers[n] == "local-max"


def test_criterion_7_analyze_determinism(tmp_path, capsys):
    with Budget("7 byte-identical JSON reports on repeated runs", 10.0):
        path = tmp_path / "ledger.csv"
        path.write_text("amount\n" + "\n".join(str(3**n) for n in range(1, 300)) + "\n")
        argv = ["analyze", str(path), "--column", "amount", "--out", "json"]
        first_code = main(argv)
        first = capsys.readouterr().out
        second_code = main(argv)
        second = capsys.readouterr().out
        assert first_code == second_code
        assert first == second
        json.loads(first)  # well-formed
