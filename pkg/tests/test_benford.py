"""Benford distribution values against a 50-digit mpmath oracle."""

import mpmath
import pytest

from digitscreen import DomainError, benford_prob, benford_table

# First-digit probabilities in base 10, to three decimals.
BASE10_TABLE = {1: 0.301, 2: 0.176, 3: 0.125, 4: 0.097, 5: 0.079, 6: 0.067, 7: 0.058, 8: 0.051, 9: 0.046}


def test_base10_three_decimals():
    for k, expected in BASE10_TABLE.items():
        assert round(benford_prob(k, 10), 3) == expected


def test_table_matches_prob_and_sums_to_one():
    for base in range(2, 37):
        table = benford_table(base)
        assert table.base == base
        assert set(table.probabilities) == set(range(1, base))
        assert table[1] == benford_prob(1, base)
        assert abs(sum(p for _, p in table.items()) - 1.0) < 1e-12


def test_strictly_decreasing_for_base_three_and_up():
    for base in range(3, 37):
        table = benford_table(base)
        for k in range(1, base - 1):
            assert table[k] > table[k + 1]


def test_base2_degenerate():
    assert benford_prob(1, 2) == 1.0
    assert dict(benford_table(2).items()) == {1: 1.0}


def test_base3_values():
    table = benford_table(3)
    assert round(table[1], 4) == 0.6309  # log_3(2)
    assert round(table[2], 4) == 0.3691  # log_3(1.5)


def test_against_high_precision_oracle():
    mpmath.mp.dps = 50
    for base in (3, 10, 16, 36):
        for k in range(1, base):
            exact = mpmath.log(1 + mpmath.mpf(1) / k) / mpmath.log(base)
            assert abs(benford_prob(k, base) - float(exact)) < 1e-15, (k, base)


def test_domain_errors():
    with pytest.raises(DomainError):
        benford_prob(0, 10)
    with pytest.raises(DomainError):
        benford_prob(10, 10)
    with pytest.raises(DomainError):
        benford_prob(1, 1)
    with pytest.raises(DomainError):
        benford_table(37)
