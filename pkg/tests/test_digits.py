"""Digit extraction against an independent base-conversion oracle."""

from fractions import Fraction

import pytest

from digitscreen import DomainError, Skip, leading_digit_nat, leading_digit_real, leading_digits
from digitscreen.digits import floor_log, parse_decimal, parse_magnitude, validate_base, validate_digit

ORACLE_BASES = (2, 3, 8, 10, 16)


def first_symbol(x: int, base: int) -> int:
    """Oracle: render x in the base by repeated divmod, return the top digit."""
    digits = []
    while x:
        x, d = divmod(x, base)
        digits.append(d)
    return digits[-1]


@pytest.mark.parametrize(
    "x,base,expected",
    [
        (345, 10, 3),
        (7, 2, 1),
        (255, 16, 15),  # FF in hex
        (1, 10, 1),
        (9, 10, 9),
        (10, 10, 1),
        (99, 10, 9),
        (100, 10, 1),
        (2**64, 2, 1),
        (35 * 36**8, 36, 35),
    ],
)
def test_leading_digit_nat_examples(x, base, expected):
    assert leading_digit_nat(x, base) == expected
    assert leading_digit_nat(x, base) == first_symbol(x, base)


def test_leading_digit_nat_matches_string_oracle_exhaustively():
    for base in ORACLE_BASES:
        for x in range(1, 100_001):
            assert leading_digit_nat(x, base) == first_symbol(x, base), (x, base)


def test_leading_digit_nat_exact_powers():
    for base in (2, 3, 10, 16, 36):
        for k in range(1, base):
            for alpha in range(0, 21):
                assert leading_digit_nat(k * base**alpha, base) == k


def test_leading_digit_nat_huge_values():
    # power jump must stay exact far beyond float range
    n = 7 * 10**400 + 123456789
    assert leading_digit_nat(n, 10) == 7
    assert leading_digit_nat(2**5000, 10) == int(str(2**5000)[0])


@pytest.mark.parametrize("bad", [0, -1, -345])
def test_leading_digit_nat_rejects_nonpositive(bad):
    with pytest.raises(DomainError):
        leading_digit_nat(bad, 10)


def test_leading_digit_nat_rejects_floats():
    with pytest.raises(TypeError):
        leading_digit_nat(345.0, 10)


def test_base_validation():
    for bad in (1, 0, -2, 37, 100):
        with pytest.raises(DomainError):
            validate_base(bad)
    with pytest.raises(DomainError):
        validate_base("10")
    with pytest.raises(DomainError):
        validate_base(True)
    assert validate_base(2) == 2
    assert validate_base(36) == 36


def test_digit_validation():
    assert validate_digit(9, 10) == 9
    for bad in (0, 10, -1):
        with pytest.raises(DomainError):
            validate_digit(bad, 10)
    with pytest.raises(DomainError):
        validate_digit(1, 37)


def test_floor_log():
    assert floor_log(1, 10) == (0, 1)
    assert floor_log(9, 10) == (0, 1)
    assert floor_log(10, 10) == (1, 10)
    assert floor_log(10**20 - 1, 10) == (19, 10**19)
    assert floor_log(10**20, 10) == (20, 10**20)
    for base in ORACLE_BASES:
        for e in range(0, 50):
            p = base**e
            assert floor_log(p, base) == (e, p)
            if p > 1:
                assert floor_log(p - 1, base) == (e - 1, p // base)


@pytest.mark.parametrize(
    "x,base,expected",
    [
        (Fraction(345, 100000), 10, 3),  # 0.00345
        (Fraction(1), 10, 1),
        (Fraction(1), 2, 1),
        (Fraction(1), 36, 1),
        (Fraction(3, 10), 2, 1),  # 0.3 -> 0.6 -> 1.2 in [1, 2)
        (Fraction(345, 1), 10, 3),
        (Fraction(1, 2), 10, 5),
        (Fraction(255, 256), 16, 15),
        (Fraction(1, 3), 10, 3),
    ],
)
def test_leading_digit_real_examples(x, base, expected):
    assert leading_digit_real(x, base) == expected


def test_leading_digit_real_matches_nat_on_integers():
    for base in ORACLE_BASES:
        for x in range(1, 2000):
            assert leading_digit_real(Fraction(x), base) == leading_digit_nat(x, base)


def test_leading_digit_real_scale_invariance():
    samples = [Fraction(345, 1000), Fraction(1, 3), Fraction(7), Fraction(255, 16), Fraction(19, 17)]
    for base in (2, 10, 16):
        for x in samples:
            digit = leading_digit_real(x, base)
            for m in range(-10, 11):
                assert leading_digit_real(x * Fraction(base) ** m, base) == digit


def test_leading_digit_real_power_boundaries():
    for base in ORACLE_BASES:
        for m in range(-8, 9):
            assert leading_digit_real(Fraction(base) ** m, base) == 1
            assert leading_digit_real(Fraction(base) ** m * (base - 1), base) == base - 1
        # just below a power: last digit class of the previous block
        assert leading_digit_real(Fraction(base**6 - 1), base) == base - 1
        assert leading_digit_real(Fraction(base**6 - 1, base**9), base) == base - 1


def test_leading_digit_real_rejections():
    with pytest.raises(DomainError):
        leading_digit_real(Fraction(0), 10)
    with pytest.raises(DomainError):
        leading_digit_real(Fraction(-3, 10), 10)
    with pytest.raises(DomainError):
        leading_digit_real(0.00345, 10)  # floats are not exact


def test_base2_only_digit_is_one():
    for x in list(range(1, 500)) + [2**40 - 1, 2**40, 3**30]:
        assert leading_digit_nat(x, 2) == 1
    for x in (Fraction(3, 10), Fraction(1, 7), Fraction(1000003)):
        assert leading_digit_real(x, 2) == 1


@pytest.mark.parametrize(
    "token,expected",
    [
        ("345.00", Fraction(345)),
        ("-0.025", Fraction(1, 40)),
        ("+7", Fraction(7)),
        ("1e3", Fraction(1000)),
        ("2.5E-2", Fraction(1, 40)),
        (".5", Fraction(1, 2)),
        ("5.", Fraction(5)),
        ("  42  ", Fraction(42)),
        ("-1.5e2", Fraction(150)),
    ],
)
def test_parse_magnitude_values(token, expected):
    assert parse_magnitude(token) == expected


@pytest.mark.parametrize(
    "token,expected",
    [
        ("abc", Skip.NON_NUMERIC),
        ("", Skip.NON_NUMERIC),
        ("   ", Skip.NON_NUMERIC),
        ("nan", Skip.NON_NUMERIC),
        ("inf", Skip.NON_NUMERIC),
        ("1/2", Skip.NON_NUMERIC),  # only decimal literals
        ("0x1F", Skip.NON_NUMERIC),
        ("1_000", Skip.NON_NUMERIC),
        ("1e", Skip.NON_NUMERIC),
        (".", Skip.NON_NUMERIC),
        ("0", Skip.ZERO),
        ("0.000", Skip.ZERO),
        ("-0", Skip.ZERO),
        ("0e5", Skip.ZERO),
    ],
)
def test_parse_magnitude_skips(token, expected):
    assert parse_magnitude(token) is expected


def test_parse_decimal_signed():
    assert parse_decimal("-12") == Fraction(-12)
    assert parse_decimal("1e-3") == Fraction(1, 1000)
    assert parse_decimal("hello") is None


def test_parse_magnitude_is_exact_for_long_literals():
    token = "1." + "0" * 60 + "7e-30"
    value = parse_magnitude(token)
    assert value == Fraction(10**61 + 7, 10**91)


def test_leading_digits_stream_passes_skips_through():
    stream = [Fraction(345), Skip.ZERO, Fraction(1, 40), Skip.NON_NUMERIC, Fraction(7)]
    assert list(leading_digits(stream, 10)) == [3, Skip.ZERO, 2, Skip.NON_NUMERIC, 7]
