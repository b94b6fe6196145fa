from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mzr.arith import (
    BernoulliTable,
    bernoulli,
    binomial,
    format_rational,
    parse_rational,
    zeta_nonpositive,
)
from oracles import bernoulli_series, pascal


@pytest.mark.parametrize(
    "n, expected",
    [(0, Fraction(1)), (1, Fraction(-1, 2)), (4, Fraction(-1, 30)), (12, Fraction(-691, 2730))],
)
def test_bernoulli_values(n, expected):
    assert bernoulli(n) == expected


def test_bernoulli_matches_generating_function():
    assert [bernoulli(n) for n in range(41)] == bernoulli_series(40)


def test_odd_bernoulli_vanish():
    assert all(bernoulli(n) == 0 for n in range(3, 61, 2))


def test_defining_recurrence():
    for n in range(1, 31):
        assert sum(binomial(n + 1, k) * bernoulli(k) for k in range(n + 1)) == 0


def test_table_is_monotone():
    table = BernoulliTable()
    first = [table[n] for n in range(10)]
    table[50]
    assert [table[n] for n in range(10)] == first
    assert len(table) == 51


@pytest.mark.parametrize(
    "n, expected",
    [(0, Fraction(-1, 2)), (1, Fraction(-1, 12)), (2, Fraction(0)), (3, Fraction(1, 120))],
)
def test_zeta_nonpositive(n, expected):
    assert zeta_nonpositive(n) == expected


def test_trivial_zeros():
    assert all(zeta_nonpositive(n) == 0 for n in range(2, 40, 2))


def test_negative_arguments_rejected():
    with pytest.raises(ValueError):
        bernoulli(-1)
    with pytest.raises(ValueError):
        zeta_nonpositive(-2)


@pytest.mark.parametrize("n, k, expected", [(3, 0, 1), (3, 2, 3), (10, 5, 252)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_against_pascal():
    rows = pascal(20)
    assert all(binomial(n, k) == rows[n][k] for n in range(21) for k in range(n + 1))


def test_binomial_k_exceeds_n():
    with pytest.raises(ValueError):
        binomial(3, 4)


rationals = st.fractions(max_denominator=10**6)


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if a:
        assert a * (1 / a) == 1


@given(rationals)
def test_rational_string_round_trip(q):
    text = format_rational(q)
    assert parse_rational(text) == q
    assert ("/" in text) == (q.denominator != 1)


def test_format_rational():
    assert format_rational(Fraction(2, 4)) == "1/2"
    assert format_rational(Fraction(-6, 3)) == "-2"
