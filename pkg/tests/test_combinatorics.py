from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lipwalk.combinatorics import (
    binomial,
    central_trinomial,
    format_rational,
    irregular_trinomial,
    motzkin,
    parse_rational,
    path_endpoint_distribution,
    path_endpoint_probability,
    trinomial,
    trinomial_row,
)
from lipwalk.reference import IRREGULAR_TRINOMIAL_ROWS, TRINOMIAL_TRIANGLE_ROWS

from _oracles import lattice_paths, walk_endpoint_counts


@pytest.mark.parametrize("a,b,expected", [(4, 2, 6), (3, 5, 0), (7, 0, 1), (0, 0, 1), (5, -1, 0), (-1, 0, 0)])
def test_binomial(a, b, expected):
    assert binomial(a, b) == expected


def test_trinomial_rows_match_printed_triangle():
    for n, row in enumerate(TRINOMIAL_TRIANGLE_ROWS):
        assert [trinomial(n, k) for k in range(-n, n + 1)] == row


def test_central_trinomial_small():
    assert central_trinomial(3) == 7
    assert [central_trinomial(n) for n in range(6)] == [1, 1, 3, 7, 19, 51]


def test_trinomial_outside_triangle_is_zero():
    assert trinomial(3, 4) == 0
    assert trinomial(3, -4) == 0


def test_irregular_rows():
    for n, row in enumerate(IRREGULAR_TRINOMIAL_ROWS):
        assert list(trinomial_row(n)) == row
    assert irregular_trinomial(5, 4) == 45
    assert irregular_trinomial(6, 6) == 141
    assert irregular_trinomial(4, -1) == 0
    assert irregular_trinomial(4, 9) == 0


def test_central_identity_up_to_30():
    for n in range(31):
        assert central_trinomial(n) == sum(binomial(n, 2 * k) * binomial(2 * k, k) for k in range(n // 2 + 1))


@given(st.integers(0, 60), st.integers(-70, 130))
def test_trinomial_recurrence_and_symmetry(n, k):
    T = irregular_trinomial
    if n >= 1:
        assert T(n, k) == T(n - 1, k) + T(n - 1, k - 1) + T(n - 1, k - 2)
    assert T(n, n - k) == T(n, n + k)


@pytest.mark.parametrize("n", range(0, 31, 3))
def test_row_sum_is_power_of_three(n):
    assert sum(trinomial_row(n)) == 3**n


def test_motzkin_small_values():
    assert motzkin(4, 0) == 9
    assert motzkin(4, 0) == irregular_trinomial(4, 4) - irregular_trinomial(4, 2)
    assert all(motzkin(n, n) == 1 for n in range(20))
    assert motzkin(3, 4) == 0
    assert motzkin(3, -1) == 0
    # A001006
    assert [motzkin(n, 0) for n in range(10)] == [1, 1, 2, 4, 9, 21, 51, 127, 323, 835]


@pytest.mark.parametrize("n", range(0, 10))
def test_motzkin_against_lattice_paths(n):
    counts = lattice_paths(n)
    assert {k: motzkin(n, k) for k in range(n + 1) if motzkin(n, k)} == counts


def test_motzkin_difference_formula():
    T = irregular_trinomial
    for n in range(31):
        for k in range(n + 1):
            assert motzkin(n, k) == T(n, n - k) - T(n, n - k - 2)


def test_alternating_column_sums():
    T = irregular_trinomial
    for n in range(31):
        if n % 2 == 0:
            assert sum(T(n, 2 * k) for k in range(n + 1)) == (3**n + 1) // 2
        else:
            assert sum(T(n, 2 * k - 1) for k in range(1, n + 1)) == (3**n - 1) // 2


def test_endpoint_probability_examples():
    assert [path_endpoint_probability(2, k) for k in (-1, 0, 1)] == [Fraction(1, 3)] * 3
    assert path_endpoint_probability(3, 0) == Fraction(1, 3)
    assert path_endpoint_probability(1, 0) == 1
    assert path_endpoint_probability(4, 5) == 0


@pytest.mark.parametrize("n", range(1, 10))
def test_endpoint_distribution_matches_walk_enumeration(n):
    counts = walk_endpoint_counts(n)
    dist = path_endpoint_distribution(n)
    assert {k: p for k, p in dist.items() if p} == {k: Fraction(c, 3 ** (n - 1)) for k, c in counts.items()}


def test_endpoint_distribution_normalized():
    for n in range(1, 16):
        assert sum(path_endpoint_distribution(n).values()) == 1
        assert all(path_endpoint_probability(n, k) == path_endpoint_probability(n, -k) for k in range(n))


def test_rational_format_roundtrip():
    assert format_rational(Fraction(2445, 729)) == "815/243"
    assert format_rational(1) == "1/1"
    assert format_rational(Fraction(0)) == "0/1"
    assert parse_rational("2445/729") == Fraction(815, 243)


@given(st.fractions(), st.fractions(), st.fractions())
def test_fraction_arithmetic_stays_reduced(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    for x in (a + b, a - b, a * b):
        assert x.denominator > 0
        s = format_rational(x)
        assert parse_rational(s) == x
        num, den = map(int, s.split("/"))
        from math import gcd

        assert gcd(abs(num), den) == 1
