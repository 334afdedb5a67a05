from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from negord.applications import (
    BRUTE_FORCE_MAX,
    b_ogf_coeffs,
    bernstein_basis,
    binomial_moment,
    eval_poly,
    golombek_poly,
    moment_integral,
    moment_poly,
    rook_count_bruteforce,
    rook_count_formula,
    rook_total,
)
from negord.families import bernoulli_poly, golombek_B, y1

rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 9))


@pytest.mark.parametrize("n, r, x, expected", [
    (4, 0, Fraction(2, 7), 1),
    (2, 2, Fraction(1, 2), Fraction(3, 2)),
    (1, 1, Fraction(-5, 3), Fraction(-5, 3)),
])
def test_binomial_moment_examples(n, r, x, expected):
    assert binomial_moment(n, r, x) == expected


@pytest.mark.parametrize("n, r, expected", [(1, 1, Fraction(1, 2)), (5, 0, 1), (2, 1, 1)])
def test_moment_integral_examples(n, r, expected):
    assert moment_integral(n, r) == expected


def test_bernstein_examples():
    x = Fraction(3, 8)
    assert bernstein_basis(1, 0, x) == 1 - x
    assert bernstein_basis(2, 1, Fraction(1, 2)) == Fraction(1, 2)
    with pytest.raises(ValueError):
        bernstein_basis(2, 3, x)


@given(rationals, st.integers(0, 10))
def test_bernstein_partition_of_unity(x, n):
    assert sum(bernstein_basis(n, k, x) for k in range(n + 1)) == 1


@given(rationals, st.integers(0, 6), st.integers(0, 4))
def test_moment_poly_matches_direct_sum(x, n, r):
    p = moment_poly(n, r)
    assert p(x) == binomial_moment(n, r, x)
    assert p.degree <= n


@pytest.mark.parametrize("n", range(7))
@pytest.mark.parametrize("r", range(4))
def test_moment_poly_endpoints(n, r):
    p = moment_poly(n, r)
    # all mass sits at k = n when x = 1; the unweighted sum shows up at x = 1/2
    assert p(1) == n ** r
    assert 2 ** n * p(Fraction(1, 2)) == golombek_B(r, n)
    assert p(0) == (1 if r == 0 else 0)


def test_moment_integral_is_integral_of_poly():
    for n in range(6):
        for r in range(4):
            coeffs = moment_poly(n, r).coeffs
            assert moment_integral(n, r) == sum(c / (i + 1) for i, c in enumerate(coeffs))


def test_moment_identities():
    for n in range(9):
        for r in range(7):
            assert y1(r, n, 1) == Fraction(2 ** n, factorial(n)) * binomial_moment(n, r, Fraction(1, 2))
            bern = (bernoulli_poly(r + 1, n + 1) - bernoulli_poly(r + 1, 0)) / ((n + 1) * (r + 1))
            assert moment_integral(n, r) == bern


@pytest.mark.parametrize("n, k, expected", [(2, 1, 4), (4, 4, 24), (3, 2, 18), (5, 0, 1)])
def test_rook_examples(n, k, expected):
    assert rook_count_bruteforce(n, k) == expected
    assert rook_count_formula(n, k) == expected


@pytest.mark.parametrize("n", range(1, BRUTE_FORCE_MAX + 1))
def test_rooks_brute_force_vs_formula(n):
    for k in range(n + 1):
        assert rook_count_bruteforce(n, k) == comb(n, k) * factorial(n) // factorial(n - k)
    assert rook_count_bruteforce(n, n) == factorial(n)


def test_rook_total_and_errors():
    assert rook_total(2) == 6
    with pytest.raises(ValueError):
        rook_count_bruteforce(BRUTE_FORCE_MAX + 1, 1)
    with pytest.raises(ValueError):
        rook_count_formula(3, 4)


@pytest.mark.parametrize("d, expected", [
    (1, [0, 1]),
    (2, [0, 1, 1]),
    (3, [0, 0, 3, 1]),
    (4, [0, -2, 3, 6, 1]),
])
def test_golombek_poly_examples(d, expected):
    assert golombek_poly(d) == [Fraction(c) for c in expected]


@pytest.mark.parametrize("d", range(1, 9))
def test_golombek_poly_shape(d):
    p = golombek_poly(d)
    assert len(p) == d + 1 and p[-1] == 1 and p[0] == 0
    for k in range(13):
        assert Fraction(golombek_B(d, k)) == eval_poly(p, k) * Fraction(2) ** (k - d)


@pytest.mark.parametrize("d, K, expected", [
    (0, 4, [1, 2, 4, 8, 16]),
    (1, 4, [0, 1, 4, 12, 32]),
    (2, 3, [0, 1, 6, 24]),
])
def test_b_ogf_coeffs(d, K, expected):
    assert b_ogf_coeffs(d, K) == expected
