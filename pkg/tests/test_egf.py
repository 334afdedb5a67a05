from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from negord import egf
from negord.egf import (
    EgfSeries,
    coeff,
    default_order,
    drop_below,
    exp_series,
    mul,
    negate_t,
    one_series,
    reciprocal,
    shift_div_t,
    t_power,
    truncate,
)
from negord.exact import LAMBDA

small = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 6))
nonzero = st.builds(Fraction, st.integers(1, 9) | st.integers(-9, -1), st.integers(1, 6))
series = st.lists(small, min_size=6, max_size=6).map(EgfSeries)
unit_series = st.builds(lambda a0, rest: EgfSeries([a0, *rest]), nonzero, st.lists(small, min_size=5, max_size=5))


@pytest.mark.parametrize("prefactor, rate, N, expected", [
    (1, 3, 2, [1, 3, 9]),
    (LAMBDA, 1, 2, [LAMBDA, LAMBDA, LAMBDA]),
    (1, 0, 3, [1, 0, 0, 0]),
])
def test_exp_series_examples(prefactor, rate, N, expected):
    assert list(exp_series(prefactor, rate, N).coeffs) == expected


def test_exp_times_exp():
    e = exp_series(1, 1, 8)
    assert list(mul(e, e).coeffs) == [2 ** n for n in range(9)]


def test_two_sided_product_identity():
    N = 7
    a = exp_series(LAMBDA, 1, N) + 1
    b = exp_series(LAMBDA.inverse(), -1, N) + 1
    expected = exp_series(LAMBDA, 1, N) + exp_series(LAMBDA.inverse(), -1, N) + 2
    assert mul(a, b) == expected


def test_pow_examples():
    f = exp_series(1, 1, 4) + 1
    assert coeff(egf.pow(f, 2), 2) / factorial(2) == 3
    g = exp_series(LAMBDA, 1, 4) + 1
    assert coeff(egf.pow(g, 3), 2) / factorial(3) == Fraction(3, 2) * LAMBDA ** 3 + 2 * LAMBDA ** 2 + LAMBDA / 2
    assert coeff(egf.pow(g, 2), 1) / factorial(2) == LAMBDA ** 2 + LAMBDA
    assert egf.pow(f, 1) == f


def test_reciprocal_gives_euler_numbers():
    half = (exp_series(1, 1, 6) + 1) / 2
    assert coeff(reciprocal(half), 1) == Fraction(-1, 2)
    cosh = (exp_series(1, 1, 6) + exp_series(1, -1, 6)) / 2
    assert coeff(reciprocal(cosh), 2) == -1
    assert reciprocal(one_series(5)) == one_series(5)


def test_reciprocal_needs_unit():
    with pytest.raises(ValueError):
        reciprocal(exp_series(1, 1, 4) - 1)


def test_shift_div_t_examples():
    f = exp_series(1, 1, 8) - 1
    assert list(shift_div_t(f, 1).coeffs) == [Fraction(1, n + 1) for n in range(8)]
    sq = egf.pow(f, 2)
    assert coeff(shift_div_t(sq, 2), 0) == 1
    assert shift_div_t(t_power(1, 5), 1) == one_series(4)
    with pytest.raises(ValueError):
        shift_div_t(exp_series(1, 1, 4), 1)


def test_negate_t():
    assert negate_t(exp_series(1, 1, 6)) == exp_series(1, -1, 6)
    even = exp_series(1, 1, 6) + exp_series(1, -1, 6)
    assert negate_t(even) == even


def test_coeff_examples():
    assert coeff(one_series(6), 5) == 0
    two_sided = (exp_series(1, 1, 4) + exp_series(1, -1, 4) + 2) / 2
    assert coeff(two_sided, 2) == 1
    with pytest.raises(IndexError):
        coeff(one_series(3), 4)


def test_order_mismatch_rejected():
    with pytest.raises(ValueError):
        mul(one_series(3), one_series(4))


def test_truncate_and_drop_below():
    e = exp_series(1, 2, 6)
    assert truncate(e, 3) == exp_series(1, 2, 3)
    assert list(drop_below(e, 2).coeffs)[:3] == [0, 0, 4]


@given(small, small)
def test_exponents_add(a, b):
    assert mul(exp_series(1, a, 6), exp_series(1, b, 6)) == exp_series(1, a + b, 6)


@given(series, series, series)
def test_mul_commutative_associative(f, g, h):
    assert mul(f, g) == mul(g, f)
    assert mul(mul(f, g), h) == mul(f, mul(g, h))
    assert mul(f, one_series(5)) == f


@given(unit_series)
def test_reciprocal_inverts(f):
    assert mul(f, reciprocal(f)) == one_series(5)


@given(series, st.integers(0, 4))
def test_shift_div_t_recovers(f, k):
    g = mul(f, t_power(k, f.order))
    # dividing loses the top k coefficients
    assert shift_div_t(g, k) == truncate(f, f.order - k)


@given(series, st.integers(1, 6))
def test_pow_is_iterated_mul(f, k):
    assert egf.pow(f, k) == mul(egf.pow(f, k - 1), f)


def test_default_order_and_override(monkeypatch):
    assert default_order(5) == 7
    monkeypatch.setenv(egf.TRUNC_ENV, "30")
    assert default_order(5) == 30
    monkeypatch.setenv(egf.TRUNC_ENV, "3")
    with pytest.raises(ValueError):
        default_order(5)
    monkeypatch.setenv(egf.TRUNC_ENV, "lots")
    with pytest.raises(ValueError):
        default_order(5)
