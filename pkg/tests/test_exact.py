from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from negord.exact import (
    GOLDEN,
    GOLDEN_CONJ,
    LAMBDA,
    SQRT5,
    LaurentPoly,
    QuadNum,
    deserialize,
    format_rational,
    laurent_ddl,
    laurent_eval,
    laurent_substitute_power,
    parse_rational,
    serialize,
)

rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12))
nonzero = st.builds(Fraction, st.integers(1, 50) | st.integers(-50, -1), st.integers(1, 12))
laurents = st.dictionaries(st.integers(-4, 4), rationals, max_size=5).map(LaurentPoly)
quads = st.builds(QuadNum, rationals, rationals)


def half_lam_minus_half_inv():
    return LAMBDA / 2 - LAMBDA.inverse() / 2


# -- rationals ---------------------------------------------------------------

@pytest.mark.parametrize("text, expected", [
    ("6/-4", Fraction(-3, 2)),
    ("-6/4", Fraction(-3, 2)),
    ("0/7", Fraction(0)),
    ("5", Fraction(5)),
    (" 12/8 ", Fraction(3, 2)),
])
def test_parse_rational_canonical(text, expected):
    q = parse_rational(text)
    assert q == expected
    assert q.denominator >= 1


@pytest.mark.parametrize("bad", ["", "1/0", "abc", "1.5.2"])
def test_parse_rational_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_rational(bad)


@pytest.mark.parametrize("q, text", [(Fraction(-3, 2), "-3/2"), (Fraction(4), "4"), (Fraction(0), "0")])
def test_format_rational(q, text):
    assert format_rational(q) == text


@given(rationals)
def test_rational_text_round_trip(q):
    assert parse_rational(format_rational(q)) == q


# -- Laurent polynomials -----------------------------------------------------

@given(laurents)
def test_no_zero_coefficients_stored(p):
    assert all(c != 0 for c in p.terms.values())


@given(laurents, laurents, laurents)
def test_laurent_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly()
    assert a * 1 == a


@given(laurents, laurents, nonzero)
def test_eval_is_a_ring_homomorphism(a, b, lam0):
    assert laurent_eval(a + b, lam0) == laurent_eval(a, lam0) + laurent_eval(b, lam0)
    assert laurent_eval(a * b, lam0) == laurent_eval(a, lam0) * laurent_eval(b, lam0)


@given(laurents, st.integers(-3, 3), st.integers(-3, 3))
def test_substitute_power_composes(p, m1, m2):
    if m1 == 0 or m2 == 0:
        return
    lhs = laurent_substitute_power(laurent_substitute_power(p, m1), m2)
    assert lhs == laurent_substitute_power(p, m1 * m2)


@given(laurents, laurents)
def test_ddl_product_rule(a, b):
    assert laurent_ddl(a * b) == laurent_ddl(a) * b + a * laurent_ddl(b)


@pytest.mark.parametrize("p, lam0, expected", [
    (half_lam_minus_half_inv(), 1, 0),
    (LaurentPoly.constant(1), Fraction(7, 3), 1),
    (2 * LAMBDA ** 2 + LAMBDA, Fraction(1, 2), 1),
])
def test_laurent_eval_examples(p, lam0, expected):
    assert laurent_eval(p, lam0) == expected


def test_laurent_eval_rejects_zero():
    with pytest.raises((ValueError, ZeroDivisionError)):
        laurent_eval(LAMBDA.inverse(), 0)


@pytest.mark.parametrize("p, m, expected", [
    (LAMBDA, 2, LAMBDA ** 2),
    (half_lam_minus_half_inv(), -1, LAMBDA.inverse() / 2 - LAMBDA / 2),
    (2 * LAMBDA ** 2 + LAMBDA, 3, 2 * LAMBDA ** 6 + LAMBDA ** 3),
])
def test_substitute_power_examples(p, m, expected):
    assert laurent_substitute_power(p, m) == expected


@pytest.mark.parametrize("p, expected", [
    (LAMBDA ** 2, 2 * LAMBDA),
    (LAMBDA.inverse() / 2, -LAMBDA ** -2 / 2),
    (LaurentPoly.constant(5), LaurentPoly()),
])
def test_ddl_examples(p, expected):
    assert laurent_ddl(p) == expected


def test_inverse_only_for_monomials():
    assert (3 * LAMBDA ** 2).inverse() * (3 * LAMBDA ** 2) == 1
    with pytest.raises(ValueError):
        (LAMBDA + 1).inverse()


@given(laurents)
def test_laurent_json_round_trip(p):
    assert LaurentPoly.from_json(p.to_json()) == p
    assert deserialize(json.loads(json.dumps(serialize(p)))) == p


def test_laurent_json_shape():
    assert json.loads(half_lam_minus_half_inv().to_json()) == {"-1": "-1/2", "1": "1/2"}


# -- Q(sqrt 5) -----------------------------------------------------------------

@given(quads, quads, quads)
def test_quad_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(rationals, rationals, rationals, rationals)
def test_quad_product_formula(a, b, c, d):
    prod = QuadNum(a, b) * QuadNum(c, d)
    assert prod == QuadNum(a * c + 5 * b * d, a * d + b * c)


@given(quads)
def test_quad_inverse(q):
    if q == QuadNum(0, 0):
        return
    assert q * q.inverse() == QuadNum(1, 0)


def test_golden_ratio_relations():
    assert GOLDEN + GOLDEN_CONJ == 1
    assert GOLDEN * GOLDEN_CONJ == -1
    assert SQRT5 * SQRT5 == 5
    assert (GOLDEN - GOLDEN_CONJ) == SQRT5


def test_quad_json():
    assert QuadNum(Fraction(1, 2), Fraction(1, 2)).to_json_obj() == {"rational": "1/2", "sqrt5": "1/2"}


@pytest.mark.parametrize("value", [Fraction(-3, 2), 7, LAMBDA ** -3 + 1, [Fraction(1, 3), LAMBDA]])
def test_serialize_round_trip(value):
    back = deserialize(json.loads(json.dumps(serialize(value))))
    assert back == (list(value) if isinstance(value, (list, tuple)) else value)
