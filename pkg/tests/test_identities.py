from __future__ import annotations

import json
from fractions import Fraction
from math import comb

import pytest

from negord.exact import LAMBDA
from negord.identities import (
    ANY_LAMBDA,
    DISCREPANCY,
    HOLDS,
    LAMBDA_FREE,
    NUMERIC_ONLY,
    UnknownIdentity,
    binomial_as_power_poly,
    check_one,
    get_identity,
    list_identities,
    run_suite,
    y2_corrected_closed_form,
    y2_printed_closed_form,
)
from negord.families import y2

CATALOG = {i.id: i for i in list_identities()}


@pytest.fixture(scope="module")
def small_report():
    return run_suite(4, 4, lambdas=(1, -1, 2, Fraction(1, 2)), symbolic=True)


def test_catalog_size_and_fields():
    assert len(CATALOG) >= 26
    for ident in CATALOG.values():
        assert ident.statement
        assert ident.source in {"printed", "derived"}
        assert ident.expectation in {HOLDS, DISCREPANCY}
        assert ident.lam_mode in {LAMBDA_FREE, ANY_LAMBDA, NUMERIC_ONLY}
        if ident.corrected_variant is not None:
            assert ident.corrected_variant in CATALOG


@pytest.mark.parametrize("number", range(1, 32))
def test_every_numbered_identity_registered(number):
    assert f"I-{number:02d}" in CATALOG


@pytest.mark.parametrize("ident, variant", [
    ("I-05", "I-05c"), ("I-18", "I-18c"), ("I-19", "I-19c"), ("I-20", "I-19c"),
    ("I-21", "I-21c"), ("I-22", "I-22c"), ("I-28", "I-28c"), ("I-29", "I-29c"),
])
def test_corrected_variants(ident, variant):
    assert get_identity(ident).corrected_variant == variant
    assert get_identity(variant).source == "derived"


@pytest.mark.parametrize("ident, n, k, lam, lhs", [
    ("I-25", 3, 2, 1, Fraction(5, 2)),
    ("I-15", 5, 3, 1, 0),
    ("I-03", 2, 2, 2, 16),
])
def test_check_one_examples(ident, n, k, lam, lhs):
    w = check_one(ident, n, k, lam)
    assert w.holds and w.lhs == w.rhs
    # some identities bundle several equalities; the first is the headline one
    first = w.lhs[0] if isinstance(w.lhs, tuple) else w.lhs
    assert first == lhs


def test_check_one_counterexample_i21():
    w = check_one("I-21", 0, 2, 1)
    assert not w.holds
    assert w.lhs == 0 and w.rhs == Fraction(-8, 3)
    assert check_one("I-21c", 0, 2, 1).holds


def test_check_one_symbolic():
    assert check_one("I-09", 3, 2, "symbolic").holds
    assert check_one("I-10", 3, 2, LAMBDA).holds


def test_check_one_errors():
    with pytest.raises(UnknownIdentity):
        check_one("I-99", 1, 1)
    with pytest.raises(ValueError):
        check_one("I-29c", 2, 1, 1)
    numeric_only = [i for i in CATALOG.values() if i.lam_mode == NUMERIC_ONLY]
    assert numeric_only
    with pytest.raises(ValueError):
        check_one(numeric_only[0].id, 2, 2, "symbolic")


def test_y2_closed_forms():
    # printed list is twice the true value for n >= 1
    for k in (1, 2, 3):
        for n in range(1, 7):
            assert y2_corrected_closed_form(n, k) == y2(n, k, 1)
    assert y2_printed_closed_form(2, 1) == 2 * y2(2, 1, 1)


@pytest.mark.parametrize("d", range(1, 6))
def test_binomial_as_power_poly(d):
    m = binomial_as_power_poly(d)
    # the power j^0 has coefficient 0 and is not listed
    for j in range(10):
        assert sum(c * j ** (d - v) for v, c in enumerate(m)) == comb(j, d)


def test_report_expectations(small_report):
    assert small_report.all_expectations_met
    for res in small_report.results:
        if res.identity.expectation == HOLDS:
            assert res.status == "pass", res.identity.id
            assert res.counterexample is None
        else:
            assert res.status == "paper-discrepancy confirmed", res.identity.id
            assert res.counterexample is not None


def test_i21_first_counterexample(small_report):
    cx = small_report["I-21"].counterexample
    assert (cx["n"], cx["k"], cx["lambda"]) == (0, 2, "1")
    assert cx["lhs"] == "0" and cx["rhs"] == "-8/3"
    assert small_report["I-21c"].status == "pass"


def test_report_is_deterministic(small_report):
    again = run_suite(4, 4, lambdas=(1, -1, 2, Fraction(1, 2)), symbolic=True)
    assert again.to_json() == small_report.to_json()
    assert again.to_text() == small_report.to_text()


def test_report_json_shape(small_report):
    obj = json.loads(small_report.to_json())
    assert obj["all_expectations_met"] is True
    entry = next(e for e in obj["identities"] if e["id"] == "I-25")
    assert entry["status"] == "pass"
    assert entry["cases_run"] == entry["cases_passed"] > 0
    assert obj["parameters"]["lambdas"] == ["1", "-1", "2", "1/2"]


def test_report_text(small_report):
    text = small_report.to_text()
    assert "I-21 " in text and "paper-discrepancy confirmed" in text
    assert text.splitlines()[-1] == "all expectations met"


def test_subset_runs_corrected_variant():
    report = run_suite(3, 3, ids=["I-21"])
    assert [r.identity.id for r in report.results] == ["I-21", "I-21c"]
    assert report.all_expectations_met


def test_bounds_validated():
    with pytest.raises(ValueError):
        run_suite(1, 4)


def test_numeric_only_skips_symbolic():
    report = run_suite(2, 2, lambdas=(2,), symbolic=True, ids=["I-29b"])
    assert report["I-29b"].run > 0
    assert report["I-29b"].counterexample["lambda"] == "2"
