from __future__ import annotations

from fractions import Fraction

import pytest

from negord import reference_tables as ref
from negord.exact import LAMBDA
from negord.families import euler_first_neg, y1


@pytest.mark.parametrize("name", sorted(ref.TABLES))
def test_every_mismatch_is_ledgered(name):
    for m in ref.compare_table(name):
        assert m.known, (name, m.n, m.k, m.printed, m.computed)
        assert m.note


@pytest.mark.parametrize("name", ["y1-lambda1", "y2-lambda1"])
def test_numeric_tables_exact(name):
    assert ref.compare_table(name) == []


def test_ledger_entries_are_real_mismatches():
    # a ledger entry that matches the computed value would be stale
    found = {(name, m.n, m.k) for name in ref.TABLES for m in ref.compare_table(name)}
    assert set(ref.KNOWN_TYPOS) == found


def test_symbolic_typos_are_the_documented_cells():
    found = {(m.n, m.k) for m in ref.compare_table("y1-symbolic")}
    assert {(4, 3), (5, 3)} <= found
    assert ref.Y1_SYMBOLIC[4, 3] - y1(4, 3, LAMBDA) == 8 * LAMBDA - 8 * LAMBDA ** 2


def test_e_neg_row_zero_flagged():
    flagged = {k for (table, n, k) in ref.KNOWN_TYPOS if table == "e-neg" and n == 0}
    assert flagged
    assert all(euler_first_neg(0, k, 1) == 1 for k in range(10))


def test_printed_cell_lookup():
    assert ref.printed_cell("y1", 4, 4, Fraction(1)) == ("y1-lambda1", Fraction(85, 3))
    assert ref.printed_cell("y1", 4, 4, Fraction(2)) is None
