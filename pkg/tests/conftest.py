from __future__ import annotations

import os

import pytest

from negord.egf import TRUNC_ENV

# criterion number -> (passed, description), filled by test_acceptance
ACCEPTANCE_LINES: dict[int, tuple[bool, str]] = {}


@pytest.fixture(autouse=True)
def _default_truncation(monkeypatch):
    # tests that need an override set it themselves
    if TRUNC_ENV in os.environ:
        monkeypatch.delenv(TRUNC_ENV)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        ok, text = ACCEPTANCE_LINES[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {text}")
