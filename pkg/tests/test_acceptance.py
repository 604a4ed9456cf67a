"""Acceptance checks, one per criterion.  Run with ``pytest tests/test_acceptance.py -s``
to see the pass/fail line for each."""

from __future__ import annotations

import pytest

from homlie.suite import CRITERIA, run_criterion

_cache: dict = {}


def result(number: int):
    if number not in _cache:
        _cache[number] = run_criterion(number, seed=0)
    return _cache[number]


@pytest.mark.parametrize("number", [k for k, _, _ in CRITERIA], ids=[f"c{k:02d}" for k, _, _ in CRITERIA])
def test_criterion(number):
    r = result(number)
    print("\n" + r.line())
    for msg in r.failures:
        print("    " + msg)
    assert r.passed, r.failures


def test_trace_discrepancies_are_frozen():
    r = result(3)
    assert [(d["type"], d["i"], d["difference"]) for d in r.discrepancies] == [("E8", 5, "-20*c^3 + 20*c^4")]


def test_seed_independence_of_deterministic_criteria():
    for number in (1, 3, 5):
        again = run_criterion(number, seed=11)
        assert again.passed and again.discrepancies == result(number).discrepancies
