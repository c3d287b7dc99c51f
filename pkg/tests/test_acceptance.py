"""Acceptance criteria, one test each.

Every criterion is an exact statement (zero mismatches, exact equality of
scalars), so the only tolerance is the wall-clock budget listed here.  Each
test prints one PASS/FAIL line; the lines are repeated in the terminal summary.
"""

import pytest

from hecke_lab.suites import criteria, run_criterion

BUDGET = {1: 60, 2: 60, 3: 120, 4: 60, 5: 1, 6: 300, 7: 300, 8: 300, 9: 30, 10: 300, 11: 60}

LINES = {}


def test_all_criteria_registered():
    assert len(criteria()) == len(BUDGET) == 11


@pytest.mark.parametrize("number", sorted(BUDGET))
def test_criterion(number):
    res = run_criterion(number)
    budget = BUDGET[number]
    line = f"criterion {res.line()} [tolerance: exact; budget {budget} s]"
    LINES[number] = line
    print(line)
    for f in res.failures[:5]:
        print("    " + f)
    assert res.cases > 0
    failed = len(res.failures)
    assert failed == 0, f"{failed} failures, first: {res.failures[0]}"
    assert res.seconds < budget
