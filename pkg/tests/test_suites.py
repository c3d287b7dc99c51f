import pytest

from hecke_lab.suites import MODULES, run_check, run_suite, selectors, suite_checks

CHECKS = [(s, name, fn) for s in MODULES for name, fn in suite_checks(s)]


@pytest.mark.parametrize("suite,name,fn", CHECKS, ids=[f"{s}: {n}" for s, n, _ in CHECKS])
def test_property_check(suite, name, fn):
    res = run_check(suite, name, fn)
    print(res.line())
    assert res.cases > 0
    failed = len(res.failures)
    assert failed == 0, f"{failed} failures, first: {res.failures[0]}"


def test_every_module_has_a_suite():
    assert all(suite_checks(s) for s in MODULES)
    assert set(selectors()) == set(MODULES) | {"acceptance"}


def test_seeded_runs_repeat():
    a = [(r.name, r.cases, r.failures) for r in run_suite("parameter-bridge", seed=3)]
    b = [(r.name, r.cases, r.failures) for r in run_suite("parameter-bridge", seed=3)]
    assert a == b


def test_unknown_selector():
    with pytest.raises(KeyError):
        run_suite("nothing")
