from __future__ import annotations

import pytest

from tensorwalk.checks import CHECKS, GROUPS, check_all, select


def test_only_filters_and_sorts():
    assert select("closedform") == ["asymptotics", "closed_forms"]
    assert select(["ct", "octant_tables"]) == ["ct_engines", "octant_tables"]
    assert select(None) == sorted(CHECKS)
    with pytest.raises(KeyError):
        select("nope")


def test_criteria_numbering():
    reports = check_all(["ct", "walks"])
    assert [r.name for r in reports] == sorted(r.name for r in reports)
    assert {r.name: r.criterion for r in reports} == {
        "ct_engines": 3, "examples": 12, "octant_tables": 1, "quadrant_tables": 2}
    assert all(r.status == "pass" for r in reports)


@pytest.mark.parametrize("name", ["octant_tables", "quadrant_tables", "ct_engines",
                                  "t3_recurrence", "recurrences", "operators", "examples",
                                  "rect_tableaux", "branching"])
def test_fault_injection_fails_exactly_one_check(name):
    group = next(g for g, members in GROUPS.items() if name in members)
    reports = check_all([group], corrupt=name)
    failed = [r.name for r in reports if not r.ok]
    assert failed == [name]
    bad = next(r for r in reports if r.name == name)
    assert bad.details


def test_corrupt_requires_known_check():
    with pytest.raises(KeyError):
        check_all(["ct"], corrupt="nope")
