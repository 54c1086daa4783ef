"""Acceptance criteria 1-12, one test each; every test prints a PASS/FAIL line."""
from __future__ import annotations

import json

import pytest

from tensorwalk.checks import CHECKS, CRITERIA, _run

ORDER = sorted(CHECKS, key=CRITERIA.get)


@pytest.mark.parametrize("name", ORDER, ids=[f"criterion_{CRITERIA[n]:02d}_{n}" for n in ORDER])
def test_criterion(name, capsys):
    rep = _run(name, corrupt=False)
    line = f"criterion {rep.criterion:2d} {name:16s} {'PASS' if rep.ok else 'FAIL'}"
    extra = {k: v for k, v in rep.details.items() if rep.ok is False or k in
             ("relative_deviation", "estimate", "flagged_table_cells", "forbid_fixed (not gated)")}
    if extra:
        line += " " + json.dumps(extra, default=str)
    with capsys.disabled():
        print("\n" + line)
    assert rep.ok, rep.to_dict()
