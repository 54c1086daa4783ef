from __future__ import annotations

import pytest

from tensorwalk.sequences import ENGINES, SEQUENCE_NAMES, UnknownSequence, compute, resolve


def test_aliases():
    assert resolve("A001181") == "S2"
    assert resolve("a059710") == "T3"
    with pytest.raises(UnknownSequence):
        resolve("A000001")


@pytest.mark.parametrize("name", SEQUENCE_NAMES)
def test_engines_agree(name):
    results = []
    for engine in ENGINES:
        try:
            results.append(compute(name, 13, engine))
        except UnknownSequence:
            continue
    assert len(results) >= 2
    assert all(r == results[0] for r in results)


def test_examples():
    assert compute("catalan3d", 5) == [1, 1, 5, 42, 462]
    assert compute("c2spin", 5) == [1, 1, 3, 14, 84]
    assert compute("T3", 0) == []
    with pytest.raises(ValueError):
        compute("T3", 3, "magic")
