from __future__ import annotations

from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from tensorwalk import fixtures as fx
from tensorwalk.transforms import bt_power, bt_series, series_of

seqs = st.lists(st.integers(-50, 50), min_size=1, max_size=12)


def test_figure_rows_are_linked():
    assert bt_power(fx.OCTANT_ROWS["A059710"], 1) == list(fx.OCTANT_ROWS["A108307"])
    assert bt_power(fx.OCTANT_ROWS["A108307"], 1) == list(fx.OCTANT_ROWS["A108304"])
    for a, b in zip(fx.QUADRANT_TAGS, fx.QUADRANT_TAGS[1:]):
        assert bt_power(fx.QUADRANT_ROWS[a], 1) == list(fx.QUADRANT_ROWS[b])


def test_small_cases():
    assert bt_power([], 3) == []
    assert bt_power([1, 0, 0], 2) == [1, 2, 4]
    assert bt_power([5], -7) == [5]


@given(seqs, st.integers(-3, 3), st.integers(-3, 3))
def test_powers_compose(a, j, k):
    assert bt_power(bt_power(a, j), k) == bt_power(a, j + k)


@given(seqs)
def test_inverse(a):
    assert bt_power(bt_power(a, 1), -1) == a
    assert bt_power(a, 0) == a


@given(seqs, st.integers(-3, 3))
def test_series_form_agrees(a, k):
    g = series_of(a)
    assert bt_series(g, k).coeffs == [Fraction(x) for x in bt_power(a, k)]
