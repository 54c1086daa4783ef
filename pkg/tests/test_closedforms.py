from __future__ import annotations

import math

import pytest

from tensorwalk import fixtures as fx
from tensorwalk.closedforms import (CLOSED_FORM_NAMES, asymptotic_constant, asymptotic_estimate,
                                    baxter_gf, baxter_reference, ratio, t3_reference,
                                    verify_closed_form)


@pytest.mark.parametrize("name", ["t3_hypergeometric_simple", "t3_hypergeometric_integral",
                                  "t3_weierstrass", "baxter_gf", "baxter_gf_oeis"])
def test_closed_forms_match(name):
    rep = verify_closed_form(name, 30)
    assert rep.ok, rep.to_dict()


def test_baxter_reference_is_offset():
    assert baxter_reference(9) == [0] + list(fx.QUADRANT_ROWS["A001181"])


def test_baxter_series_has_zero_constant_term():
    series, valuation = baxter_gf(20)
    assert valuation == 3
    assert series[0] == 0 and series[1] == 1 and series[4] == 22


def test_printed_factor_reading_fails_valuation():
    rep = verify_closed_form("baxter_gf_printed", 20)
    assert not rep.ok
    assert "valuation 1" in rep.notes[0]


def test_mismatch_is_reported_with_index():
    ref = t3_reference(20)
    ref[7] += 1
    rep = verify_closed_form("t3_hypergeometric_simple", 20, ref)
    assert not rep.ok and rep.mismatch == 7
    assert rep.expected == str(ref[7])


def test_order_guard_and_names():
    with pytest.raises(ValueError):
        verify_closed_form("baxter_gf", 5)
    with pytest.raises(KeyError):
        verify_closed_form("nope", 20)
    assert set(CLOSED_FORM_NAMES) >= {"t3_hypergeometric_simple", "baxter_gf"}


def test_asymptotic_constant():
    assert asymptotic_constant() == pytest.approx(2627.56, abs=0.01)


def test_ratio_uses_logarithms_on_huge_integers():
    big = 7**3000
    assert ratio(big, 3000) == pytest.approx(3000.0**7, rel=1e-9)


def test_richardson_estimate_converges():
    rep = asymptotic_estimate([200, 400])
    assert rep.monotone
    assert rep.deviations[400] < rep.deviations[200] < 0.01
    assert rep.extrapolated[400] == pytest.approx(2 * rep.ratios[800] - rep.ratios[400])
    with pytest.raises(ValueError):
        asymptotic_estimate([50])
