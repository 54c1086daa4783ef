from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tensorwalk import fixtures as fx
from tensorwalk.closedforms import t3_reference
from tensorwalk.holonomic import (DiffOp, InsufficientData, PRecurrence, RecurrenceError,
                                  ShiftOperator, check_recurrence, diffop_apply, diffop_mul,
                                  guess_recurrence, homogenize, ode_to_recurrence,
                                  shift_right_divide, unroll)
from tensorwalk.polys import IntPoly, RationalFunction
from tensorwalk.sequences import compute
from tensorwalk.series import PowerSeries
from tensorwalk.transforms import series_of

n = IntPoly.x()
t = IntPoly.x()


def test_unroll_t3_matches_figure():
    assert unroll(fx.paper_operator("T3_rec"), (1, 0, 1), 9) == list(fx.OCTANT_ROWS["A059710"])


def test_unroll_errors():
    rec = PRecurrence([IntPoly([1]), 2 * n])
    # 2n a(n+1) = -a(n) cannot be solved at n = 0
    with pytest.raises(RecurrenceError):
        unroll(rec, [1], 3)
    rec = PRecurrence([IntPoly([1]), IntPoly([-3])])
    with pytest.raises(RecurrenceError):
        unroll(rec, [1], 3)
    assert unroll(rec, [1], 3, exact=False) == [1, Fraction(1, 3), Fraction(1, 9), Fraction(1, 27)]


def test_check_recurrence_reports_first_failure():
    rec = PRecurrence([IntPoly([1]), IntPoly([-1])])
    assert check_recurrence(rec, [2, 2, 2, 2]) is None
    assert check_recurrence(rec, [2, 2, 3, 3]) == 1


def test_normalization_and_equality():
    rec = fx.paper_operator("T3_rec")
    scaled = PRecurrence([-6 * p for p in rec.coeffs])
    assert scaled == rec
    assert scaled.normalized().coeffs[-1].leading() > 0
    assert PRecurrence.from_json(rec.to_json()) == rec


def test_guess_recovers_t3_recurrence():
    assert guess_recurrence(t3_reference(39), 3, 2) == fx.paper_operator("T3_rec")


def test_guess_constant_sequence():
    assert guess_recurrence([1] * 20, 1, 0) == PRecurrence([IntPoly([1]), IntPoly([-1])])


def test_guess_needs_enough_terms():
    with pytest.raises(InsufficientData):
        guess_recurrence([1, 2, 3], 3, 2)


def test_guess_baxter_order_two():
    s2 = compute("S2", 40, "rec")
    rec = guess_recurrence(s2, 2, 3)
    assert rec is not None and rec.order == 2
    assert check_recurrence(rec, compute("S2", 60, "walk")) is None


@given(st.integers(1, 4), st.lists(st.integers(-5, 5), min_size=1, max_size=4))
def test_guess_finds_geometric_recurrences(c, initial):
    a = [initial[0] or 1]
    for _ in range(25):
        a.append(c * a[-1])
    rec = guess_recurrence(a, 1, 0)
    assert rec == PRecurrence([IntPoly([c]), IntPoly([-1])])


def test_operator_factorizations():
    op = fx.paper_operator
    assert diffop_mul(op("Q"), op("L3")) == op("L6")
    assert diffop_mul(op("L2"), op("L1")) == op("L3")
    assert diffop_mul(op("L3"), op("Q")) != op("L6")


def test_leibniz_rule():
    d = DiffOp([0, 1])
    mult_t = DiffOp([t])
    # D t = t D + 1
    assert diffop_mul(d, mult_t) == DiffOp([1, t])


def test_l3_annihilates_t3():
    res = diffop_apply(fx.paper_operator("L3"), series_of(t3_reference(60)))
    assert res.order == 57
    assert res.is_zero()


def test_e3_ode_inhomogeneous():
    e3 = compute("E3", 41, "rec")
    res = diffop_apply(fx.paper_operator("E3_ode"), series_of(e3))
    assert res.coeffs == [fx.E3_ODE_CONSTANT] + [0] * res.order
    assert diffop_apply(fx.paper_operator("E3_ode_homogeneous"), series_of(e3)).is_zero()
    assert homogenize(fx.paper_operator("E3_ode"), 0) == fx.paper_operator("E3_ode")


def test_s3_ode():
    s3 = compute("S3", 41, "rec")
    assert diffop_apply(fx.paper_operator("S3_ode"), series_of(s3)).is_zero()


def test_apply_rejects_pole_at_zero():
    with pytest.raises(ValueError):
        diffop_apply(DiffOp([RationalFunction(1, t)]), PowerSeries([1, 1], 3))


def test_ode_to_recurrence():
    # D - 1 gives (n + 1) a(n + 1) - a(n)
    assert ode_to_recurrence(DiffOp([-1, 1])) == PRecurrence([IntPoly([-1]), n + 1])
    rec = ode_to_recurrence(fx.paper_operator("L3"))
    assert check_recurrence(rec, t3_reference(60)) is None
    t3rec = fx.paper_operator("T3_rec")
    assert rec == PRecurrence([(n + 3) * p for p in t3rec.coeffs])
    with pytest.raises(ValueError):
        ode_to_recurrence(fx.paper_operator("L1"))


def test_shift_right_division():
    q = shift_right_divide(fx.uniform_rec(3), fx.paper_operator("S3_rec"))
    assert q is not None and q.order == 2
    assert q * ShiftOperator.from_recurrence(fx.paper_operator("S3_rec")) == \
        ShiftOperator.from_recurrence(fx.uniform_rec(3))
    assert shift_right_divide(fx.paper_operator("T3_rec"), fx.paper_operator("E3_rec")) is None
    one = shift_right_divide(fx.paper_operator("T3_rec"), fx.paper_operator("T3_rec"))
    assert one.coeffs == (RationalFunction(1),)


def test_diffop_json_round_trip():
    op = fx.paper_operator("L2")
    assert DiffOp.from_json(op.to_json()) == op
