"""Hypergeometric closed forms for the T3 and Baxter generating functions, and T3 asymptotics.

Each closed form is assembled as a truncated rational power series and compared
coefficient by coefficient with a recurrence-generated reference sequence.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import fixtures as fx
from .holonomic import unroll
from .polys import IntPoly, RationalFunction
from .series import (PowerSeries, SeriesError, hypergeom_2f1, poly_series,
                     ps_rational_power, rf_to_series)

CLOSED_FORM_NAMES = ("t3_hypergeometric_simple", "t3_hypergeometric_integral",
                     "t3_weierstrass", "baxter_gf", "baxter_gf_oeis", "baxter_gf_printed")

t = IntPoly.x()


@dataclass
class ClosedFormReport:
    name: str
    order: int
    ok: bool
    mismatch: int | None = None
    expected: str | None = None
    got: str | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}


def _rf(f: RationalFunction, order: int) -> PowerSeries:
    return rf_to_series(f.num, f.den, order)


def _require_valuation(s: PowerSeries, k: int, what: str) -> int:
    v = s.valuation()
    if v is not None and v < k:
        raise SeriesError(f"{what} has valuation {v}, expected at least {k}")
    return v


def t3_reference(order: int) -> list[int]:
    return unroll(fx.paper_operator("T3_rec"), fx.INITIAL_TERMS["T3_rec"], order)


def baxter_reference(order: int) -> list[int]:
    """Baxter numbers B(0..order) with B(0) = 0, so B(n) = S_2(n - 1)."""
    return [0] + unroll(fx.uniform_rec(2), fx.QUADRANT_ROWS["A001181"][:4], order - 1)


def t3_hypergeometric_simple(order: int) -> tuple[PowerSeries, int]:
    """[R1 2F1(1/3,2/3;2;phi) + R2 2F1(2/3,4/3;3;phi) + 5P] / (30 t^5)."""
    m = order + 5
    phi = _rf(fx.paper_rational("phi"), m)
    numer = (_rf(fx.paper_rational("R1"), m) * hypergeom_2f1(Fraction(1, 3), Fraction(2, 3), 2, phi)
             + _rf(fx.paper_rational("R2"), m) * hypergeom_2f1(Fraction(2, 3), Fraction(4, 3), 3, phi)
             + poly_series(5 * fx.P, m))
    v = _require_valuation(numer, 5, "numerator")
    return numer.div_tpower(5) / 30, v


def t3_hypergeometric_integral(order: int) -> tuple[PowerSeries, int]:
    """P/(30 t^5) * integral of S/(P^2 (t-1)^2) [U F(1/3,2/3;1) + V/(1-t)^3 F(4/3,5/3;2)]."""
    m = order + 5
    phi = _rf(fx.paper_rational("phi"), m)
    bracket = (poly_series(fx.U, m) * hypergeom_2f1(Fraction(1, 3), Fraction(2, 3), 1, phi)
               + rf_to_series(fx.V, (1 - t) ** 3, m)
               * hypergeom_2f1(Fraction(4, 3), Fraction(5, 3), 2, phi))
    integrand = rf_to_series(fx.S, fx.P * fx.P * (t - 1) ** 2, m) * bracket
    numer = poly_series(fx.P, m) * integrand.integrate().truncate(m)
    v = _require_valuation(numer, 5, "numerator")
    return numer.div_tpower(5) / 30, v


def weierstrass_h(order: int) -> PowerSeries:
    """g2^(-1/4) * 2F1(1/12, 5/12; 1; 1728/J)."""
    g2 = poly_series(fx.G2_INVARIANT, order)
    arg = rf_to_series(1728 * fx.J_DEN, fx.J_NUM, order)
    return ps_rational_power(g2, Fraction(-1, 4)) * hypergeom_2f1(Fraction(1, 12), Fraction(5, 12), 1, arg)


def t3_weierstrass(order: int) -> tuple[PowerSeries, int]:
    m = order + 5
    h = weierstrass_h(m + 1)
    hp = h.derivative()
    h = h.truncate(m)
    bracket = (poly_series((155 * t**2 + 182 * t + 59) * (11 * t + 1), m) * h
               + poly_series((341 * t**3 + 507 * t**2 + 231 * t + 1) * (5 * t + 1), m) * hp)
    numer = poly_series(60 * fx.P, m) + poly_series((7 * t - 1) * (2 * t + 1) * (t + 1), m) * bracket
    v = _require_valuation(numer, 5, "numerator")
    return numer.div_tpower(5) / 360, v


def baxter_gf(order: int, printed_factor: bool = False) -> tuple[PowerSeries, int]:
    """Sum of B(n) x^n from H = 2F1(1/3, 2/3; 1; 27x^2/(1-2x)^3) and H'.

    The H' coefficient is (1+20x-8x^2)(1-2x) / (12(x+1)).  With
    ``printed_factor`` the 12 multiplies instead of divides, which does not
    give the Baxter numbers (kept so the failure can be reproduced).
    """
    m = order + 2
    arg = _rf(fx.paper_rational("baxter_arg"), m + 1)
    h = hypergeom_2f1(Fraction(1, 3), Fraction(2, 3), 1, arg)
    hp = h.derivative()
    h = h.truncate(m)
    x = t
    c_num = (1 + 20 * x - 8 * x**2) * (1 - 2 * x)
    if printed_factor:
        coef = rf_to_series(12 * c_num, x + 1, m)
    else:
        coef = rf_to_series(c_num, 12 * (x + 1), m)
    numer = (rf_to_series((x + 1) ** 2 * (1 - 8 * x), (1 - 2 * x) ** 2, m) * (h + coef * hp)
             - poly_series(3 * x**2 - x + 1, m))
    v = _require_valuation(numer, 2, "numerator")
    return numer.div_tpower(2) / 3, v


def baxter_gf_oeis(order: int) -> tuple[PowerSeries, int]:
    """-1 + [(x-1) + (1-2x) F(-2/3,2/3;1) - (8x^3-11x^2-x)/(1-2x)^2 F(1/3,2/3;2)] / (3x^2)."""
    m = order + 2
    x = t
    arg = _rf(fx.paper_rational("baxter_arg"), m)
    numer = (poly_series(x - 1, m)
             + poly_series(1 - 2 * x, m) * hypergeom_2f1(Fraction(-2, 3), Fraction(2, 3), 1, arg)
             - rf_to_series(8 * x**3 - 11 * x**2 - x, (1 - 2 * x) ** 2, m)
             * hypergeom_2f1(Fraction(1, 3), Fraction(2, 3), 2, arg))
    v = _require_valuation(numer, 2, "numerator")
    return numer.div_tpower(2) / 3 - 1, v


_BUILDERS = {
    "t3_hypergeometric_simple": (t3_hypergeometric_simple, t3_reference, 5),
    "t3_hypergeometric_integral": (t3_hypergeometric_integral, t3_reference, 5),
    "t3_weierstrass": (t3_weierstrass, t3_reference, 5),
    "baxter_gf": (baxter_gf, baxter_reference, 2),
    "baxter_gf_oeis": (baxter_gf_oeis, baxter_reference, 2),
    "baxter_gf_printed": (lambda order: baxter_gf(order, printed_factor=True), baxter_reference, 2),
}


def verify_closed_form(name: str, order: int, reference: list | None = None) -> ClosedFormReport:
    if name not in _BUILDERS:
        raise KeyError(f"unknown closed form {name!r}")
    if order < 10:
        raise ValueError("order must be at least 10")
    build, ref_fn, shift = _BUILDERS[name]
    report = ClosedFormReport(name, order, True)
    try:
        series, v = build(order)
    except SeriesError as exc:
        report.ok = False
        report.notes.append(str(exc))
        return report
    ref = ref_fn(order) if reference is None else list(reference)
    report.notes.append(f"numerator valuation {v} (divided by t^{shift})")
    for i in range(order + 1):
        if series[i] != ref[i]:
            report.ok = False
            report.mismatch, report.expected, report.got = i, str(ref[i]), str(series[i])
            break
    return report


# -- asymptotics ------------------------------------------------------------------

def asymptotic_constant() -> float:
    return fx.ASYMPTOTIC_NUMERATOR / fx.ASYMPTOTIC_DENOMINATOR * math.sqrt(3) / math.pi


@dataclass
class AsymptoticReport:
    samples: list[int]
    ratios: dict[int, float]
    extrapolated: dict[int, float]
    target: float
    deviations: dict[int, float]
    monotone: bool

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "ratios": {str(k): v for k, v in self.ratios.items()},
            "richardson": {str(k): v for k, v in self.extrapolated.items()},
            "relative_deviation": {str(k): v for k, v in self.deviations.items()},
            "monotone": self.monotone,
        }


def ratio(term: int, n: int) -> float:
    """term * n^7 / 7^n evaluated through logarithms of the exact integer."""
    return math.exp(math.log(term) + 7 * math.log(n) - n * math.log(7))


def asymptotic_estimate(samples: list[int], terms: list[int] | None = None) -> AsymptoticReport:
    """r_n = T3(n) n^7 / 7^n at each sample n, and Richardson estimates 2 r_(2n) - r_n."""
    samples = sorted(set(samples))
    if not samples or samples[0] < 100:
        raise ValueError("samples must be at least 100")
    top = 2 * samples[-1]
    if terms is None:
        terms = t3_reference(top)
    needed = sorted({*samples, *(2 * s for s in samples)})
    r = {n: ratio(terms[n], n) for n in needed}
    c = asymptotic_constant()
    extrapolated = {n: 2 * r[2 * n] - r[n] for n in samples}
    deviations = {n: abs(v - c) / c for n, v in extrapolated.items()}
    seq = [r[n] for n in needed]
    diffs = [b - a for a, b in zip(seq, seq[1:])]
    monotone = all(d > 0 for d in diffs) or all(d < 0 for d in diffs)
    return AsymptoticReport(samples, {n: r[n] for n in needed}, extrapolated, c, deviations, monotone)
