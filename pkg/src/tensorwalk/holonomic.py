"""P-recurrences and linear differential operators with exact coefficients.

A recurrence ``sum_j p_j(n) a(n+j) = 0`` is a list of integer polynomials in
``n``; a differential operator ``sum_i c_i(t) D^i`` is a list of rational
functions in ``t``.  Shift operators with rational coefficients appear only as
quotients in :func:`shift_right_divide`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

from .polys import IntPoly, RationalFunction, poly_divexact, poly_gcd
from .series import PowerSeries, SeriesError, rf_to_series


class RecurrenceError(ValueError):
    pass


class InsufficientData(ValueError):
    pass


# -- recurrences -------------------------------------------------------------

class PRecurrence:
    """sum_j coeffs[j](n) * a(n + j) = 0 for n >= 0."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [IntPoly.coerce(p) for p in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        if not cs:
            raise RecurrenceError("recurrence has no nonzero coefficient")
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        return max(p.degree for p in self.coeffs)

    def normalized(self) -> "PRecurrence":
        g = reduce(gcd, (p.content() for p in self.coeffs), 0)
        if self.coeffs[-1].leading() < 0:
            g = -g
        return PRecurrence([p.divexact(g) for p in self.coeffs])

    def __eq__(self, other) -> bool:
        if not isinstance(other, PRecurrence):
            return NotImplemented
        return self.normalized().coeffs == other.normalized().coeffs

    def __hash__(self) -> int:
        return hash(self.normalized().coeffs)

    def __repr__(self) -> str:
        return "PRecurrence(" + ", ".join(f"[{p}]" for p in self.coeffs) + ")"

    def __str__(self) -> str:
        parts = [f"({p})*a(n+{j})" for j, p in enumerate(self.coeffs) if not p.is_zero()]
        return " + ".join(parts) + " = 0"

    def residual(self, a: Sequence, n: int):
        return sum(p(n) * a[n + j] for j, p in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"coeffs": [p.to_json() for p in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "PRecurrence":
        data = json.loads(data) if isinstance(data, str) else data
        return cls([IntPoly.from_json(p) for p in data["coeffs"]])


def unroll(rec: PRecurrence, initial: Sequence, n_max: int, exact: bool = True) -> list:
    """Extend ``initial`` to indices 0..n_max.

    With ``exact=True`` the terms stay integers and an inexact division raises;
    otherwise terms are Fractions.
    """
    r = rec.order
    if len(initial) < r:
        raise RecurrenceError(f"need {r} initial terms, got {len(initial)}")
    a = [int(x) if exact else Fraction(x) for x in initial[: n_max + 1]]
    lead = rec.coeffs[-1]
    lower = rec.coeffs[:-1]
    while len(a) <= n_max:
        n = len(a) - r
        d = lead(n)
        if d == 0:
            raise RecurrenceError(f"leading coefficient vanishes at n = {n}")
        s = -sum(p(n) * a[n + j] for j, p in enumerate(lower) if p.coeffs)
        if exact:
            q, rem = divmod(s, d)
            if rem:
                raise RecurrenceError(f"inexact division computing term {n + r}")
            a.append(q)
        else:
            a.append(Fraction(s) / d)
    return a


def check_recurrence(rec: PRecurrence, a: Sequence) -> int | None:
    """Smallest n at which the recurrence fails on ``a``, or None if it holds throughout."""
    r = rec.order
    if len(a) <= r:
        raise InsufficientData(f"need more than {r} terms")
    for n in range(len(a) - r):
        if rec.residual(a, n) != 0:
            return n
    return None


def _nullspace(rows: list[list[int]], ncols: int) -> list[list[Fraction]]:
    """Basis of the rational right nullspace via reduced row echelon form."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fcol]
        basis.append(v)
    return basis


def _integral_vector(v: Sequence[Fraction]) -> list[int]:
    den = reduce(lambda x, y: x * y // gcd(x, y), (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, ints, 0)
    return [x // g for x in ints]


def guess_recurrence(a: Sequence[int], max_order: int, max_degree: int,
                     margin: int = 10) -> PRecurrence | None:
    """Minimal (by order, then degree) recurrence fitting every term of ``a``.

    A candidate shape is only tried when the data supply at least ``margin``
    more equations than unknowns.
    """
    if len(a) < (max_order + 1) * (max_degree + 1) + margin:
        raise InsufficientData(
            f"{len(a)} terms is too few for order {max_order}, degree {max_degree}")
    for r in range(1, max_order + 1):
        for d in range(max_degree + 1):
            unknowns = (r + 1) * (d + 1)
            neq = len(a) - r
            if neq < unknowns + margin:
                continue
            rows = []
            for n in range(neq):
                powers = [n ** e for e in range(d + 1)]
                rows.append([pw * a[n + j] for j in range(r + 1) for pw in powers])
            basis = _nullspace(rows, unknowns)
            if not basis:
                continue
            vec = _integral_vector(basis[0])
            coeffs = [IntPoly(vec[j * (d + 1):(j + 1) * (d + 1)]) for j in range(r + 1)]
            if coeffs[-1].is_zero() or coeffs[0].is_zero():
                # a shifted lower-order relation; the smaller order would have caught it
                continue
            return PRecurrence(coeffs).normalized()
    return None


# -- differential operators ---------------------------------------------------

class DiffOp:
    """sum_i coeffs[i](t) * D^i with rational-function coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [RationalFunction.coerce(c) for c in coeffs]
        while len(cs) > 1 and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def d(cls) -> "DiffOp":
        return cls([0, 1])

    @classmethod
    def mult(cls, f) -> "DiffOp":
        return cls([f])

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return "DiffOp(" + ", ".join(repr(c) for c in self.coeffs) + ")"

    def __add__(self, other: "DiffOp") -> "DiffOp":
        n = max(len(self.coeffs), len(other.coeffs))
        zero = RationalFunction(0)
        a = list(self.coeffs) + [zero] * (n - len(self.coeffs))
        b = list(other.coeffs) + [zero] * (n - len(other.coeffs))
        return DiffOp([x + y for x, y in zip(a, b)])

    def __neg__(self) -> "DiffOp":
        return DiffOp([-c for c in self.coeffs])

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        return self + (-other)

    def __mul__(self, other: "DiffOp") -> "DiffOp":
        return diffop_mul(self, other)

    def monic(self) -> "DiffOp":
        lead = self.coeffs[-1]
        return DiffOp([c / lead for c in self.coeffs])

    def cleared(self) -> "DiffOp":
        """Left-multiply by a rational function so all coefficients are coprime integer polynomials."""
        den = IntPoly((1,))
        for c in self.coeffs:
            g = poly_gcd(den, c.den)
            den = poly_divexact(den * c.den, g)
        polys = [(c * den).as_poly() for c in self.coeffs]
        g = reduce(gcd, (p.content() for p in polys), 0)
        if polys[-1].leading() < 0:
            g = -g
        return DiffOp([p.divexact(g) for p in polys])

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.coeffs)

    def to_json(self) -> dict:
        return {"coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "DiffOp":
        data = json.loads(data) if isinstance(data, str) else data
        return cls([RationalFunction.from_json(c) for c in data["coeffs"]])


def diffop_mul(a: DiffOp, b: DiffOp) -> DiffOp:
    """Composition a∘b using D^i f = sum_l C(i, l) f^(l) D^(i-l)."""
    out = [RationalFunction(0)] * (a.order + b.order + 1)
    # derivatives of b's coefficients, computed lazily up to a's order
    derivs = [list(b.coeffs)]
    for _ in range(a.order):
        derivs.append([c.derivative() for c in derivs[-1]])
    for i, ai in enumerate(a.coeffs):
        if ai.is_zero():
            continue
        binom = 1
        for l in range(i + 1):
            for j, bj in enumerate(derivs[l]):
                if not bj.is_zero():
                    out[i - l + j] = out[i - l + j] + ai * bj * binom
            binom = binom * (i - l) // (l + 1)
    return DiffOp(out)


def diffop_apply(op: DiffOp, g: PowerSeries) -> PowerSeries:
    """op(g) as a series known to order g.order - op.order."""
    order = g.order - op.order
    if order < 0:
        raise SeriesError("series too short for the operator order")
    result = PowerSeries([0], order)
    deriv = g
    for c in op.coeffs:
        if not c.is_zero():
            if c.den(0) == 0:
                raise SeriesError(f"coefficient {c} is not expandable at t = 0")
            cs = rf_to_series(c.num, c.den, order)
            result = result + cs * deriv.truncate(order)
        deriv = deriv.derivative()
    return result


def homogenize(op: DiffOp, constant) -> DiffOp:
    """Operator annihilating solutions of op(f) = constant."""
    if Fraction(constant) == 0:
        return op
    return diffop_mul(DiffOp.d(), op)


def _falling(j: int, i: int) -> IntPoly:
    """(n + j)(n + j - 1)...(n + j - i + 1) as a polynomial in n."""
    out = IntPoly((1,))
    for l in range(i):
        out = out * IntPoly((j - l, 1))
    return out


def ode_to_recurrence(op: DiffOp) -> PRecurrence:
    """Recurrence on the coefficients of power-series solutions of op."""
    if not op.is_polynomial():
        raise RecurrenceError("ode_to_recurrence needs polynomial coefficients")
    op = op.cleared()
    terms = []  # (shift s = i - d, i, coefficient)
    for i, c in enumerate(op.coeffs):
        for d, cd in enumerate(c.as_poly().coeffs):
            if cd:
                terms.append((i - d, i, cd))
    s_min = min(s for s, _, _ in terms)
    s_max = max(s for s, _, _ in terms)
    coeffs = [IntPoly() for _ in range(s_max - s_min + 1)]
    # [t^m] of c t^d D^i f is c * falling(m + s, i) * f(m + s); put n = m + s_min
    for s, i, cd in terms:
        j = s - s_min
        coeffs[j] = coeffs[j] + cd * _falling(j, i)
    while coeffs and coeffs[0].is_zero():
        # a(n + 0) never appears: reindex so the recurrence starts at the lowest shift present
        coeffs = [p.shift(-1) for p in coeffs[1:]]
    return PRecurrence(coeffs).normalized()


# -- shift operators -----------------------------------------------------------

@dataclass(frozen=True)
class ShiftOperator:
    """sum_j coeffs[j](n) S^j where S f(n) = f(n + 1) S."""

    coeffs: tuple

    @classmethod
    def from_recurrence(cls, rec: PRecurrence) -> "ShiftOperator":
        return cls(tuple(RationalFunction(p) for p in rec.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "ShiftOperator") -> "ShiftOperator":
        out = [RationalFunction(0)] * (self.order + other.order + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b.shift(i)
        while len(out) > 1 and out[-1].is_zero():
            out.pop()
        return ShiftOperator(tuple(out))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ShiftOperator):
            return NotImplemented
        return self.coeffs == other.coeffs

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    def __repr__(self) -> str:
        return "ShiftOperator(" + ", ".join(repr(c) for c in self.coeffs) + ")"


def shift_right_divide(r2: PRecurrence, r1: PRecurrence) -> ShiftOperator | None:
    """M with r2 = M * r1 in the shift algebra over Q(n), or None if r1 is not a right factor."""
    if r2.order < r1.order:
        return None
    rem = [RationalFunction(p) for p in r2.coeffs]
    div = [RationalFunction(p) for p in r1.coeffs]
    q = [RationalFunction(0)] * (r2.order - r1.order + 1)
    for deg in range(r2.order, r1.order - 1, -1):
        lead = rem[deg]
        if lead.is_zero():
            continue
        e = deg - r1.order
        f = lead / div[-1].shift(e)
        q[e] = f
        for j, c in enumerate(div):
            rem[j + e] = rem[j + e] - f * c.shift(e)
    if any(not c.is_zero() for c in rem):
        return None
    return ShiftOperator(tuple(q))
