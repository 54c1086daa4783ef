"""Truncated formal power series over the rationals.

A series of order N carries the exact coefficients of t**0 .. t**N; every
operation propagates the order that remains exactly known.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .polys import IntPoly


class SeriesError(ValueError):
    pass


class PowerSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < -1:
            raise SeriesError("order must be >= -1")
        cs = cs[: order + 1]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.coeffs = cs
        self.order = order

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, order: int) -> "PowerSeries":
        return cls(coeffs, order)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([1], order)

    @classmethod
    def t(cls, order: int) -> "PowerSeries":
        return cls([0, 1], order)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return self.order + 1

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        return f"PowerSeries([{shown}{', ...' if self.order >= 8 else ''}], order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1], order)

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    # arithmetic --------------------------------------------------------------

    @staticmethod
    def _lift(x, order: int) -> "PowerSeries":
        if isinstance(x, PowerSeries):
            return x
        return PowerSeries([x], order)

    def __add__(self, other) -> "PowerSeries":
        other = self._lift(other, self.order)
        n = min(self.order, other.order)
        return PowerSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n)

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other) -> "PowerSeries":
        return self + (-self._lift(other, self.order))

    def __rsub__(self, other) -> "PowerSeries":
        return self._lift(other, self.order) - self

    def __mul__(self, other) -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            c = Fraction(other)
            return PowerSeries([c * x for x in self.coeffs], self.order)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        nz = [(i, x) for i, x in enumerate(a[: n + 1]) if x]
        for j, y in enumerate(b[: n + 1]):
            if not y:
                continue
            for i, x in nz:
                if i + j > n:
                    break
                out[i + j] += x * y
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            c = Fraction(other)
            return PowerSeries([x / c for x in self.coeffs], self.order)
        return self * other.inverse()

    def __rtruediv__(self, other) -> "PowerSeries":
        return self._lift(other, self.order) * self.inverse()

    def inverse(self) -> "PowerSeries":
        if self.order < 0:
            return self
        b0 = self.coeffs[0]
        if b0 == 0:
            raise SeriesError("cannot invert a series with zero constant term")
        n = self.order
        inv = [Fraction(0)] * (n + 1)
        inv[0] = 1 / b0
        b = self.coeffs
        for k in range(1, n + 1):
            s = sum((b[i] * inv[k - i] for i in range(1, k + 1) if b[i]), Fraction(0))
            inv[k] = -s / b0
        return PowerSeries(inv, n)

    def __pow__(self, e: int) -> "PowerSeries":
        if e < 0:
            return self.inverse() ** (-e)
        out = PowerSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def derivative(self) -> "PowerSeries":
        return PowerSeries([i * c for i, c in enumerate(self.coeffs) if i], self.order - 1)

    def integrate(self) -> "PowerSeries":
        """Antiderivative with zero constant term."""
        return PowerSeries([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)], self.order + 1)

    def div_tpower(self, k: int) -> "PowerSeries":
        """Divide by t**k; the series must vanish to order k."""
        v = self.valuation()
        if v is not None and v < k:
            raise SeriesError(f"series has valuation {v} < {k}; cannot divide by t^{k}")
        return PowerSeries(self.coeffs[k:], self.order - k)

    def mul_tpower(self, k: int) -> "PowerSeries":
        return PowerSeries([0] * k + self.coeffs, self.order + k)

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        return ps_compose(self, inner)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def ps_arith(op: str, a: PowerSeries, b: PowerSeries) -> PowerSeries:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def _horner(coeffs: Sequence[Fraction], inner: PowerSeries, order: int) -> PowerSeries:
    inner = inner.truncate(order)
    acc = PowerSeries([coeffs[-1]], order)
    for c in reversed(coeffs[:-1]):
        acc = acc * inner
        acc.coeffs[0] += c
    return acc


def ps_compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """outer(inner(t)); inner must have zero constant term."""
    if inner.order >= 0 and inner.coeffs[0] != 0:
        raise SeriesError("inner series must have zero constant term")
    v = inner.valuation()
    if v is None:
        return PowerSeries(outer.coeffs[:1], inner.order)
    # outer's unknown coefficient of z^(M+1) pollutes from t^(v*(M+1)) on
    order = min(inner.order, v * (outer.order + 1) - 1)
    terms = outer.coeffs[: order // v + 1]
    return _horner(terms, inner, order)


def ps_rational_power(a: PowerSeries, alpha) -> PowerSeries:
    """a**alpha for a rational exponent; a must start with constant term 1.

    Uses the identity a * b' = alpha * a' * b for b = a**alpha, which gives each
    coefficient from the previous ones.
    """
    alpha = Fraction(alpha)
    if a.coeffs[0] != 1:
        raise SeriesError("constant term must be 1 for a rational power")
    n = a.order
    b = [Fraction(0)] * (n + 1)
    b[0] = Fraction(1)
    ac = a.coeffs
    for m in range(1, n + 1):
        s = Fraction(0)
        for k in range(1, m + 1):
            if ac[k]:
                s += ((alpha + 1) * k - m) * ac[k] * b[m - k]
        b[m] = s / m
    return PowerSeries(b, n)


def ps_integrate(a: PowerSeries) -> PowerSeries:
    return a.integrate()


def hypergeom_coeffs(a, b, c, count: int) -> list[Fraction]:
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if c.denominator == 1 and c <= 0:
        raise SeriesError(f"2F1 lower parameter {c} is a nonpositive integer")
    out = [Fraction(1)]
    for n in range(count - 1):
        out.append(out[-1] * (a + n) * (b + n) / ((c + n) * (n + 1)))
    return out


def hypergeom_2f1(a, b, c, inner: PowerSeries) -> PowerSeries:
    """2F1(a, b; c; inner(t)) truncated at the order of inner."""
    if inner.order >= 0 and inner.coeffs[0] != 0:
        raise SeriesError("inner series must have zero constant term")
    v = inner.valuation()
    if v is None:
        hypergeom_coeffs(a, b, c, 1)
        return PowerSeries.one(inner.order)
    count = inner.order // v + 1
    return _horner(hypergeom_coeffs(a, b, c, count), inner, inner.order)


def rf_to_series(num, den, order: int) -> PowerSeries:
    num, den = IntPoly.coerce(num), IntPoly.coerce(den)
    if den(0) == 0:
        raise SeriesError("denominator vanishes at t = 0")
    return PowerSeries(num.coeffs, order) / PowerSeries(den.coeffs, order)


def poly_series(p, order: int) -> PowerSeries:
    return PowerSeries(IntPoly.coerce(p).coeffs, order)
