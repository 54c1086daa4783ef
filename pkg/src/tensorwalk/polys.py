"""Dense univariate integer polynomials and reduced rational functions."""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import comb, gcd
from typing import Iterable, Union

Number = Union[int, Fraction]


def _trim(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class IntPoly:
    """Polynomial with integer coefficients, ascending degree.  Immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integer coefficient {c}")
                c = c.numerator
            cs.append(int(c))
        self.coeffs = tuple(_trim(cs))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @staticmethod
    def coerce(other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        return IntPoly(other)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if c == 0:
                continue
            mono = "" if i == 0 else ("n" if i == 1 else f"n^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            parts.append(("-" if c < 0 else "+") + body)
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    def __add__(self, other) -> "IntPoly":
        other = IntPoly.coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "IntPoly":
        return self + (-IntPoly.coerce(other))

    def __rsub__(self, other) -> "IntPoly":
        return IntPoly.coerce(other) - self

    def __mul__(self, other) -> "IntPoly":
        other = IntPoly.coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        out = IntPoly((1,))
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def shift(self, s: int) -> "IntPoly":
        """p(x + s)."""
        out = [0] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            for j in range(i + 1):
                out[j] += c * comb(i, j) * s ** (i - j)
        return IntPoly(out)

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def primitive(self) -> "IntPoly":
        g = self.content()
        if g == 0:
            return self
        if self.leading() < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def divexact(self, c: int) -> "IntPoly":
        if any(x % c for x in self.coeffs):
            raise ValueError(f"{self} is not divisible by {c}")
        return IntPoly(x // c for x in self.coeffs)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "IntPoly":
        return cls(int(c) for c in data)


# -- arithmetic over Q, used for gcds ------------------------------------------

def _qdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = f
        for i, c in enumerate(b):
            a[d + i] -= f * c
        a.pop()
        _trim(a)
    return q, a


def _to_integer(q: list[Fraction]) -> IntPoly:
    den = 1
    for c in q:
        den = den * c.denominator // gcd(den, c.denominator)
    return IntPoly(c * den for c in q).primitive()


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient."""
    x = [Fraction(c) for c in a.coeffs]
    y = [Fraction(c) for c in b.coeffs]
    while y:
        _, r = _qdivmod(x, y)
        x, y = y, r
    if not x:
        return IntPoly()
    return _to_integer(x)


def poly_divexact(a: IntPoly, b: IntPoly) -> IntPoly:
    q, r = _qdivmod([Fraction(c) for c in a.coeffs], [Fraction(c) for c in b.coeffs])
    if r:
        raise ValueError(f"{b} does not divide {a}")
    return IntPoly(q)


class RationalFunction:
    """num/den with gcd(num, den) = 1, integer coefficients and positive leading den."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, _reduced: bool = False):
        num, den = IntPoly.coerce(num), IntPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            if num.is_zero():
                num, den = IntPoly(), IntPoly((1,))
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num, den = poly_divexact(num, g), poly_divexact(den, g)
                # clear any rational factor so both are integral with joint content 1
                cn, cd = num.content(), den.content()
                c = gcd(cn, cd)
                if den.leading() < 0:
                    c = -c
                num, den = num.divexact(c), den.divexact(c)
        self.num, self.den = num, den

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, Fraction):
            return cls(x.numerator, x.denominator)
        return cls(x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> IntPoly:
        """The numerator divided by the constant denominator (must be exact)."""
        if not self.is_polynomial():
            raise ValueError("not a polynomial")
        return self.num.divexact(self.den.coeffs[0])

    def __eq__(self, other) -> bool:
        other = RationalFunction.coerce(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        if self.is_polynomial() and self.den.coeffs == (1,):
            return f"({self.num})"
        return f"({self.num})/({self.den})"

    def __add__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other) -> "RationalFunction":
        return RationalFunction.coerce(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        if self.is_zero() or other.is_zero():
            return RationalFunction(0)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return RationalFunction.coerce(other) / self

    def __call__(self, x: Number) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return Fraction(self.num(x)) / d

    def derivative(self) -> "RationalFunction":
        return RationalFunction(self.num.derivative() * self.den - self.num * self.den.derivative(),
                                self.den * self.den)

    def shift(self, s: int) -> "RationalFunction":
        return RationalFunction(self.num.shift(s), self.den.shift(s))

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RationalFunction":
        if isinstance(data, dict):
            return cls(IntPoly.from_json(data["num"]), IntPoly.from_json(data.get("den", ["1"])))
        return cls(IntPoly.from_json(data))
