"""Sparse Laurent polynomials with integer coefficients and constant-term sequences."""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping


class DimensionMismatch(ValueError):
    pass


class LaurentPoly:
    """Immutable sparse Laurent polynomial in ``d`` variables.

    Terms are stored as ``{exponent_tuple: int}`` with zero coefficients dropped.
    """

    __slots__ = ("d", "_terms")

    def __init__(self, d: int, terms: Mapping[tuple, int] | Iterable = ()):
        self.d = d
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple, int] = {}
        for e, c in items:
            e = tuple(int(v) for v in e)
            if len(e) != d:
                raise DimensionMismatch(f"exponent {e} has length {len(e)}, expected {d}")
            c = int(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self._terms = clean

    @classmethod
    def monomial(cls, e: Iterable[int], c: int = 1) -> "LaurentPoly":
        e = tuple(e)
        return cls(len(e), {e: c})

    @classmethod
    def constant(cls, d: int, c: int = 1) -> "LaurentPoly":
        return cls(d, {(0,) * d: c})

    @property
    def terms(self) -> dict[tuple, int]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.d == other.d and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.d, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.d}, {dict(sorted(self._terms.items()))})"

    def _check(self, other: "LaurentPoly") -> None:
        if self.d != other.d:
            raise DimensionMismatch(f"cannot combine {self.d}- and {other.d}-variable polynomials")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.d, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.d, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        return lp_mul(self, other)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = LaurentPoly.constant(self.d)
        for _ in range(n):
            out = lp_mul(out, self)
        return out

    def coefficient(self, e: Iterable[int]) -> int:
        return coefficient(self, e)

    def to_json(self) -> list:
        return [[*e, str(c)] for e, c in self]

    @classmethod
    def from_json(cls, d: int, rows: list) -> "LaurentPoly":
        return cls(d, [(row[:d], int(row[d])) for row in rows])


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    a._check(b)
    out: defaultdict[tuple, int] = defaultdict(int)
    for ea, ca in a._terms.items():
        for eb, cb in b._terms.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return LaurentPoly(a.d, out)


def coefficient(a: LaurentPoly, e: Iterable[int]) -> int:
    e = tuple(e)
    if len(e) != a.d:
        raise DimensionMismatch(f"exponent {e} does not match {a.d} variables")
    return a._terms.get(e, 0)


@dataclass(frozen=True)
class CTSpec:
    """A pair (delta, kernel); term n of its sequence is CT(delta * kernel**n)."""

    delta: LaurentPoly
    kernel: LaurentPoly

    def __post_init__(self):
        if self.delta.d != self.kernel.d:
            raise DimensionMismatch("delta and kernel must have the same number of variables")

    @property
    def d(self) -> int:
        return self.delta.d

    def to_json(self) -> str:
        return json.dumps({"vars": self.d, "delta": self.delta.to_json(), "kernel": self.kernel.to_json()})

    @classmethod
    def from_json(cls, text: str | dict) -> "CTSpec":
        data = json.loads(text) if isinstance(text, str) else text
        d = int(data["vars"])
        return cls(LaurentPoly.from_json(d, data["delta"]), LaurentPoly.from_json(d, data["kernel"]))


def ct_sequence(spec: CTSpec, n_max: int) -> list[int]:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    zero = (0,) * spec.d
    current = spec.delta
    out = [coefficient(current, zero)]
    for _ in range(n_max):
        current = lp_mul(current, spec.kernel)
        out.append(coefficient(current, zero))
    return out


def _poly(d: int, rows) -> LaurentPoly:
    return LaurentPoly(d, [(e, c) for *e, c in rows])


def g2_spec() -> CTSpec:
    """(Delta, K) for the 7-dimensional G2 representation."""
    kernel = _poly(2, [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1),
                       (-1, 0, 1), (0, -1, 1), (-1, -1, 1)])
    inner = [(2, 3, 1), (1, 3, -1), (-1, 2, 1), (-2, 1, -1), (-3, -1, 1), (-3, -2, -1),
             (-2, -3, 1), (-1, -3, -1), (1, -2, 1), (2, -1, -1), (3, 1, 1), (3, 2, -1)]
    delta = _poly(2, [(x - 2, y - 3, c) for x, y, c in inner])
    return CTSpec(delta, kernel)


def quadrant_spec(k: int) -> CTSpec:
    """(W, K) for SL(3) acting on V + V* + k copies of the trivial representation."""
    kernel = _poly(2, [(0, 0, k), (1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1),
                       (1, -1, 1), (-1, 1, 1)])
    w = _poly(2, [(0, 0, 1), (2, -1, -1), (3, 0, 1), (2, 2, -1), (0, 3, 1), (-1, 2, -1)])
    return CTSpec(w, kernel)


def sl2_spec() -> CTSpec:
    # character x + 1/x; the sign-alternating kernel x - 1/x does not give Catalan numbers
    return CTSpec(_poly(1, [(0, 1), (-2, -1)]), _poly(1, [(1, 1), (-1, 1)]))
