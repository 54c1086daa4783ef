"""Endpoint-resolved lattice-walk counting in polyhedral domains.

A walk configuration is a list of linear inequalities (the domain), a list of
step rules and a start point.  A step rule carries a multiplicity and an
optional list of constraints; the step is unavailable at positions satisfying
all of them.  This models the G2 zero step that is disallowed on the wall r = 0.
"""
from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path

Point = tuple[int, int]


class InvalidConfig(ValueError):
    pass


@dataclass(frozen=True)
class LinearConstraint:
    coeffs: tuple[int, int]
    bound: int = 0
    relation: str = ">="

    def __post_init__(self):
        if not any(self.coeffs):
            raise InvalidConfig("constraint coefficients must not all be zero")
        if self.relation not in (">=", "="):
            raise InvalidConfig(f"unknown relation {self.relation!r}")

    def holds(self, p: Point) -> bool:
        value = self.coeffs[0] * p[0] + self.coeffs[1] * p[1]
        return value >= self.bound if self.relation == ">=" else value == self.bound

    def to_dict(self) -> dict:
        return {"coeffs": list(self.coeffs), "bound": self.bound, "relation": self.relation}

    @classmethod
    def from_dict(cls, d: dict) -> "LinearConstraint":
        return cls(tuple(d["coeffs"]), d.get("bound", 0), d.get("relation", ">="))


@dataclass(frozen=True)
class StepRule:
    vector: Point
    multiplicity: int = 1
    forbidden_when: tuple[LinearConstraint, ...] = ()

    def __post_init__(self):
        if self.multiplicity < 1:
            raise InvalidConfig("stored step rules need multiplicity >= 1")

    def allowed_at(self, p: Point) -> bool:
        if not self.forbidden_when:
            return True
        return not all(c.holds(p) for c in self.forbidden_when)

    def to_dict(self) -> dict:
        return {
            "vector": list(self.vector),
            "multiplicity": self.multiplicity,
            "forbidden_when": [c.to_dict() for c in self.forbidden_when],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "StepRule":
        return cls(
            tuple(d["vector"]),
            d.get("multiplicity", 1),
            tuple(LinearConstraint.from_dict(c) for c in d.get("forbidden_when", [])),
        )


@dataclass(frozen=True)
class WalkConfig:
    domain: tuple[LinearConstraint, ...]
    steps: tuple[StepRule, ...]
    start: Point = (0, 0)
    name: str = field(default="custom", compare=False)

    def __post_init__(self):
        if not self.contains(self.start):
            raise InvalidConfig(f"start {self.start} lies outside the domain")

    def contains(self, p: Point) -> bool:
        return all(c.holds(p) for c in self.domain)

    def to_json(self) -> str:
        return json.dumps({
            "domain": [c.to_dict() for c in self.domain],
            "steps": [s.to_dict() for s in self.steps],
            "start": list(self.start),
        })

    @classmethod
    def from_json(cls, text: str | dict) -> "WalkConfig":
        data = json.loads(text) if isinstance(text, str) else text
        return cls(
            tuple(LinearConstraint.from_dict(c) for c in data["domain"]),
            tuple(StepRule.from_dict(s) for s in data["steps"]),
            tuple(data.get("start", (0, 0))),
        )

    @classmethod
    def load(cls, path: str | Path) -> "WalkConfig":
        return cls.from_json(Path(path).read_text())


@dataclass(frozen=True)
class EndpointTable:
    length: int
    counts: dict[Point, int]

    def __getitem__(self, p: Point) -> int:
        return self.counts.get(tuple(p), 0)

    def total(self) -> int:
        return sum(self.counts.values())


def count_endpoints(config: WalkConfig, n_max: int) -> list[EndpointTable]:
    """Tables of walk counts by endpoint for every length 0..n_max."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    layer = {config.start: 1}
    tables = [EndpointTable(0, dict(layer))]
    for n in range(1, n_max + 1):
        nxt: defaultdict[Point, int] = defaultdict(int)
        for p, c in layer.items():
            for rule in config.steps:
                if not rule.allowed_at(p):
                    continue
                q = (p[0] + rule.vector[0], p[1] + rule.vector[1])
                if config.contains(q):
                    nxt[q] += c * rule.multiplicity
        # sort so the table layout does not depend on step order
        layer = dict(sorted(nxt.items()))
        tables.append(EndpointTable(n, layer))
    return tables


def excursions(config: WalkConfig, n_max: int) -> list[int]:
    return [t[config.start] for t in count_endpoints(config, n_max)]


def axis_sum(config: WalkConfig, axis: int, n_max: int) -> list[int]:
    """Walks ending on a coordinate axis; axis 0 means endpoints (r, 0)."""
    if axis not in (0, 1):
        raise ValueError("axis must be 0 (x-axis) or 1 (y-axis)")
    zero_coord = 1 - axis
    return [sum(c for p, c in t.counts.items() if p[zero_coord] == 0)
            for t in count_endpoints(config, n_max)]


def enumerate_words(config: WalkConfig, n: int) -> dict[Point, int]:
    """Brute-force endpoint counts by trying every step word of length n."""
    rules = [r for r in config.steps for _ in range(r.multiplicity)]
    counts: defaultdict[Point, int] = defaultdict(int)
    for word in itertools.product(rules, repeat=n):
        p = config.start
        for rule in word:
            if not rule.allowed_at(p):
                break
            p = (p[0] + rule.vector[0], p[1] + rule.vector[1])
            if not config.contains(p):
                break
        else:
            counts[p] += 1
    return dict(counts)


# -- built-in configurations -------------------------------------------------

_QUADRANT = (LinearConstraint((1, 0)), LinearConstraint((0, 1)))
# tableau coordinates: x >= y >= 0
_WEDGE = (LinearConstraint((1, -1)), LinearConstraint((0, 1)))
_ON_R0 = (LinearConstraint((1, 0), 0, "="),)
_ON_DIAGONAL = (LinearConstraint((1, -1), 0, "="),)

G2_STEPS = ((1, 0), (-1, 1), (-2, 1), (-1, 0), (1, -1), (2, -1))
SL3_VECTOR_STEPS = ((1, 0), (-1, 1), (0, -1))
SL3_DUAL_STEPS = ((0, 1), (1, -1), (-1, 0))
TABLEAU_STEPS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


def _rules(vectors) -> list[StepRule]:
    return [StepRule(v) for v in vectors]


def _free_zero(k: int) -> list[StepRule]:
    return [StepRule((0, 0), k)] if k > 0 else []


def octant_g2(k: int = 0) -> WalkConfig:
    steps = _rules(G2_STEPS) + [StepRule((0, 0), 1, _ON_R0)] + _free_zero(k)
    return WalkConfig(_QUADRANT, tuple(steps), name=f"octant_g2({k})")


def quadrant_sl3(k: int = 0) -> WalkConfig:
    steps = _rules(SL3_VECTOR_STEPS + SL3_DUAL_STEPS) + _free_zero(k)
    return WalkConfig(_QUADRANT, tuple(steps), name=f"quadrant_sl3({k})")


def builtin_config(name: str, k: int = 0) -> WalkConfig:
    if k < 0:
        raise InvalidConfig("k must be nonnegative")
    if name == "octant_g2":
        return octant_g2(k)
    if name == "quadrant_sl3":
        return quadrant_sl3(k)
    if name == "quadrant_sl3_vector":
        return WalkConfig(_QUADRANT, tuple(_rules(SL3_VECTOR_STEPS) + _free_zero(k)), name=name)
    if name == "c2_spin":
        steps = _rules([(1, 0), (-1, 1), (1, -1), (-1, 0)]) + _free_zero(k)
        return WalkConfig(_QUADRANT, tuple(steps), name=name)
    if name == "halfline_sl2":
        domain = (LinearConstraint((1, 0)), LinearConstraint((0, 1), 0, "="))
        return WalkConfig(domain, tuple(_rules([(1, 0), (-1, 0)]) + _free_zero(k)), name=name)
    if name == "hesitating8":
        # add-then-remove in row 1 is always possible; in row 2 it needs x > y
        steps = _rules(TABLEAU_STEPS) + [StepRule((0, 0), 1), StepRule((0, 0), 1, _ON_DIAGONAL)]
        return WalkConfig(_WEDGE, tuple(steps + _free_zero(k)), name=name)
    if name == "vacillating9":
        steps = _rules(TABLEAU_STEPS) + [StepRule((0, 0), 2), StepRule((0, 0), 1, _ON_DIAGONAL)]
        return WalkConfig(_WEDGE, tuple(steps + _free_zero(k)), name=name)
    raise InvalidConfig(f"unknown configuration {name!r}")


BUILTIN_NAMES = ("octant_g2", "quadrant_sl3", "halfline_sl2", "quadrant_sl3_vector",
                 "c2_spin", "hesitating8", "vacillating9")
