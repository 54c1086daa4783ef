"""Named sequences and the engines that compute them."""
from __future__ import annotations

from math import comb, factorial

from . import fixtures as fx
from .holonomic import unroll
from .laurent import ct_sequence, g2_spec, quadrant_spec, sl2_spec
from .transforms import bt_power
from .walks import builtin_config, excursions, octant_g2, quadrant_sl3

SEQUENCE_NAMES = ("T3", "E3", "NC3", "S0", "S1", "S2", "S3", "catalan", "catalan3d", "c2spin")

ALIASES = {
    "A059710": "T3", "A108307": "E3", "A108304": "NC3",
    "A151366": "S0", "A236408": "S1", "A001181": "S2", "A216947": "S3",
    "A000108": "catalan", "A005789": "catalan3d", "A005700": "c2spin",
}

ENGINES = ("walk", "ct", "rec", "formula")


class UnknownSequence(KeyError):
    pass


def resolve(name: str) -> str:
    if name in SEQUENCE_NAMES:
        return name
    if name.upper() in ALIASES:
        return ALIASES[name.upper()]
    raise UnknownSequence(f"unknown sequence {name!r}")


def _every(seq: list[int], step: int) -> list[int]:
    return seq[::step]


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def _walk(name: str, n_max: int) -> list[int]:
    if name in ("T3", "E3", "NC3"):
        return excursions(octant_g2(("T3", "E3", "NC3").index(name)), n_max)
    if name[0] == "S":
        return excursions(quadrant_sl3(int(name[1])), n_max)
    if name == "catalan":
        return _every(excursions(builtin_config("halfline_sl2"), 2 * n_max), 2)
    if name == "catalan3d":
        return _every(excursions(builtin_config("quadrant_sl3_vector"), 3 * n_max), 3)
    if name == "c2spin":
        return _every(excursions(builtin_config("c2_spin"), 2 * n_max), 2)
    raise UnknownSequence(name)


def _ct(name: str, n_max: int) -> list[int]:
    if name == "T3":
        return ct_sequence(g2_spec(), n_max)
    if name in ("E3", "NC3"):
        return bt_power(ct_sequence(g2_spec(), n_max), 1 if name == "E3" else 2)
    if name[0] == "S":
        return ct_sequence(quadrant_spec(int(name[1])), n_max)
    if name == "catalan":
        return _every(ct_sequence(sl2_spec(), 2 * n_max), 2)
    raise UnknownSequence(f"no constant-term engine for {name}")


def _rec(name: str, n_max: int) -> list[int]:
    if name == "T3":
        return unroll(fx.paper_operator("T3_rec"), fx.INITIAL_TERMS["T3_rec"], n_max)
    if name == "E3":
        return unroll(fx.paper_operator("E3_rec"), fx.INITIAL_TERMS["E3_rec"], n_max)
    if name == "NC3":
        return bt_power(_rec("E3", n_max), 1)
    if name == "S3":
        return unroll(fx.paper_operator("S3_rec"), fx.INITIAL_TERMS["S3_rec"], n_max)
    if name[0] == "S":
        k = int(name[1])
        tag = fx.QUADRANT_TAGS[k]
        return unroll(fx.uniform_rec(k), fx.QUADRANT_ROWS[tag][:4], n_max)
    raise UnknownSequence(f"no recurrence engine for {name}")


def _formula(name: str, n_max: int) -> list[int]:
    ns = range(n_max + 1)
    if name == "catalan":
        return [catalan(n) for n in ns]
    if name == "catalan3d":
        return [2 * factorial(3 * n) // (factorial(n) * factorial(n + 1) * factorial(n + 2)) for n in ns]
    if name == "c2spin":
        return [catalan(n) * catalan(n + 2) - catalan(n + 1) ** 2 for n in ns]
    raise UnknownSequence(f"no closed formula for {name}")


def compute(name: str, terms: int, engine: str = "walk") -> list[int]:
    """The first ``terms`` terms of a named sequence."""
    name = resolve(name)
    if terms < 0:
        raise ValueError("terms must be nonnegative")
    if terms == 0:
        return []
    fns = {"walk": _walk, "ct": _ct, "rec": _rec, "formula": _formula}
    if engine not in fns:
        raise ValueError(f"unknown engine {engine!r}")
    return fns[engine](name, terms - 1)[:terms]
