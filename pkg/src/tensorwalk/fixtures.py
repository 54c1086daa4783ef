"""Operators, polynomials and reference tables used as fixed inputs and oracles.

Everything here is data; nothing is derived.  ``paper_operator`` returns fresh
objects so callers cannot mutate the registry.
"""
from __future__ import annotations

from .holonomic import DiffOp, PRecurrence, homogenize
from .polys import IntPoly, RationalFunction

n = IntPoly.x()
t = IntPoly.x()

# Figure 1: octant sequences, terms 0..9.  The third row is B(E3); it equals
# the number of 3-noncrossing set partitions of [n + 1].
OCTANT_ROWS = {
    "A059710": (1, 0, 1, 1, 4, 10, 35, 120, 455, 1792),
    "A108307": (1, 1, 2, 5, 15, 51, 191, 772, 3320, 15032),
    "A108304": (1, 2, 5, 15, 52, 202, 859, 3930, 19095, 97566),
}

# Figure 2: quadrant sequences S_0..S_3, terms 0..8.
QUADRANT_ROWS = {
    "A151366": (1, 0, 2, 2, 12, 30, 130, 462, 1946),
    "A236408": (1, 1, 3, 9, 33, 131, 561, 2535, 11971),
    "A001181": (1, 2, 6, 22, 92, 422, 2074, 10754, 58202),
    "A216947": (1, 3, 11, 47, 225, 1173, 6529, 38265, 233795),
}

OCTANT_TAGS = ("A059710", "A108307", "A108304")
QUADRANT_TAGS = ("A151366", "A236408", "A001181", "A216947")

# sum of n-step octant_g2(k) counts along the x-axis, as polynomials in k (ascending)
BOTTOM_ROW_SUMS = ((1,), (1, 1), (3, 2, 1), (9, 9, 3, 1))

# endpoint tables as polynomials in k (ascending coefficients), keyed by (r, s).
# The printed layout places weight (r, s) in row s, column r + s.
OCTANT_K_TABLES = {
    0: {(0, 0): (1,)},
    1: {(0, 0): (0, 1), (1, 0): (1,)},
    2: {(0, 0): (1, 0, 1), (1, 0): (1, 2), (2, 0): (1,), (0, 1): (1,)},
    3: {(0, 0): (1, 3, 0, 1), (1, 0): (4, 3, 3), (2, 0): (3, 3), (3, 0): (1,),
        (0, 1): (2, 2), (1, 1): (2,)},
}

# The printed n = 3 entry at (0, 1) reads 2 + 2k.  Binomial transforms of the
# k = 0 column give 2 + 3k, which the walk engine confirms.
OCTANT_K_CORRECTIONS = {(3, (0, 1)): (2, 3)}


def octant_k_table(n: int, corrected: bool = True) -> dict:
    table = dict(OCTANT_K_TABLES[n])
    if corrected:
        for (m, pt), poly in OCTANT_K_CORRECTIONS.items():
            if m == n:
                table[pt] = poly
    return table

ASYMPTOTIC_NUMERATOR = 4117715
ASYMPTOTIC_DENOMINATOR = 864


# -- polynomials of the closed formulae -----------------------------------------

P = 28 * t**4 + 66 * t**3 + 46 * t**2 + 15 * t + 1
P1 = IntPoly([-9, -131, -90, 1592, 5744, 7560, 3136])
P2 = IntPoly([-7, -244, -2663, -11138, -4560, 146508, 665620, 1498264, 2014088,
              1626800, 719712, 131712])
S = (7 * t - 1) * (t + 1) * (2 * t + 1) ** 2
U = (11 * t - 1) * (46 * t**3 - 78 * t**2 + 15 * t - 1)
V = IntPoly([-1, 29, -300, 1112, 1115, -13371, -6934, 11870])
G2_INVARIANT = (t - 1) * (25 * t**3 + 21 * t**2 + 3 * t - 1)
J_DEN = t**6 * (1 - 7 * t) * (2 * t + 1) ** 2 * (t + 1) ** 3
J_NUM = (t - 1) ** 3 * (25 * t**3 + 21 * t**2 + 3 * t - 1) ** 3

PAPER_POLYNOMIALS = {"P": P, "P1": P1, "P2": P2, "S": S, "U": U, "V": V, "g2": G2_INVARIANT}


def paper_rational(name: str) -> RationalFunction:
    if name == "R1":
        return RationalFunction((t + 1) ** 2 * (214 * t**3 + 45 * t**2 + 60 * t + 5), t - 1)
    if name == "R2":
        return RationalFunction(6 * t**2 * (t + 1) ** 2 * (101 * t**2 + 74 * t + 5), (t - 1) ** 2)
    if name == "phi":
        return RationalFunction(27 * (t + 1) * t**2, (1 - t) ** 3)
    if name == "J":
        return RationalFunction(J_NUM, J_DEN)
    if name == "baxter_arg":
        return RationalFunction(27 * t**2, (1 - 2 * t) ** 3)
    if name in PAPER_POLYNOMIALS:
        return RationalFunction(PAPER_POLYNOMIALS[name])
    raise KeyError(f"unknown rational function {name!r}")


# -- recurrences -------------------------------------------------------------

def uniform_rec(k: int) -> PRecurrence:
    """Order-4 recurrence for S_k with k substituted."""
    p0 = (k - 3) ** 2 * (k - 2) * (k + 6) * (n + 1) * (n + 2)
    p1 = -2 * (k - 3) * (n + 2) * (IntPoly([-60 + 8 * k + 8 * k * k, -18 + 3 * k + 2 * k * k]))
    p2 = IntPoly([-342 - 174 * k + 114 * k * k, -195 - 70 * k + 54 * k * k, -27 - 6 * k + 6 * k * k])
    p3 = 2 * IntPoly([57 - 70 * k, 16 - 24 * k, 1 - 2 * k])
    p4 = (n + 7) * (n + 8)
    return PRecurrence([p0, p1, p2, p3, p4])


def _recurrences() -> dict:
    return {
        # T3, initial (1, 0, 1)
        "T3_rec": PRecurrence([
            14 * (n + 1) * (n + 2),
            (n + 2) * (19 * n + 75),
            2 * (n + 2) * (2 * n + 11),
            -(n + 8) * (n + 9),
        ]),
        # E3, initial (1, 1)
        "E3_rec": PRecurrence([
            8 * (n + 3) * (n + 1),
            7 * n**2 + 53 * n + 88,
            -(n + 8) * (n + 7),
        ]),
        # S3 = A216947, initial (1, 3)
        "S3_rec": PRecurrence([
            9 * (n + 1) * (n + 4),
            -2 * (5 * n**2 + 36 * n + 61),
            (n + 5) * (n + 6),
        ]),
    }


INITIAL_TERMS = {"T3_rec": (1, 0, 1), "E3_rec": (1, 1), "S3_rec": (1, 3)}


# -- differential operators ------------------------------------------------------

def _diffops() -> dict:
    d = {}
    d["L6"] = DiffOp([
        20160 * t**3 + 25200 * t**2 + 8064 * t,
        36 * (3360 * t**4 + 4540 * t**3 + 1646 * t**2 + 16 * t - 35),
        36 * t * (4200 * t**4 + 6100 * t**3 + 2442 * t**2 + 54 * t - 77),
        6 * t**2 * (11200 * t**4 + 17400 * t**3 + 7556 * t**2 + 268 * t - 273),
        6 * t**3 * (2100 * t**4 + 3475 * t**3 + 1616 * t**2 + 79 * t - 61),
        3 * t**4 * (2 * t + 1) * (168 * t**3 + 211 * t**2 + 40 * t - 11),
        t**5 * (t + 1) * (7 * t - 1) * (2 * t + 1) ** 2,
    ])
    d["Q"] = DiffOp([
        48 * t + 30,
        6 * (12 * t + 7) * t,
        (24 * t + 13) * t**2,
        (2 * t + 1) * t**3,
    ])
    d["L3"] = DiffOp([
        28 * t * (3 * t + 4),
        252 * t**3 + 338 * t**2 + 36 * t - 42,
        2 * t * (t + 1) * (63 * t**2 + 22 * t - 7),
        t**2 * (2 * t + 1) * (7 * t - 1) * (t + 1),
    ])
    d["L2"] = DiffOp([
        RationalFunction(P2, P * P),
        RationalFunction(t * (t + 1) * P1, P),
        t**2 * (2 * t + 1) * (7 * t - 1) * (t + 1),
    ])
    # D - (P/t^5)'/(P/t^5)
    p_over_t5 = RationalFunction(P, t**5)
    d["L1"] = DiffOp([-(p_over_t5.derivative() / p_over_t5), 1])
    # E3 generating function: E3_ode(E) = 30
    d["E3_ode"] = DiffOp([
        6 * (5 - 7 * t - 4 * t**2),
        2 * t * (6 - 23 * t - 20 * t**2),
        t**2 * (1 + t) * (1 - 8 * t),
    ])
    d["E3_ode_homogeneous"] = homogenize(d["E3_ode"], 30)
    d["S3_ode"] = DiffOp([
        72,
        4 * (117 * t - 61),
        2 * (15 - 184 * t + 234 * t**2),
        2 * t * (7 * t - 6) * (9 * t - 1),
        (t - 1) * t**2 * (9 * t - 1),
    ])
    return d


E3_ODE_CONSTANT = 30

OPERATOR_NAMES = ("T3_rec", "E3_rec", "S3_rec", "uniform_rec", "L6", "Q", "L3", "L2", "L1",
                  "E3_ode", "E3_ode_homogeneous", "S3_ode")


def paper_operator(name: str, k: int | None = None):
    if name == "uniform_rec":
        if k is None:
            raise ValueError("uniform_rec needs an integer k")
        return uniform_rec(k)
    recs = _recurrences()
    if name in recs:
        return recs[name]
    ops = _diffops()
    if name in ops:
        return ops[name]
    raise KeyError(f"unknown operator {name!r}")
