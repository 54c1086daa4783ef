"""Branching from G2 to SL(3) and the walk identities it implies.

The multiplicity of the SL(3) module U(p, q) in the restriction of the G2
module W(r, s) is the coefficient of x^p y^q X^r Y^s in

    [(1 - X)^-1 + xyY (1 - xyY)^-1] / [(1 - xX)(1 - yX)(1 - xY)(1 - yY)].

G2 weights are written in the basis where (1, 0) is the 7-dimensional
module; SL(3) weights (p, q) have U(1, 0) = V and U(0, 1) = V*.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import fixtures as fx
from .walks import axis_sum, count_endpoints, excursions, octant_g2, quadrant_sl3


@dataclass
class BranchingTable:
    max_deg: int
    # m[p, q, r, s]
    m: np.ndarray

    def multiplicity(self, r: int, s: int, p: int, q: int) -> int:
        d = self.max_deg
        if max(r, s, p, q) > d:
            raise IndexError(f"index beyond the truncation degree {d}")
        return int(self.m[p, q, r, s])

    def restriction(self, r: int, s: int) -> dict[tuple[int, int], int]:
        """Nonzero multiplicities m^{(r,s)}_{(p,q)} keyed by (p, q)."""
        sl = self.m[:, :, r, s]
        return {(int(p), int(q)): int(sl[p, q]) for p, q in zip(*np.nonzero(sl))}

    def to_dict(self) -> dict:
        rows = [[int(r), int(s), int(p), int(q), str(int(self.m[p, q, r, s]))]
                for p, q, r, s in zip(*np.nonzero(self.m))]
        rows.sort()
        return {"max_deg": self.max_deg, "columns": ["r", "s", "p", "q", "multiplicity"], "rows": rows}


def expand_branching_gf(max_deg: int, numerator_sign: int = 1) -> BranchingTable:
    """Coefficients with every exponent at most ``max_deg``.

    ``numerator_sign = -1`` gives the variant with xyY(1 - xyY)^-1 subtracted,
    which produces negative coefficients.
    """
    if max_deg < 0:
        raise ValueError("max_deg must be nonnegative")
    if numerator_sign not in (1, -1):
        raise ValueError("numerator_sign must be +1 or -1")
    d = max_deg + 1
    g = np.zeros((d, d, d, d), dtype=np.int64)
    g[0, 0, :, 0] = 1
    for j in range(1, d):
        g[j, j, 0, j] += numerator_sign
    # divide by (1 - xX), (1 - yX), (1 - xY), (1 - yY) in turn; each is a
    # running sum along one diagonal direction
    for i in range(1, d):
        g[i, :, 1:, :] += g[i - 1, :, :-1, :]
    for i in range(1, d):
        g[:, i, 1:, :] += g[:, i - 1, :-1, :]
    for i in range(1, d):
        g[i, :, :, 1:] += g[i - 1, :, :, :-1]
    for i in range(1, d):
        g[:, i, :, 1:] += g[:, i - 1, :, :-1]
    return BranchingTable(max_deg, g)


def g2_dimension(r: int, s: int) -> int:
    return ((r + 1) * (s + 1) * (r + s + 2) * (r + 2 * s + 3) * (r + 3 * s + 4)
            * (2 * r + 3 * s + 5)) // 120


def sl3_dimension(p: int, q: int) -> int:
    return (p + 1) * (q + 1) * (p + q + 2) // 2


@dataclass
class BranchingReport:
    name: str
    ok: bool
    checked: int = 0
    mismatches: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "checked": self.checked,
                "mismatches": [[str(x) for x in m] for m in self.mismatches]}


def dimension_check(table: BranchingTable) -> BranchingReport:
    """dim W(r, s) = sum of dim U(p, q) over the restriction, for r + s <= max_deg.

    Each X or Y contributes at most one power of x (and of y), so p, q <= r + s
    and the truncated table holds the full restriction.
    """
    report = BranchingReport("dimension", True)
    for r in range(table.max_deg + 1):
        for s in range(table.max_deg + 1 - r):
            got = sum(m * sl3_dimension(p, q) for (p, q), m in table.restriction(r, s).items())
            want = g2_dimension(r, s)
            report.checked += 1
            if got != want or any(m < 0 for m in table.restriction(r, s).values()):
                report.ok = False
                report.mismatches.append(((r, s), want, got))
    return report


def trivial_multiplicity_check(table: BranchingTable) -> BranchingReport:
    """m^{(r,s)}_{(0,0)} is 1 when s = 0 and 0 otherwise."""
    report = BranchingReport("trivial_multiplicity", True)
    for r in range(table.max_deg + 1):
        for s in range(table.max_deg + 1):
            report.checked += 1
            got = table.multiplicity(r, s, 0, 0)
            if got != (1 if s == 0 else 0):
                report.ok = False
                report.mismatches.append(((r, s), int(s == 0), got))
    return report


def verify_axis_excursions(k: int, n_max: int) -> BranchingReport:
    """x-axis endpoints of octant_g2(k) against excursions of quadrant_sl3(k + 1)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    left = axis_sum(octant_g2(k), 0, n_max)
    right = excursions(quadrant_sl3(k + 1), n_max)
    report = BranchingReport(f"axis_excursions(k={k})", True, n_max + 1)
    for n, (a, b) in enumerate(zip(left, right)):
        if a != b:
            report.ok = False
            report.mismatches.append((n, b, a))
    return report


def verify_restriction(k: int, p: int, q: int, n_max: int,
                       table: BranchingTable | None = None) -> BranchingReport:
    """quadrant_(p,q)(n) = sum over (r, s) of m^{(r,s)}_{(p,q)} octant_(r,s)(n).

    n-step octant walks end with r + s <= n, and the restriction of W(r, s)
    only involves p, q <= r + s, so a table of degree 2 * n_max is ample.
    """
    if table is None:
        table = expand_branching_gf(max(2 * n_max, p, q))
    octant = count_endpoints(octant_g2(k), n_max)
    quadrant = count_endpoints(quadrant_sl3(k + 1), n_max)
    report = BranchingReport(f"restriction(k={k},p={p},q={q})", True, n_max + 1)
    for n in range(n_max + 1):
        rhs = sum(c * table.multiplicity(r, s, p, q) for (r, s), c in octant[n].counts.items())
        lhs = quadrant[n][(p, q)]
        if lhs != rhs:
            report.ok = False
            report.mismatches.append((n, lhs, rhs))
    return report


def _poly_at(coeffs, k: int) -> int:
    return sum(c * k**i for i, c in enumerate(coeffs))


def _bt_prediction(n: int, pt) -> tuple[int, ...]:
    """Entry at pt as a polynomial in k from the k = 0 entries at lengths <= n."""
    out = [0] * (n + 1)
    for j in range(n + 1):
        a_j = fx.octant_k_table(j, corrected=False).get(pt, (0,))[0]
        out[n - j] += comb(n, j) * a_j
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass
class PolynomialTableReport(BranchingReport):
    flagged: list = field(default_factory=list)

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["flagged"] = [[str(x) for x in f] for f in self.flagged]
        return d


def octant_polynomials_check(n_max: int = 3, ks=(0, 1, 2, 3, 4)) -> PolynomialTableReport:
    """The endpoint tables as polynomials in k, and their bottom-row sums.

    Printed cells that disagree with the binomial-transform prediction from
    the k = 0 entries are flagged; the corrected entry is what gets compared.
    """
    if n_max > 3:
        raise ValueError("tables are only available for n <= 3")
    report = PolynomialTableReport("octant_polynomials", True)
    for n in range(n_max + 1):
        for pt, printed in fx.octant_k_table(n, corrected=False).items():
            predicted = _bt_prediction(n, pt)
            if tuple(printed) != predicted:
                corrected = tuple(fx.octant_k_table(n)[pt])
                report.flagged.append((n, pt, printed, corrected))
                if corrected != predicted:
                    report.ok = False
                    report.mismatches.append((n, pt, "correction", predicted, corrected))
    for k in ks:
        tables = count_endpoints(octant_g2(k), n_max)
        for n in range(n_max + 1):
            expected = {pt: _poly_at(c, k) for pt, c in fx.octant_k_table(n).items()}
            got = {pt: v for pt, v in tables[n].counts.items() if v}
            for pt in sorted(set(expected) | set(got)):
                report.checked += 1
                if expected.get(pt, 0) != got.get(pt, 0):
                    report.ok = False
                    report.mismatches.append((k, n, pt, expected.get(pt, 0), got.get(pt, 0)))
            bottom = sum(v for (r, s), v in got.items() if s == 0)
            report.checked += 1
            if bottom != _poly_at(fx.BOTTOM_ROW_SUMS[n], k):
                report.ok = False
                report.mismatches.append((k, n, "bottom_row", _poly_at(fx.BOTTOM_ROW_SUMS[n], k), bottom))
    return report
