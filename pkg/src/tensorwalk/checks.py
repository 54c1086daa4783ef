"""The regression suite: one check per acceptance criterion.

Every check compares engine output against a private copy of its reference
data.  ``check_all(corrupt=name)`` perturbs the copy used by that one check,
which is how the suite demonstrates that it can fail.
"""
from __future__ import annotations

import copy
from dataclasses import dataclass, field
from typing import Callable

from . import fixtures as fx
from .branching import (dimension_check, expand_branching_gf, octant_polynomials_check,
                        trivial_multiplicity_check, verify_axis_excursions, verify_restriction)
from .closedforms import asymptotic_estimate, baxter_reference, t3_reference, verify_closed_form
from .combinat import (count_inversion_sequences, count_rect_tableaux, count_rect_tableaux_brute,
                       count_set_partitions, count_tableau_walks, quadrant_sum,
                       tableau_endpoint_counts)
from .holonomic import diffop_apply, diffop_mul, guess_recurrence, shift_right_divide, unroll
from .laurent import ct_sequence, g2_spec, quadrant_spec
from .sequences import compute
from .transforms import bt_power, series_of
from .walks import count_endpoints, excursions, octant_g2, quadrant_sl3


@dataclass
class CheckReport:
    name: str
    criterion: int
    status: str = "pass"
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def fail(self, what: str, **info) -> None:
        """Record a failure; only the first one per key is kept."""
        self.status = "fail"
        self.details.setdefault(what, {k: str(v) for k, v in info.items()})

    def compare(self, what: str, got, want) -> None:
        got, want = list(got), list(want)
        for i, (a, b) in enumerate(zip(got, want)):
            if a != b:
                self.fail(what, index=i, expected=b, got=a)
                return
        if len(got) != len(want):
            self.fail(what, index=min(len(got), len(want)), expected=f"{len(want)} terms",
                      got=f"{len(got)} terms")

    def to_dict(self) -> dict:
        return {"name": self.name, "criterion": self.criterion, "status": self.status,
                "details": self.details}


def _perturb(data):
    """Copy of reference data with one entry changed."""
    data = copy.deepcopy(data)
    if isinstance(data, dict):
        key = sorted(data)[0]
        data[key] = _perturb(data[key])
        return data
    if isinstance(data, tuple):
        return _perturb(list(data))
    if isinstance(data, list):
        if data and isinstance(data[-1], (list, tuple, dict)):
            data[-1] = _perturb(data[-1])
        else:
            data[-1] += 1
        return data
    return data + 1


def _reference(data, corrupt: bool):
    return _perturb(data) if corrupt else copy.deepcopy(data)


# -- criteria ----------------------------------------------------------------------

def check_octant_tables(corrupt: bool = False) -> CheckReport:
    rep = CheckReport("octant_tables", 1)
    octant_rows = _reference({tag: list(row) for tag, row in fx.OCTANT_ROWS.items()}, corrupt)
    walks = [excursions(octant_g2(k), 12) for k in range(3)]
    for k, tag in enumerate(fx.OCTANT_TAGS):
        rep.compare(f"{tag} against walks", walks[k][:10], octant_rows[tag])
    for k in (1, 2):
        rep.compare(f"bt_power(T3, {k})", bt_power(walks[0], k), walks[k])
    rep.details.setdefault("checked", "3 rows to n=9, transforms to n=12")
    return rep


def check_quadrant_tables(corrupt: bool = False) -> CheckReport:
    rep = CheckReport("quadrant_tables", 2)
    quadrant_rows = _reference({tag: list(row) for tag, row in fx.QUADRANT_ROWS.items()}, corrupt)
    walks = [excursions(quadrant_sl3(k), 12) for k in range(4)]
    for k, tag in enumerate(fx.QUADRANT_TAGS):
        rep.compare(f"{tag} against walks", walks[k][:9], quadrant_rows[tag])
    for k in range(3):
        rep.compare(f"bt_power(S{k}, 1)", bt_power(walks[k], 1), walks[k + 1])
    return rep


def check_ct_engines(corrupt: bool = False) -> CheckReport:
    rep = CheckReport("ct_engines", 3)
    t3 = _reference(excursions(octant_g2(0), 12), corrupt)
    rep.compare("G2 constant terms", ct_sequence(g2_spec(), 12), t3)
    for k in range(4):
        rep.compare(f"quadrant constant terms k={k}", ct_sequence(quadrant_spec(k), 12),
                    excursions(quadrant_sl3(k), 12))
    return rep


def check_t3_recurrence(corrupt: bool = False) -> CheckReport:
    rep = CheckReport("t3_recurrence", 4)
    rec = fx.paper_operator("T3_rec")
    initial = _reference(list(fx.INITIAL_TERMS["T3_rec"]), corrupt)
    walk = excursions(octant_g2(0), 50)
    rep.compare("unroll against walks", unroll(rec, initial, 50), walk)
    guessed = guess_recurrence(walk[:40], 3, 2)
    if guessed != rec:
        rep.fail("guess_recurrence", expected=rec.normalized().coeffs, got=guessed)
    return rep


def check_recurrences(corrupt: bool = False) -> CheckReport:
    rep = CheckReport("recurrences", 5)
    rows = {"E3": list(fx.OCTANT_ROWS["A108307"])}
    rows.update({f"S{k}": list(fx.QUADRANT_ROWS[tag]) for k, tag in enumerate(fx.QUADRANT_TAGS)})
    rows = _reference(rows, corrupt)
    e3 = unroll(fx.paper_operator("E3_rec"), fx.INITIAL_TERMS["E3_rec"], 30)
    rep.compare("E3 recurrence against table", e3[:10], rows["E3"])
    rep.compare("E3 recurrence against walks", e3, excursions(octant_g2(1), 30))
    s3 = unroll(fx.paper_operator("S3_rec"), fx.INITIAL_TERMS["S3_rec"], 30)
    rep.compare("S3 recurrence against table", s3[:9], rows["S3"])
    for k in range(4):
        walk = excursions(quadrant_sl3(k), 30)
        got = unroll(fx.uniform_rec(k), walk[:4], 30)
        rep.compare(f"uniform recurrence k={k} against table", got[:9], rows[f"S{k}"])
        rep.compare(f"uniform recurrence k={k} against walks", got, walk)
    rep.compare("S3 recurrence against walks", s3, excursions(quadrant_sl3(3), 30))
    quotient = shift_right_divide(fx.uniform_rec(3), fx.paper_operator("S3_rec"))
    if quotient is None:
        rep.fail("shift_right_divide", expected="left multiple", got="nonzero remainder")
    else:
        rep.details.setdefault("quotient_order", str(quotient.order))
    return rep


def check_operators(corrupt: bool = False) -> CheckReport:
    rep = CheckReport("operators", 6)
    op = fx.paper_operator
    if diffop_mul(op("Q"), op("L3")) != op("L6"):
        rep.fail("Q*L3 = L6", expected="equal", got="different")
    if diffop_mul(op("L2"), op("L1")) != op("L3"):
        rep.fail("L2*L1 = L3", expected="equal", got="different")
    t3 = t3_reference(60)
    if corrupt:
        t3[30] += 1
    res = diffop_apply(op("L3"), series_of(t3))
    if res.order < 57:
        rep.fail("L3 applied to T3", expected="order >= 57", got=res.order)
    elif not res.truncate(57).is_zero():
        rep.fail("L3 applied to T3", expected="0 to order 57", got=f"nonzero at t^{res.valuation()}")
    return rep


def check_closed_forms(corrupt: bool = False) -> CheckReport:
    rep = CheckReport("closed_forms", 7)
    targets = [("t3_hypergeometric_simple", 60), ("t3_hypergeometric_integral", 60),
               ("t3_weierstrass", 40), ("baxter_gf", 60)]
    for name, order in targets:
        reference = None
        if corrupt and name == "baxter_gf":
            reference = _perturb(baxter_reference(order))
        r = verify_closed_form(name, order, reference)
        if not r.ok:
            rep.fail(name, index=r.mismatch, expected=r.expected, got=r.got, notes="; ".join(r.notes))
    return rep


def check_asymptotics(corrupt: bool = False) -> CheckReport:
    rep = CheckReport("asymptotics", 8)
    terms = t3_reference(4000)
    if corrupt:
        terms[2000] *= 2
    r = asymptotic_estimate([1000], terms)
    dev = r.deviations[1000]
    rep.details["estimate"] = f"{r.extrapolated[1000]:.4f}"
    rep.details["target"] = f"{r.target:.4f}"
    rep.details["relative_deviation"] = f"{dev:.2e}"
    if dev > 0.01:
        rep.fail("richardson", expected="within 1%", got=f"{dev:.2%}", monotone=r.monotone)
    return rep


def check_oracles(corrupt: bool = False) -> CheckReport:
    rep = CheckReport("oracles", 9)
    rows = _reference({"T3": compute("T3", 11), "E3": compute("E3", 11), "NC3": compute("NC3", 11)},
                      corrupt)
    ns = range(11)
    rep.compare("partitions, no singleton, no enhanced 3-crossing",
                [count_set_partitions(n, forbid_singletons=True, max_enhanced_crossing=3) for n in ns],
                rows["T3"][:11])
    rep.compare("partitions, no enhanced 3-crossing",
                [count_set_partitions(n, max_enhanced_crossing=3) for n in ns], rows["E3"][:11])
    # partitions of [n + 1] with no 3-crossing
    rep.compare("partitions of [n+1], no 3-crossing",
                [count_set_partitions(n + 1, max_crossing=3) for n in range(10)], rows["NC3"][:10])
    rep.compare("inversion sequences, no weakly decreasing triple",
                [count_inversion_sequences(n, forbid_wdec3=True) for n in ns], rows["E3"][:11])
    rep.compare("hesitating, empty shape", [count_tableau_walks("hesitating", n) for n in ns],
                rows["E3"][:11])
    rep.compare("hesitating without the row-1 zero step",
                [count_tableau_walks("hesitating", n, exclude_row1_zero=True) for n in ns],
                rows["T3"][:11])
    rep.compare("vacillating, empty shape", [count_tableau_walks("vacillating", n) for n in ns],
                rows["NC3"][:11])
    for kind, k, excl in (("hesitating", 1, False), ("hesitating", 0, True), ("vacillating", 2, False)):
        octant = count_endpoints(octant_g2(k), 10)
        for n in ns:
            tab = tableau_endpoint_counts(kind, n, exclude_row1_zero=excl)
            mapped = {(r + s, s): c for (r, s), c in octant[n].counts.items()}
            if {sh: c for sh, c in tab.items() if c} != mapped:
                rep.fail(f"{kind} endpoints against octant_g2({k})", index=n)
                break
    fixed = [count_inversion_sequences(n, forbid_wdec3=True, forbid_fixed=True) for n in range(8)]
    t3 = compute("T3", 8)
    rep.details["forbid_fixed (not gated)"] = {"counts": [str(c) for c in fixed],
                                               "T3": [str(c) for c in t3], "agrees": fixed == t3}
    return rep


def check_branching(corrupt: bool = False) -> CheckReport:
    rep = CheckReport("branching", 10)
    table = expand_branching_gf(20)
    if corrupt:
        table.m[0, 0, 3, 1] += 1
    for r in (trivial_multiplicity_check(table), dimension_check(table)):
        if not r.ok:
            rep.fail(r.name, first=r.mismatches[0])
    for k in range(4):
        r = verify_axis_excursions(k, 12)
        if not r.ok:
            rep.fail(r.name, first=r.mismatches[0])
    for k in range(3):
        for p in range(4):
            for q in range(4 - p):
                r = verify_restriction(k, p, q, 10, table)
                if not r.ok:
                    rep.fail(r.name, first=r.mismatches[0])
    poly = octant_polynomials_check(3)
    if not poly.ok:
        rep.fail(poly.name, first=poly.mismatches[0])
    rep.details["flagged_table_cells"] = [[str(x) for x in f] for f in poly.flagged]
    return rep


def check_rect_tableaux(corrupt: bool = False) -> CheckReport:
    rep = CheckReport("rect_tableaux", 11)
    quadrant_rows = _reference({tag: list(row) for tag, row in fx.QUADRANT_ROWS.items()}, corrupt)
    variants = (("s0", "A151366"), ("s1a", "A236408"), ("s1b", "A236408"), ("s2", "A001181"))
    values = {}
    for variant, tag in variants:
        values[variant] = [quadrant_sum(variant, n) for n in range(9)]
        rep.compare(f"{variant} against {tag}", values[variant], quadrant_rows[tag])
    rep.compare("s1a against s1b", values["s1a"], values["s1b"])
    # the strip recursion against cell-by-cell filling inside the m <= 4 guard
    for m in range(1, 5):
        for content in ([1] * (3 * m), [3] * m, [2, 1] * m, [1, 2, 3] * (m // 2) + [3] * (m % 2)):
            a, b = count_rect_tableaux(m, content), count_rect_tableaux_brute(m, content)
            if a != b:
                rep.fail("strip recursion against brute force", m=m, content=content, expected=b, got=a)
    return rep


def check_examples(corrupt: bool = False) -> CheckReport:
    rep = CheckReport("examples", 12)
    for name in ("catalan", "catalan3d", "c2spin"):
        want = _reference(compute(name, 9, "formula"), corrupt and name == "catalan")
        rep.compare(f"{name} walks against formula", compute(name, 9, "walk"), want)
    return rep


CHECKS: dict[str, Callable[..., CheckReport]] = {
    "octant_tables": check_octant_tables,
    "quadrant_tables": check_quadrant_tables,
    "ct_engines": check_ct_engines,
    "t3_recurrence": check_t3_recurrence,
    "recurrences": check_recurrences,
    "operators": check_operators,
    "closed_forms": check_closed_forms,
    "asymptotics": check_asymptotics,
    "oracles": check_oracles,
    "branching": check_branching,
    "rect_tableaux": check_rect_tableaux,
    "examples": check_examples,
}

CRITERIA = {name: i for i, name in enumerate(CHECKS, start=1)}

# filter groups accepted by --only, besides individual check names
GROUPS = {
    "walks": ("octant_tables", "quadrant_tables", "examples"),
    "ct": ("ct_engines",),
    "rec": ("t3_recurrence", "recurrences"),
    "ode": ("operators",),
    "closedform": ("closed_forms", "asymptotics"),
    "oracle": ("oracles", "rect_tableaux"),
    "branch": ("branching",),
}


def select(only=None) -> list[str]:
    if not only:
        return sorted(CHECKS)
    names = set()
    for item in ([only] if isinstance(only, str) else only):
        if item in CHECKS:
            names.add(item)
        elif item in GROUPS:
            names.update(GROUPS[item])
        else:
            raise KeyError(f"unknown check or group {item!r}")
    return sorted(names)


def check_all(only=None, corrupt: str | None = None) -> list[CheckReport]:
    """Run the selected checks; reports come back sorted by name."""
    if corrupt is not None and corrupt not in CHECKS:
        raise KeyError(f"unknown check {corrupt!r}")
    reports = [_run(name, name == corrupt) for name in select(only)]
    return sorted(reports, key=lambda r: r.name)


def _run(name: str, corrupt: bool) -> CheckReport:
    try:
        return CHECKS[name](corrupt=corrupt)
    except Exception as exc:  # an engine error is a failed check, not a crash
        rep = CheckReport(name, CRITERIA[name])
        rep.fail("error", type=type(exc).__name__, message=exc)
        return rep
