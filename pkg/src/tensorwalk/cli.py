"""Command-line front end.

Output is JSON by default (``--format csv`` for flat tables).  Integers are
written as decimal strings.  Exit status: 0 success, 1 a check or
verification failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import fixtures as fx
from .branching import expand_branching_gf, verify_axis_excursions, verify_restriction
from .checks import CHECKS, GROUPS, check_all
from .closedforms import CLOSED_FORM_NAMES, asymptotic_estimate, verify_closed_form
from .combinat import (QUADRANT_VARIANTS, count_inversion_sequences, count_rect_tableaux,
                       count_set_partitions, count_tableau_walks, quadrant_sum)
from .holonomic import (DiffOp, PRecurrence, check_recurrence, diffop_apply, diffop_mul,
                        guess_recurrence, ode_to_recurrence, unroll)
from .laurent import CTSpec, ct_sequence, g2_spec, quadrant_spec, sl2_spec
from .sequences import ENGINES, compute
from .transforms import bt_power, series_of
from .walks import BUILTIN_NAMES, WalkConfig, axis_sum, builtin_config, count_endpoints


class UsageError(Exception):
    pass


class Result:
    """Payload plus exit status; ``rows`` is the CSV view when there is one."""

    def __init__(self, payload, ok: bool = True, rows: list[list] | None = None):
        self.payload = payload
        self.ok = ok
        self.rows = rows


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _strs(values) -> list[str]:
    return [str(v) for v in values]


def _seq_rows(values) -> list[list]:
    return [["n", "value"]] + [[n, str(v)] for n, v in enumerate(values)]


def _sequence_arg(args, terms: int) -> list[int]:
    if getattr(args, "values", None):
        return _ints(args.values)
    if getattr(args, "seq", None):
        return compute(args.seq, terms)
    raise UsageError("give --values or --seq")


def _operator(name: str, k: int | None = None, kind=None):
    try:
        op = fx.paper_operator(name, k)
    except KeyError:
        raise UsageError(f"unknown operator {name!r}; choose from {', '.join(fx.OPERATOR_NAMES)}")
    if kind is not None and not isinstance(op, kind):
        raise UsageError(f"{name} is not a {kind.__name__}")
    return op


# -- subcommands ------------------------------------------------------------------

def cmd_seq(args) -> Result:
    values = compute(args.name, args.terms, args.engine)
    return Result(_strs(values), rows=_seq_rows(values))


def _walk_config(args) -> WalkConfig:
    if args.config:
        return WalkConfig.load(args.config)
    return builtin_config(args.builtin, args.k)


def cmd_walk(args) -> Result:
    config = _walk_config(args)
    if args.mode == "excursions":
        values = [t[config.start] for t in count_endpoints(config, args.n)]
        return Result(_strs(values), rows=_seq_rows(values))
    if args.mode == "axis":
        values = axis_sum(config, 0, args.n)
        return Result(_strs(values), rows=_seq_rows(values))
    table = count_endpoints(config, args.n)[args.n]
    items = sorted(table.counts.items())
    payload = {"length": args.n, "endpoints": [[p[0], p[1], str(c)] for p, c in items]}
    return Result(payload, rows=[["x", "y", "count"]] + [[p[0], p[1], str(c)] for p, c in items])


def cmd_ct(args) -> Result:
    if args.config:
        with open(args.config) as fh:
            spec = CTSpec.from_json(fh.read())
    elif args.builtin == "g2":
        spec = g2_spec()
    elif args.builtin == "quadrant":
        spec = quadrant_spec(args.k)
    else:
        spec = sl2_spec()
    values = ct_sequence(spec, args.n)
    return Result(_strs(values), rows=_seq_rows(values))


def cmd_bt(args) -> Result:
    values = bt_power(_sequence_arg(args, args.terms), args.power)
    return Result(_strs(values), rows=_seq_rows(values))


def cmd_rec(args) -> Result:
    if args.action == "unroll":
        rec = _operator(args.name, args.k, PRecurrence)
        initial = _ints(args.initial) if args.initial else list(fx.INITIAL_TERMS.get(args.name, ()))
        if not initial:
            raise UsageError("give --initial for this recurrence")
        values = unroll(rec, initial, args.n)
        return Result(_strs(values), rows=_seq_rows(values))
    if args.action == "verify":
        rec = _operator(args.name, args.k, PRecurrence)
        seq = _sequence_arg(args, args.terms)
        bad = check_recurrence(rec, seq)
        return Result({"ok": bad is None, "first_failure": bad, "terms": len(seq)}, ok=bad is None)
    seq = _sequence_arg(args, args.terms)
    rec = guess_recurrence(seq, args.max_order, args.max_degree)
    payload = {"found": rec is not None}
    if rec is not None:
        payload.update(rec.to_json(), text=str(rec), order=rec.order, degree=rec.degree)
    return Result(payload, ok=rec is not None)


def cmd_ode(args) -> Result:
    if args.action == "mul":
        a, b = _operator(args.left, kind=DiffOp), _operator(args.right, kind=DiffOp)
        prod = diffop_mul(a, b)
        payload = prod.to_json()
        if args.compare:
            payload["equals"] = prod == _operator(args.compare, kind=DiffOp)
            return Result(payload, ok=payload["equals"])
        return Result(payload)
    op = _operator(args.name, kind=DiffOp)
    if args.action == "to-rec":
        rec = ode_to_recurrence(op)
        return Result({**rec.to_json(), "text": str(rec)})
    seq = _sequence_arg(args, args.order + 1)
    res = diffop_apply(op, series_of(seq))
    v = res.valuation()
    payload = {"order": res.order, "valuation": v, "zero": v is None, "coeffs": res.to_json()}
    return Result(payload, rows=_seq_rows(res.coeffs))


def cmd_closedform(args) -> Result:
    rep = verify_closed_form(args.name, args.order)
    return Result(rep.to_dict(), ok=rep.ok)


def cmd_asym(args) -> Result:
    rep = asymptotic_estimate(_ints(args.samples))
    payload = rep.to_dict()
    rows = [["n", "r_n", "richardson", "relative_deviation"]]
    for n in rep.samples:
        rows.append([n, repr(rep.ratios[n]), repr(rep.extrapolated[n]), repr(rep.deviations[n])])
    return Result(payload, rows=rows)


def cmd_oracle(args) -> Result:
    if args.kind == "partitions":
        count = count_set_partitions(args.n, args.no_singletons, args.max_crossing,
                                     args.max_enhanced_crossing)
    elif args.kind == "inversions":
        count = count_inversion_sequences(args.n, args.forbid_wdec3, args.forbid_fixed)
    elif args.kind == "tableaux":
        count = count_tableau_walks(args.tableau, args.n, args.height, _ints(args.shape or ""),
                                    args.exclude_row1_zero, args.remove_first)
    elif args.variant:
        count = quadrant_sum(args.variant, args.n)
    elif args.content:
        count = count_rect_tableaux(args.m, _ints(args.content))
    else:
        raise UsageError("sst needs --variant or --m with --content")
    return Result({"count": str(count)}, rows=[["count"], [str(count)]])


def cmd_branch(args) -> Result:
    if args.action == "table":
        table = expand_branching_gf(args.max_deg)
        d = table.to_dict()
        return Result(d, rows=[d["columns"]] + d["rows"])
    if args.action == "verify-axis":
        rep = verify_axis_excursions(args.k, args.n)
    else:
        rep = verify_restriction(args.k, args.p, args.q, args.n)
    return Result(rep.to_dict(), ok=rep.ok)


def cmd_check(args) -> Result:
    only = [x for x in args.only.split(",") if x] if args.only else None
    reports = check_all(only, args.corrupt)
    rows = [["name", "criterion", "status"]] + [[r.name, r.criterion, r.status] for r in reports]
    return Result([r.to_dict() for r in reports], ok=all(r.ok for r in reports), rows=rows)


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tensorwalk", description="Walk counting and holonomic sequence tools.")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("seq", help="terms of a named sequence")
    s.add_argument("name")
    s.add_argument("--terms", type=int, default=10)
    s.add_argument("--engine", choices=ENGINES, default="walk")
    s.set_defaults(func=cmd_seq)

    s = sub.add_parser("walk", help="walk counts for a built-in or JSON configuration")
    s.add_argument("--builtin", choices=BUILTIN_NAMES, default="octant_g2")
    s.add_argument("--config", help="path to a WalkConfig JSON file")
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--n", type=int, default=10)
    s.add_argument("--mode", choices=("excursions", "axis", "endpoints"), default="excursions")
    s.set_defaults(func=cmd_walk)

    s = sub.add_parser("ct", help="constant terms CT(delta * kernel^n)")
    s.add_argument("--builtin", choices=("g2", "quadrant", "sl2"), default="g2")
    s.add_argument("--config", help="path to a CTSpec JSON file")
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--n", type=int, default=10)
    s.set_defaults(func=cmd_ct)

    s = sub.add_parser("bt", help="binomial transform")
    s.add_argument("--power", type=int, default=1)
    s.add_argument("--values")
    s.add_argument("--seq")
    s.add_argument("--terms", type=int, default=10)
    s.set_defaults(func=cmd_bt)

    s = sub.add_parser("rec", help="P-recurrences")
    s.add_argument("action", choices=("unroll", "verify", "guess"))
    s.add_argument("--name", default="T3_rec")
    s.add_argument("--k", type=int)
    s.add_argument("--initial")
    s.add_argument("--n", type=int, default=20)
    s.add_argument("--values")
    s.add_argument("--seq")
    s.add_argument("--terms", type=int, default=40)
    s.add_argument("--max-order", type=int, default=3)
    s.add_argument("--max-degree", type=int, default=2)
    s.set_defaults(func=cmd_rec)

    s = sub.add_parser("ode", help="differential operators")
    s.add_argument("action", choices=("apply", "to-rec", "mul"))
    s.add_argument("--name", default="L3")
    s.add_argument("--left")
    s.add_argument("--right")
    s.add_argument("--compare", help="operator the product should equal")
    s.add_argument("--values")
    s.add_argument("--seq")
    s.add_argument("--order", type=int, default=20)
    s.set_defaults(func=cmd_ode)

    s = sub.add_parser("closedform", help="check a closed form against its recurrence")
    s.add_argument("action", choices=("verify",))
    s.add_argument("--name", choices=CLOSED_FORM_NAMES, required=True)
    s.add_argument("--order", type=int, default=60)
    s.set_defaults(func=cmd_closedform)

    s = sub.add_parser("asym", help="T3 asymptotic constant estimates")
    s.add_argument("--samples", default="500,1000,2000")
    s.set_defaults(func=cmd_asym)

    s = sub.add_parser("oracle", help="brute-force enumerations")
    s.add_argument("kind", choices=("partitions", "inversions", "tableaux", "sst"))
    s.add_argument("--n", type=int, default=5)
    s.add_argument("--no-singletons", action="store_true")
    s.add_argument("--max-crossing", type=int)
    s.add_argument("--max-enhanced-crossing", type=int)
    s.add_argument("--forbid-wdec3", action="store_true")
    s.add_argument("--forbid-fixed", action="store_true")
    s.add_argument("--tableau", choices=("hesitating", "vacillating"), default="hesitating")
    s.add_argument("--height", type=int, default=2)
    s.add_argument("--shape", help="final shape, e.g. 2,1")
    s.add_argument("--exclude-row1-zero", action="store_true")
    s.add_argument("--remove-first", action="store_true")
    s.add_argument("--variant", choices=QUADRANT_VARIANTS)
    s.add_argument("--m", type=int)
    s.add_argument("--content")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("branch", help="G2 to SL(3) branching")
    s.add_argument("action", choices=("table", "verify-axis", "verify-restriction"))
    s.add_argument("--max-deg", type=int, default=4)
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--p", type=int, default=0)
    s.add_argument("--q", type=int, default=0)
    s.add_argument("--n", type=int, default=10)
    s.set_defaults(func=cmd_branch)

    s = sub.add_parser("check", help="run the regression suite")
    s.add_argument("--only", help=f"comma-separated checks or groups ({', '.join(sorted(GROUPS))})")
    s.add_argument("--corrupt", choices=sorted(CHECKS), help="perturb one check's reference data")
    s.set_defaults(func=cmd_check)
    return p


def _default(o):
    if isinstance(o, Fraction):
        return str(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def render(result: Result, fmt: str) -> str:
    if fmt == "csv":
        rows = result.rows
        if rows is None:
            raise UsageError("this command has no CSV form; use --format json")
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    return json.dumps(result.payload, indent=2, default=_default) + "\n"


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
        text = render(result, args.format)
    except (UsageError, KeyError, ValueError, FileNotFoundError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"error: {msg}\n")
        return 2
    out.write(text)
    return 0 if result.ok else 1


def main() -> None:
    sys.exit(run())
