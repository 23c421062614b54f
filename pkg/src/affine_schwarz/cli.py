"""Command-line driver: ``verify``, ``fit``, ``dihedral``, ``syzygy``,
``report`` and ``catalog``.

Structured output is one JSON object per line with sorted keys and every
rational written as ``"p/q"``; the same inputs always give the same bytes.
The exit status counts unrepaired mismatches (capped at 255), plus repairs
under ``--strict``.
"""

import argparse
import json
import random
import sys
from fractions import Fraction

from .catalog import DIHEDRAL, J_LABELS, OTHER, REGULAR, case_to_document, get_case
from .dihedral import (ProductParams, default_grid, degree_check, degree_drop_coefficient,
                       f_st, lemma35_g, lemma36_values, ode_residual,
                       product_series_lemma31, recurrence_check)
from .errors import (ConfigError, DegreeMismatch, Inconsistent, InternalInconsistency,
                     NonTerminating, SchwarzError, Underdetermined)
from .exact import as_fraction, first_mismatch
from .hypergeom import HGParams, gauss_series
from .invariants import fit_invariant
from .verify import MATCH, MISMATCH, REPAIRED, CaseVerifier, poly_diff, poly_doc

DEFAULT_N_RANGE = (2, 7)
G_ALPHAS = (Fraction(1, 3), Fraction(2, 5), Fraction(1, 7))
PRODUCT_SEED = 20240229
PRODUCT_COUNT = 50
PRODUCT_ORDER = 12


def q(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


# -- configuration -------------------------------------------------------------

def parse_rational(text):
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def parse_n_range(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    try:
        lo, hi = int(lo), int(hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected integers in {text!r}") from exc
    if lo < 2 or hi < lo:
        raise argparse.ArgumentTypeError(f"need 2 <= LO <= HI, got {text!r}")
    return lo, hi


def selected_cases(args, default=REGULAR + OTHER):
    labels = []
    for item in args.case or []:
        labels += [part for part in item.split(",") if part]
    if not labels:
        labels = list(DIHEDRAL) + list(default)
    known = set(DIHEDRAL + REGULAR + OTHER)
    for label in labels:
        if label not in known:
            raise ConfigError(f"unknown case label {label!r}")
    if args.n is not None:
        ns = [args.n]
    else:
        lo, hi = args.n_range or DEFAULT_N_RANGE
        ns = list(range(lo, hi + 1))
    cases = []
    for label in labels:
        if label in DIHEDRAL:
            cases += [get_case(label, n) for n in ns]
        else:
            cases.append(get_case(label))
    return cases


def selected_rows(args):
    return [args.row] if args.row else [1, 2, 3, 4]


# -- suites ---------------------------------------------------------------------

def verify_records(args):
    out = []
    for case in selected_cases(args):
        cv = CaseVerifier(case, args.order)
        for r in selected_rows(args):
            out.append(cv.verify_row(r).to_dict())
        if case.integral:
            for r in selected_rows(args):
                out.append(cv.curve_equation(r).to_dict())
                out.append(cv.inverse_map(r).to_dict())
            out.append(cv.syzygy().to_dict())
    return out


def syzygy_records(args):
    out = []
    for case in selected_cases(args, default=REGULAR):
        if not case.integral:
            raise ConfigError(f"{case.name} has a fractional k-triple; no polynomial syzygy")
        out.append(CaseVerifier(case, args.order).syzygy().to_dict())
    return out


def fit_record(args):
    if not args.case:
        raise ConfigError("fit needs --case")
    label = args.case[0]
    case = get_case(label, args.n) if label in DIHEDRAL else get_case(label)
    if case.label in DIHEDRAL and args.n is None:
        raise ConfigError("dihedral cases need --n")
    cv = CaseVerifier(case, args.order)
    row = case.rows[(args.row or 1) - 1]
    params, _ = cv.row_params(row)
    u, v = cv.pair(params)
    kind, spec = cv.target_spec(row, args.which)
    printed = case.poly(args.which)
    fitted = fit_invariant(row, printed.degree, cv.target(spec), u, v)
    return {"suite": "fit", "label": case.label, "n": case.n, "row": row.index,
            "which": args.which, "order": cv.order, "target": kind,
            "status": MATCH if fitted == printed else REPAIRED,
            "fitted": poly_doc(fitted), "diff": poly_diff(fitted, printed)}


def _point_doc(p):
    return {"alpha": q(p.alpha), "s": q(p.s), "t": q(p.t)}


def dihedral_point_records(p, margin=15):
    out = []
    base = {**_point_doc(p)}
    try:
        deg = degree_check(p, margin)
        out.append({**base, "suite": "degree", "status": MATCH,
                    "detail": {"degree": deg, "checked_through": deg + margin}})
    except DegreeMismatch as exc:
        out.append({**base, "suite": "degree", "status": MISMATCH,
                    "detail": {"message": str(exc),
                               "coefficients": [q(c) for c in exc.coefficients]}})
        deg = p.expected_degree
    except InternalInconsistency as exc:
        out.append({**base, "suite": "degree", "status": MISMATCH,
                    "detail": {"message": str(exc)}})
        return out
    w = f_st(p, deg + margin)
    res = ode_residual(p, w)
    out.append({**base, "suite": "ode", "status": MATCH if res.is_zero() else MISMATCH,
                "detail": {"checked_through": w.order - 3,
                           "first_nonzero": None if res.is_zero() else q(res.x_valuation)}})
    rec = recurrence_check(p, w)
    out.append({**base, "suite": "recurrence", "status": MATCH if rec else MISMATCH,
                "detail": {"checked_through": w.order, "failing_n": rec.failing_n,
                           "relation": rec.relation}})
    if p.s - p.t + 1 >= 1:
        drop = degree_drop_coefficient(p)
        m = int(2 * p.s + 1)
        ok = drop == 0 and w.d[m] == 0
        out.append({**base, "suite": "degree-drop", "status": MATCH if ok else MISMATCH,
                    "detail": {"n": m, "value": q(drop), "d_n": q(w.d[m])}})
    for variant, member in (("i", p.s - p.t + 1 >= 1), ("ii", p.t - p.s >= 1)):
        try:
            val = lemma36_values(p.alpha, p.s, p.t, variant)
        except NonTerminating:
            continue
        detail = {"variant": variant, "value": q(val), "member": member}
        ok = (val == 0) if member else True
        if variant == "i":
            g = lemma35_g(p.alpha + 2 * p.t - 1, p.s + p.t + 1, p.s - p.t + 1)
            detail["g_substitution"] = q(g)
            ok = ok and g == val
        out.append({**base, "suite": "collapsed-3f2", "status": MATCH if ok else MISMATCH,
                    "detail": detail})
    return out


def g_records(alphas=G_ALPHAS):
    out = []
    for i in range(1, 4):
        for j in range(1, 4):
            vals = {q(a): q(lemma35_g(a, i, j)) for a in alphas}
            ok = all(v == "0/1" for v in vals.values())
            out.append({"suite": "g-3f2", "i": i, "j": j, "member": True,
                        "status": MATCH if ok else MISMATCH, "detail": {"values": vals}})
    for i, j in [(0, k) for k in (1, 2, 3)] + [(k, 0) for k in (1, 2, 3)]:
        vals = {q(a): q(lemma35_g(a, i, j)) for a in alphas}
        ok = any(v != "0/1" for v in vals.values())
        out.append({"suite": "g-3f2", "i": i, "j": j, "member": False,
                    "status": MATCH if ok else MISMATCH, "detail": {"values": vals}})
    return out


def random_product_params(rng):
    """Six rationals, none an integer, so every lower parameter is admissible."""
    def one():
        while True:
            x = Fraction(rng.randint(-30, 30), rng.randint(2, 9))
            if x.denominator != 1:
                return x
    return tuple(one() for _ in range(6))


def product_records(count=PRODUCT_COUNT, order=PRODUCT_ORDER, seed=PRODUCT_SEED):
    rng = random.Random(seed)
    out = []
    for k in range(count):
        a, b, c, d, e, f = params = random_product_params(rng)
        lhs = product_series_lemma31(a, b, c, d, e, f, order)
        rhs = gauss_series(HGParams(a, b, c), order) * gauss_series(HGParams(d, e, f), order)
        bad = first_mismatch(lhs, rhs)
        out.append({"suite": "product-4f3", "instance": k, "params": [q(x) for x in params],
                    "status": MATCH if bad is None else MISMATCH,
                    "detail": {"order": order,
                               "first_mismatch": None if bad is None else q(bad[0])}})
    return out


def dihedral_records(args):
    if args.grid_default or not (args.alpha or args.s is not None or args.t is not None):
        points = default_grid()
        extra = g_records() + product_records()
    else:
        if not args.alpha or args.s is None or args.t is None:
            raise ConfigError("give --alpha, --s and --t together, or --grid-default")
        points = [ProductParams(a, args.s, args.t) for a in args.alpha]
        extra = []
    out = []
    for p in points:
        out += dihedral_point_records(p)
    return out + extra


def catalog_records(args):
    return [dict(case_to_document(c), suite="catalog") for c in selected_cases(args)]


# -- output -----------------------------------------------------------------------

def _failures(records, strict):
    bad = 0
    for rec in records:
        statuses = [rec.get("status")] + [i["status"] for i in rec.get("identities", [])]
        bad += sum(1 for s in statuses if s == MISMATCH or (strict and s == REPAIRED))
    return bad


def _text_line(rec):
    suite = rec.get("suite")
    if suite == "verify":
        parts = [f"{i['j']}:{i['status']}" for i in rec["identities"]]
        head = f"verify {_name(rec)} row {rec['row']} order {rec['order']}: " + " ".join(parts)
        notes = [f"    {i['j']} {i['detail'].get('kind', '')}: {_brief(i['detail'])}"
                 for i in rec["identities"] if i["status"] != MATCH]
        return "\n".join([head] + notes)
    if suite in ("curve", "inverse", "syzygy"):
        where = f" row {rec['row']}" if rec.get("row") else ""
        return f"{suite} {_name(rec)}{where}: {rec['status']} ({rec['detail'].get('identity')})"
    if suite == "fit":
        return (f"fit {_name(rec)} row {rec['row']} P_{rec['which']} ({rec['target']} target): "
                f"{rec['fitted']['text']}\n    diff vs catalog: {json.dumps(rec['diff'], sort_keys=True) if rec['diff'] else 'none'}")
    if suite == "catalog":
        return json.dumps(rec, sort_keys=True)
    keys = ("alpha", "s", "t", "i", "j", "instance")
    where = " ".join(f"{k}={rec[k]}" for k in keys if k in rec)
    return f"{suite} {where}: {rec['status']} {_brief(rec.get('detail', {}))}"


def _name(rec):
    return f"{rec['label']}(n={rec['n']})" if rec.get("n") is not None else rec["label"]


def _brief(detail):
    keep = {k: v for k, v in detail.items() if k not in ("printed", "fitted", "f")}
    return json.dumps(keep, sort_keys=True)


def emit(records, fmt, stream):
    for rec in records:
        if fmt == "structured":
            stream.write(json.dumps(rec, sort_keys=True) + "\n")
        else:
            stream.write(_text_line(rec) + "\n")


# -- entry point --------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--case", action="append", metavar="LABEL",
                        help="case label (repeatable or comma-separated)")
    common.add_argument("--n", type=int, help="dihedral parameter")
    common.add_argument("--n-range", type=parse_n_range, metavar="LO..HI",
                        help="dihedral parameters (default 2..7)")
    common.add_argument("--row", type=int, choices=[1, 2, 3, 4])
    common.add_argument("--order", type=int, help="x-order (default 2 deg P_inf + 20)")
    common.add_argument("--strict", action="store_true", help="count repairs as failures")
    common.add_argument("--format", choices=["text", "structured"], default="text")
    common.add_argument("--out", metavar="PATH", help="write the report here")

    parser = argparse.ArgumentParser(prog="affine-schwarz",
                                     description="Exact checks of affine Schwarz map identities.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("verify", parents=[common], help="identities, curve equations, inverse maps")
    fit = sub.add_parser("fit", parents=[common], help="recover one invariant from its series")
    fit.add_argument("--which", choices=list(J_LABELS), default="0")
    dih = sub.add_parser("dihedral", parents=[common], help="f_st products and 3F2 vanishing checks")
    dih.add_argument("--alpha", type=parse_rational, action="append")
    dih.add_argument("--s", type=parse_rational)
    dih.add_argument("--t", type=parse_rational)
    dih.add_argument("--grid-default", action="store_true")
    sub.add_parser("syzygy", parents=[common], help="polynomial syzygy of each case")
    rep = sub.add_parser("report", parents=[common], help="every suite")
    rep.set_defaults(alpha=None, s=None, t=None, grid_default=True)
    sub.add_parser("catalog", parents=[common], help="dump catalogued cases")
    return parser


def run(args):
    if args.command == "verify":
        return verify_records(args)
    if args.command == "fit":
        return [fit_record(args)]
    if args.command == "dihedral":
        return dihedral_records(args)
    if args.command == "syzygy":
        return syzygy_records(args)
    if args.command == "catalog":
        return catalog_records(args)
    return verify_records(args) + dihedral_records(args)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        records = run(args)
    except (ConfigError, Inconsistent, Underdetermined) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SchwarzError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            emit(records, args.format, fh)
    else:
        emit(records, args.format, sys.stdout)
    return min(_failures(records, args.strict), 255)


if __name__ == "__main__":
    sys.exit(main())
