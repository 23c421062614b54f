"""Checks ``P_j(u(x), v(x)) = f_j(x)`` for every catalog row, the image-curve
equations and inverse maps, and the syzygy. Catalogued entries that fail are repaired when the data
pins down a unique fix.

Identities are compared coefficient by coefficient through a fixed x-order.
A mismatch never raises: it ends up in the :class:`VerificationReport`.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from math import ceil

from .catalog import J_LABELS, SIGN_CASES, FjSpec
from .errors import (Inconsistent, InternalInconsistency, NonIntegerExponent,
                     Underdetermined, ZeroExponent)
from .exact import PuiseuxSeries, binomial_series, first_mismatch
from .hypergeom import HGParams, kummer_pair
from .invariants import eval_poly_on_series, fit_invariant, syzygy_residual

MATCH, MISMATCH, REPAIRED = "match", "mismatch", "repaired"


@dataclass(frozen=True)
class ExponentTriple:
    mu0: Fraction
    mu1: Fraction
    mu_inf: Fraction
    sign_case: str
    exchanged: bool = False  # sign of mu_inf opposite to the case pattern (a <-> b)


_PATTERN = {(1, 1): ("i", 1), (1, -1): ("ii", -1), (-1, 1): ("iii", -1), (-1, -1): ("iv", 1)}


def classify_row(p):
    """Local exponent differences and sign case of ``(a, b, c)``.

    The case is fixed by the signs of ``mu0`` and ``mu1``; ``mu_inf`` may
    carry either sign since exchanging a and b leaves u and v unchanged.
    """
    mus = (p.mu0, p.mu1, p.mu_inf)
    if any(m == 0 for m in mus):
        raise ZeroExponent(f"{p} has a vanishing exponent difference {mus}")
    sign = lambda m: 1 if m > 0 else -1  # noqa: E731
    case, inf_sign = _PATTERN[(sign(p.mu0), sign(p.mu1))]
    return ExponentTriple(*mus, case, sign(p.mu_inf) != inf_sign)


def general_fj(k_triple, N, sign_case, j):
    """Exponent pair of ``f_j`` for a regular polyhedral case."""
    k0, k1, kinf = (Fraction(k) for k in k_triple)
    kj = {"0": k0, "1": k1, "inf": kinf}[j]
    base0 = 1 / k0 if j == "0" else Fraction(0)
    base1 = 1 / k1 if j == "1" else Fraction(0)
    shift0 = -N / (k0 * kj) if sign_case in ("iii", "iv") else Fraction(0)
    shift1 = -N / (k1 * kj) if sign_case in ("ii", "iv") else Fraction(0)
    return FjSpec(j, base0 + shift0, base1 + shift1)


def derived_fj(case, row, j):
    """``f_j`` for ``row`` obtained from the first row by the sign flips.

    Flipping ``mu1`` multiplies ``P_j`` by ``(1-x)**(-mu1 deg P_j)``; flipping
    ``mu0`` (and swapping u, v) multiplies it by ``x**(-mu0 deg P_j)``, with
    ``mu0, mu1`` read off the first row.
    """
    first = case.rows[0]
    base = first.fj(j)
    deg = case.poly(j).degree
    e0, e1 = base.e0, base.e1
    if row.sign_case in ("ii", "iv"):
        e1 -= first.params.mu1 * deg
    if row.sign_case in ("iii", "iv"):
        e0 -= first.params.mu0 * deg
    return FjSpec(j, e0, e1, base.rational_factor)


def derived_params(case, row):
    """Parameters of ``row`` implied by the first row and the sign case."""
    p = case.rows[0].params
    lam, mu, nu = p.mu0, p.mu1, p.mu_inf
    if row.sign_case in ("iii", "iv"):
        lam = -lam
    if row.sign_case in ("ii", "iv"):
        mu = -mu
    c = 1 - lam
    return HGParams((c - mu + nu) / 2, (c - mu - nu) / 2, c)


def build_fj(spec, order):
    """``x**e0 (1-x)**e1 r(x)`` through ``x**order``."""
    series = PuiseuxSeries.monomial(spec.e0, order) * binomial_series(spec.e1, order)
    if spec.rational_factor != (1,):
        series = series * PuiseuxSeries.from_x_coeffs(list(spec.rational_factor), order)
    return series


def default_order(case):
    return 2 * case.Pinf.degree + 20


@lru_cache(maxsize=256)
def _pair(params, order):
    return kummer_pair(params, order)


def _same_params(p, q):
    return p.c == q.c and {p.a, p.b} == {q.a, q.b}


def _q(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _fj_doc(spec):
    doc = {"e0": _q(spec.e0), "e1": _q(spec.e1)}
    if spec.rational_factor != (1,):
        doc["rational_factor"] = [_q(c) for c in spec.rational_factor]
    return doc


def poly_doc(P):
    return {"degree": P.degree, "coeffs": [_q(c) for c in P.coeffs], "text": str(P)}


def poly_diff(new, old):
    """Monomial-keyed differences ``new - old`` (``"u^i v^j" -> "p/q"``)."""
    if new.degree != old.degree:
        return {"degree": f"{old.degree} -> {new.degree}"}
    out = {}
    for k, (a, b) in enumerate(zip(new.coeffs, old.coeffs)):
        if a != b:
            out[f"u^{new.degree - k} v^{k}"] = _q(a - b)
    return out


@dataclass
class IdentityResult:
    j: str
    target: str  # "canonical" or "table"
    status: str
    detail: dict = field(default_factory=dict)

    def to_dict(self):
        return {"j": self.j, "target": self.target, "status": self.status,
                "detail": self.detail}


@dataclass
class VerificationReport:
    label: str
    n: int
    row: int
    order: int
    identities: list
    suite: str = "verify"

    @property
    def unrepaired(self):
        return sum(1 for i in self.identities if i.status == MISMATCH)

    @property
    def repaired(self):
        return sum(1 for i in self.identities if i.status == REPAIRED)

    def to_dict(self):
        return {"suite": self.suite, "label": self.label, "n": self.n, "row": self.row,
                "order": self.order, "identities": [i.to_dict() for i in self.identities]}


@dataclass
class CheckResult:
    """Outcome of a single boolean check (curve equation, inverse map, syzygy)."""

    suite: str
    label: str
    n: int
    row: int
    ok: bool
    detail: dict = field(default_factory=dict)
    repaired: bool = False

    @property
    def status(self):
        if not self.ok:
            return MISMATCH
        return REPAIRED if self.repaired else MATCH

    def to_dict(self):
        return {"suite": self.suite, "label": self.label, "n": self.n, "row": self.row,
                "status": self.status, "detail": self.detail}


@dataclass
class PolyRepair:
    j: str
    poly: object
    kind: str  # "polynomial" or "exchanged"
    detail: dict


class CaseVerifier:
    """All checks for one :class:`PolyhedralCase`, sharing series and fits."""

    def __init__(self, case, order=None):
        self.case = case
        self.order = order if order is not None else default_order(case)
        self._repairs = {}
        self._values = {}

    # -- series ---------------------------------------------------------------

    def _extra(self, params):
        top = max(self.case.poly(j).degree for j in J_LABELS)
        return ceil(top * abs(1 - params.c)) + 1

    def pair(self, params):
        return _pair(params, self.order + self._extra(params))

    def evaluate(self, poly, row, params=None):
        """``poly(u, v)`` or, for swapped rows, ``poly(v, u)``."""
        params = params or row.params
        key = (poly.coeffs, row.swapped, params)
        if key in self._values:
            return self._values[key]
        u, v = self.pair(params)
        val = eval_poly_on_series(poly, v, u) if row.swapped else eval_poly_on_series(poly, u, v)
        if val.x_order < self.order:
            raise InternalInconsistency(
                f"{self.case.name} row {row.index}: only {val.x_order} orders known")
        val = val.truncate_x(self.order)
        self._values[key] = val
        return val

    def target_spec(self, row, j):
        """``("canonical", spec)`` for integral cases, else ``("table", spec)``."""
        if self.case.integral:
            return "canonical", general_fj(self.case.k_triple, self.case.N, row.sign_case, j)
        return "table", row.fj(j)

    def target(self, spec):
        return build_fj(spec, self.order)

    def row_params(self, row):
        """Parameters to use for ``row`` and the parameter-repair detail, if any."""
        p = row.params
        try:
            triple = classify_row(p)
            ks_ok = all(abs(m) == 1 / k for m, k in
                        zip((triple.mu0, triple.mu1, triple.mu_inf), self.case.k_triple))
            ok = triple.sign_case == row.sign_case and ks_ok
        except ZeroExponent:
            ok = False
        if ok or row.index == 1:
            return p, None
        fixed = derived_params(self.case, row)
        detail = {"kind": "parameters",
                  "printed": [_q(p.a), _q(p.b), _q(p.c)],
                  "corrected": [_q(fixed.a), _q(fixed.b), _q(fixed.c)]}
        return fixed, detail

    # -- polynomial repair ----------------------------------------------------

    def _row_ok(self, poly, row, j):
        params, _ = self.row_params(row)
        val = self.evaluate(poly, row, params)
        _, spec = self.target_spec(row, j)
        if first_mismatch(val, self.target(spec)) is None:
            return True
        if not self.case.integral:
            return first_mismatch(val, self.target(derived_fj(self.case, row, j))) is None
        return False

    def poly_repair(self, j):
        """A replacement for the printed ``P_j`` if the printed one fails, else None."""
        if j in self._repairs:
            return self._repairs[j]
        printed = self.case.poly(j)
        rows = self.case.rows
        failing = [r for r in rows if not self._row_ok(printed, r, j)]
        repair = None
        if failing:
            row = failing[0]
            params, _ = self.row_params(row)
            u, v = self.pair(params)
            _, spec = self.target_spec(row, j)
            degrees = [printed.degree] + sorted(
                {self.case.poly(i).degree for i in J_LABELS if i != j} - {printed.degree})
            for deg in degrees:
                try:
                    fitted = fit_invariant(row, deg, self.target(spec), u, v)
                except (Inconsistent, Underdetermined):
                    continue
                if not all(self._row_ok(fitted, r, j) for r in rows):
                    continue
                if deg == printed.degree:
                    repair = PolyRepair(j, fitted, "polynomial", {
                        "kind": "polynomial", "printed": poly_doc(printed),
                        "fitted": poly_doc(fitted), "diff": poly_diff(fitted, printed)})
                else:
                    same = [i for i in J_LABELS if i != j and self.case.poly(i) == fitted]
                    repair = PolyRepair(j, fitted, "exchanged", {
                        "kind": "exchanged" if same else "polynomial",
                        "printed": poly_doc(printed), "fitted": poly_doc(fitted),
                        "equals_printed": [f"P_{i}" for i in same]})
                break
        self._repairs[j] = repair
        return repair

    def repaired_polys(self):
        out = {}
        for j in J_LABELS:
            rep = self.poly_repair(j)
            out[j] = rep.poly if rep else self.case.poly(j)
        return out

    def repaired_case(self):
        """The case with every repairable invariant replaced by its fit."""
        P = self.repaired_polys()
        return replace(self.case, P0=P["0"], P1=P["1"], Pinf=P["inf"])

    # -- identities -----------------------------------------------------------

    def verify_row(self, row_index):
        row = self.case.rows[row_index - 1]
        params, param_fix = self.row_params(row)
        results = [self._identity(row, j, params, param_fix) for j in J_LABELS]
        return VerificationReport(self.case.label, self.case.n, row_index, self.order, results)

    def _identity(self, row, j, params, param_fix):
        kind, spec = self.target_spec(row, j)
        value = self.evaluate(self.case.poly(j), row, params)
        target = self.target(spec)
        bad = first_mismatch(value, target)
        if bad is None:
            detail = {"f": _fj_doc(spec)}
            if kind == "canonical" and row.fj(j) != spec:
                detail.update({"kind": "table_exponents", "printed": _fj_doc(row.fj(j)),
                               "corrected": _fj_doc(spec)})
                return IdentityResult(j, kind, REPAIRED, detail)
            if param_fix:
                detail.update(param_fix)
                return IdentityResult(j, kind, REPAIRED, detail)
            return IdentityResult(j, kind, MATCH, detail)

        if kind == "table":
            alt = derived_fj(self.case, row, j)
            if first_mismatch(value, self.target(alt)) is None:
                detail = {"kind": "table_exponents", "printed": _fj_doc(spec),
                          "corrected": _fj_doc(alt)}
                if param_fix:
                    detail["parameters"] = param_fix
                return IdentityResult(j, kind, REPAIRED, detail)

        repair = self.poly_repair(j)
        if repair is not None:
            fixed = self.evaluate(repair.poly, row, params)
            if first_mismatch(fixed, target) is None:
                detail = dict(repair.detail)
                if param_fix:
                    detail["parameters"] = param_fix
                return IdentityResult(j, kind, REPAIRED, detail)

        x_exp, got, expected = bad
        detail = {"x_exponent": _q(x_exp), "expected": _q(expected), "got": _q(got),
                  "f": _fj_doc(spec)}
        if kind == "canonical":
            table_bad = first_mismatch(value, self.target(row.fj(j)))
            detail["table_matches"] = table_bad is None
        return IdentityResult(j, kind, MISMATCH, detail)

    # -- curve identities --------------------------------------------------------

    def _poly_series(self, row_index, repaired=True):
        row = self.case.rows[row_index - 1]
        params, _ = self.row_params(row)
        polys = self.repaired_polys() if repaired else {j: self.case.poly(j) for j in J_LABELS}
        return row, {j: self.evaluate(polys[j], row, params) for j in J_LABELS}

    def _int_exponents(self):
        if not self.case.integral:
            raise NonIntegerExponent(f"{self.case.name} has a fractional k-triple")
        return tuple(int(k) for k in self.case.k_triple), self.case.N

    def _used_repair(self, repaired):
        return repaired and any(self.poly_repair(j) for j in J_LABELS)

    def _curve_sides(self, row_index, repaired):
        (k0, k1, kinf), N = self._int_exponents()
        row, P = self._poly_series(row_index, repaired)
        d = N // kinf
        case = row.sign_case
        one = PuiseuxSeries.constant(1, self.order)
        if case == "i":
            return P["inf"], one, "P_inf = 1"
        # compared as a ratio against 1 so negative valuations cost no precision
        if case == "ii":
            e = N // k1 - 1
            lhs = power_product([(P["1"], d), (P["inf"], -e)])
            return lhs, one, f"P_1^{d} / P_inf^{e} = 1"
        if case == "iii":
            e = N // k0 - 1
            lhs = power_product([(P["0"], d), (P["inf"], -e)])
            return lhs, one, f"P_0^{d} / P_inf^{e} = 1"
        e = N // k0 + N // k1 - 1
        lhs = power_product([(P["0"], d), (P["1"], d), (P["inf"], -e)])
        return lhs, one, f"(P_0 P_1)^{d} / P_inf^{e} = 1"

    def _inverse_sides(self, row_index, repaired):
        (k0, k1, kinf), N = self._int_exponents()
        row, P = self._poly_series(row_index, repaired)
        if row.sign_case == "i":
            lhs, text = power_product([(P["0"], k0)]), f"P_0^{k0} = x"
        else:
            lhs = power_product([(P["0"], k0), (P["inf"], -kinf)])
            text = f"P_0^{k0} P_inf^-{kinf} = x"
        return lhs, PuiseuxSeries.monomial(1, self.order), text

    def _full_order(self, sides, row_index, repaired):
        # factors with positive valuation know fewer relative terms; redo the
        # evaluation deeper so the comparison reaches self.order
        lhs, rhs, text = sides(self, row_index, repaired)
        reached = min(lhs.x_order, rhs.x_order)
        if reached < self.order:
            deeper = CaseVerifier(self.case, self.order + ceil(self.order - reached))
            deeper._repairs = self._repairs
            lhs, rhs, text = sides(deeper, row_index, repaired)
        return lhs.truncate_x(self.order), rhs.truncate_x(self.order), text

    def curve_equation(self, row_index, repaired=True):
        """The image-curve equation for the row's sign case, as series."""
        lhs, rhs, text = self._full_order(CaseVerifier._curve_sides, row_index, repaired)
        return self._compare("curve", row_index, lhs, rhs, text, repaired)

    def inverse_map(self, row_index, repaired=True):
        lhs, rhs, text = self._full_order(CaseVerifier._inverse_sides, row_index, repaired)
        return self._compare("inverse", row_index, lhs, rhs, text, repaired)

    def _compare(self, suite, row_index, lhs, rhs, text, repaired):
        bad = first_mismatch(lhs, rhs)
        order = min(lhs.x_order, rhs.x_order)
        detail = {"identity": text, "compared_through": _q(order)}
        if bad is not None:
            detail.update({"x_exponent": _q(bad[0]), "lhs": _q(bad[1]), "rhs": _q(bad[2])})
        return CheckResult(suite, self.case.label, self.case.n, row_index, bad is None, detail,
                           repaired=bad is None and self._used_repair(repaired))

    # -- syzygy ---------------------------------------------------------------

    def syzygy(self, repaired=True):
        """``P0^k0 + P1^k1 - Pinf^kinf == 0`` as polynomials."""
        ks = self.case.k_triple
        printed = syzygy_residual(self.case.P0, self.case.P1, self.case.Pinf, ks)
        detail = {"identity": "P_0^k0 + P_1^k1 - P_inf^kinf = 0",
                  "printed_holds": printed.is_zero()}
        if printed.is_zero() or not repaired:
            return CheckResult("syzygy", self.case.label, self.case.n, 0, printed.is_zero(),
                               detail)
        polys = self.repaired_polys()
        fixed = syzygy_residual(polys["0"], polys["1"], polys["inf"], ks)
        return CheckResult("syzygy", self.case.label, self.case.n, 0, fixed.is_zero(), detail,
                           repaired=fixed.is_zero())


def power_product(factors):
    """``prod s**k`` over ``(s, k)`` pairs, multiplied as unit parts with the
    powers of x tracked apart, so the known relative order is kept."""
    shift = 0
    out = None
    for s, k in factors:
        v = s.x_valuation
        p = s.shift(-v) ** k
        shift += k * v
        out = p if out is None else out * p
    return out.shift(shift)


def verify_row(case, row_index, order=None):
    return CaseVerifier(case, order).verify_row(row_index)


def verify_curve_equation(case, row_index, order=None, repaired=True):
    return CaseVerifier(case, order).curve_equation(row_index, repaired).ok


def verify_inverse_map(case, row_index, order=None, repaired=True):
    return CaseVerifier(case, order).inverse_map(row_index, repaired).ok


def sign_case_index(sign_case):
    return SIGN_CASES.index(sign_case) + 1
