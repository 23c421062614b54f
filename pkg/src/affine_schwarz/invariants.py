"""Homogeneous polynomials in ``(u, v)`` and the operations the catalog
needs on them: evaluation on series, the syzygy check, and coefficient
fitting from a target series."""

import re
from fractions import Fraction

from .errors import Inconsistent, NonIntegerExponent, Underdetermined
from .exact import LinearSystem, PuiseuxSeries, _common, as_fraction, solve_exact


class HomogeneousBivariatePoly:
    """``sum_k coeffs[k] * u**(d-k) * v**k`` over Q."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, coeffs):
        coeffs = tuple(as_fraction(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a degree-d polynomial needs d+1 coefficients")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "degree", len(coeffs) - 1)

    def __setattr__(self, name, value):
        raise AttributeError("HomogeneousBivariatePoly is immutable")

    @classmethod
    def from_terms(cls, degree, terms):
        """Build from ``{v_exponent: coefficient}``."""
        coeffs = [Fraction(0)] * (degree + 1)
        for k, c in terms.items():
            if not 0 <= k <= degree:
                raise ValueError(f"v-exponent {k} outside 0..{degree}")
            coeffs[k] += as_fraction(c)
        return cls(coeffs)

    @classmethod
    def parse(cls, text):
        """Parse a sum such as ``"u^4 + 1/6 u^2 v^2 - 1/432 v^4"``.

        Repeated monomials are summed. Every term must have the same total
        degree.
        """
        terms = {}
        degree = None
        compact = text.replace(" ", "")
        for m in _TERM.finditer(compact):
            sign, coef, u_part, v_part = m.group("sign", "coef", "u", "v")
            if not (coef or u_part or v_part):
                continue
            c = Fraction(coef) if coef else Fraction(1)
            if sign == "-":
                c = -c
            i = _power(u_part, "u")
            j = _power(v_part, "v")
            if degree is None:
                degree = i + j
            elif i + j != degree:
                raise ValueError(f"term {m.group(0)!r} breaks homogeneity in {text!r}")
            terms[j] = terms.get(j, Fraction(0)) + c
        if degree is None:
            raise ValueError(f"no terms in {text!r}")
        consumed = "".join(m.group(0) for m in _TERM.finditer(compact))
        if consumed != compact:
            raise ValueError(f"could not parse {text!r}")
        return cls.from_terms(degree, terms)

    # -- algebra ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, HomogeneousBivariatePoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self):
        return not any(self.coeffs)

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("sum of homogeneous polynomials of different degree")
        return HomogeneousBivariatePoly([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return HomogeneousBivariatePoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, HomogeneousBivariatePoly):
            return HomogeneousBivariatePoly([as_fraction(other) * c for c in self.coeffs])
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return HomogeneousBivariatePoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise NonIntegerExponent(f"polynomial power {k} is not a nonnegative integer")
        result = HomogeneousBivariatePoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def swapped(self):
        """``P(v, u)``."""
        return HomogeneousBivariatePoly(self.coeffs[::-1])

    def terms(self):
        """Yield ``(u_exponent, v_exponent, coefficient)`` for nonzero terms."""
        d = self.degree
        for k, c in enumerate(self.coeffs):
            if c:
                yield d - k, k, c

    def __str__(self):
        parts = []
        for i, j, c in self.terms():
            mono = " ".join(p for p in (_mono("u", i), _mono("v", j)) if p)
            if c == 1 and mono:
                body = mono
            elif c == -1 and mono:
                body = "-" + mono
            else:
                body = f"{c} {mono}".strip()
            parts.append(body)
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"HomogeneousBivariatePoly.parse({str(self)!r})"


_TERM = re.compile(
    r"(?P<sign>[+-]?)(?P<coef>\d+(?:/\d+)?)?\*?(?P<u>u(?:\^\d+)?)?\*?(?P<v>v(?:\^\d+)?)?")


def _power(part, var):
    if not part:
        return 0
    if part == var:
        return 1
    return int(part.split("^")[1])


def _mono(var, k):
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


def _power_table(s, exponents):
    """``{k: s**k}`` for every k in ``exponents`` via one multiplication chain."""
    top = max(exponents, default=0)
    table = {0: PuiseuxSeries.constant(1, s.order, s.M)}
    cur = table[0]
    for k in range(1, top + 1):
        cur = s if k == 1 else cur * s
        if k in exponents:
            table[k] = cur
    return table


def monomial_series(P, u, v):
    """The series ``u**(d-k) v**k`` for every k (zero coefficients included)."""
    u, v = _common(u, v)
    d = P.degree
    ks = set(range(d + 1))
    up = _power_table(u, ks)
    vp = _power_table(v, ks)
    return [up[d - k] * vp[k] for k in range(d + 1)]


def eval_poly_on_series(P, u, v):
    """``P(u, v)`` as a series, truncated to what the operands determine."""
    u, v = _common(u, v)
    d = P.degree
    used = [(k, c) for k, c in enumerate(P.coeffs) if c]
    if not used:
        return PuiseuxSeries.zero(min(u.order, v.order), u.M)
    up = _power_table(u, {d - k for k, _ in used})
    vp = _power_table(v, {k for k, _ in used})
    total = None
    for k, c in used:
        term = (up[d - k] * vp[k]).scale(c)
        total = term if total is None else total + term
    return total


def syzygy_residual(P0, P1, Pinf, k_triple):
    """``P0**k0 + P1**k1 - Pinf**kinf`` as a bivariate polynomial."""
    ks = [as_fraction(k) for k in k_triple]
    if any(k.denominator != 1 for k in ks):
        raise NonIntegerExponent(f"k-triple {k_triple} has a non-integer entry")
    k0, k1, kinf = (int(k) for k in ks)
    return P0 ** k0 + P1 ** k1 - Pinf ** kinf


def syzygy_check(case):
    """True iff ``P0**k0 + P1**k1 == Pinf**kinf`` identically."""
    return syzygy_residual(case.P0, case.P1, case.Pinf, case.k_triple).is_zero()


def fit_invariant(row, degree, target, u, v):
    """Recover the degree-``degree`` polynomial P with ``P(u, v) == target``.

    When ``row.swapped`` the identity is ``P(v, u) == target`` and the
    returned polynomial is still expressed as ``P(u, v)``. Solves the exact
    linear system in the ``degree + 1`` unknown coefficients; raises
    :class:`Inconsistent` or :class:`Underdetermined` when it has no or
    several solutions.
    """
    args = (v, u) if row is not None and row.swapped else (u, v)
    probe = HomogeneousBivariatePoly([0] * (degree + 1))
    columns = monomial_series(probe, *args)
    series = columns + [target]
    M = 1
    for s in series:
        M = M * s.M // _gcd(M, s.M)
    series = [s.rebase(M) for s in series]
    order = min(s.order for s in series)
    lo = min(s.val for s in series)
    matrix, rhs = [], []
    for e in range(lo, order + 1):
        row_vals = [col[e] for col in series[:-1]]
        b = series[-1][e]
        if any(row_vals) or b:
            matrix.append(row_vals)
            rhs.append(b)
    if not matrix:
        raise Underdetermined("no equations within the truncation order")
    sol = solve_exact(LinearSystem(matrix, rhs))
    if sol.status == "inconsistent":
        raise Inconsistent(f"no degree-{degree} polynomial reproduces the target")
    if sol.status == "underdetermined":
        raise Underdetermined(
            f"rank {sol.rank} < {degree + 1} unknowns; increase the truncation order")
    return HomogeneousBivariatePoly(sol.values)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
