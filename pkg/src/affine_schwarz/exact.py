"""Exact scalars, truncated Laurent-Puiseux series and a rational linear solver.

Scalars are :class:`fractions.Fraction` throughout. A :class:`PuiseuxSeries`
lives in ``Q((t))`` with ``t = x**(1/M)``; it knows its coefficients up to an
explicit inclusive bound ``order`` (in t-exponent units) and nothing beyond.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .errors import NonUnitSeries, RebaseOverflow

# Largest base denominator M a computation may need. Catalog data never
# comes close; hitting it means an exponent was mistyped.
MAX_BASE = 10_000


def as_fraction(value):
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or a 'p/q' string")
    return Fraction(value)


def pochhammer(a, n):
    """Rising factorial ``a (a+1) ... (a+n-1)``; 1 for ``n == 0``."""
    a = as_fraction(a)
    result = Fraction(1)
    for k in range(n):
        result *= a + k
    return result


def pochhammer_is_zero(a, n):
    """True iff ``1 - a`` and ``a + n`` are both positive integers."""
    a = as_fraction(a)
    if a.denominator != 1:
        return False
    return 1 - a >= 1 and a + n >= 1


class PuiseuxSeries:
    """Truncated series ``sum c_k t**k`` with ``t = x**(1/M)``.

    ``coeffs[i]`` is the coefficient of ``t**(val + i)``; coefficients of
    exponents in ``(val + len(coeffs), order]`` are zero, and nothing is known
    past ``order``. Instances are immutable. Leading and trailing zeros are
    stripped on construction, so a nonzero series has ``coeffs[0] != 0`` and
    ``val`` is its valuation; the zero series has ``val == order + 1``.
    """

    __slots__ = ("M", "val", "coeffs", "order")

    def __init__(self, coeffs, order, M=1, val=0):
        if M < 1:
            raise ValueError("base denominator must be positive")
        coeffs = [as_fraction(c) for c in coeffs]
        keep = order - val + 1
        if keep < len(coeffs):
            coeffs = coeffs[:max(keep, 0)]
        lo = 0
        while lo < len(coeffs) and not coeffs[lo]:
            lo += 1
        hi = len(coeffs)
        while hi > lo and not coeffs[hi - 1]:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "coeffs", ())
            object.__setattr__(self, "val", order + 1)
        else:
            object.__setattr__(self, "coeffs", tuple(coeffs[lo:hi]))
            object.__setattr__(self, "val", val + lo)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("PuiseuxSeries is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c, order, M=1):
        return cls([c], order, M)

    @classmethod
    def zero(cls, order, M=1):
        return cls([], order, M)

    @classmethod
    def monomial(cls, exponent, order_x, coeff=1):
        """``coeff * x**exponent`` known through ``x**order_x``."""
        exponent = as_fraction(exponent)
        order_x = as_fraction(order_x)
        M = lcm(exponent.denominator, order_x.denominator)
        return cls([coeff], int(order_x * M), M, int(exponent * M))

    @classmethod
    def from_x_coeffs(cls, coeffs, order_x):
        """Ordinary power series ``sum coeffs[n] x**n`` through ``x**order_x``."""
        return cls(coeffs, order_x, 1, 0)

    # -- inspection ---------------------------------------------------------

    @property
    def x_order(self):
        """Truncation bound in x-exponent units."""
        return Fraction(self.order, self.M)

    @property
    def x_valuation(self):
        return Fraction(self.val, self.M)

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, k):
        """Coefficient of ``t**k``."""
        if k > self.order:
            raise IndexError(f"t^{k} is beyond the truncation order {self.order}")
        i = k - self.val
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def coefficient(self, exponent):
        """Coefficient of ``x**exponent`` (exponent may be fractional)."""
        exponent = as_fraction(exponent)
        k = exponent * self.M
        if k.denominator != 1:
            return Fraction(0)
        return self[int(k)]

    def terms(self):
        """Yield ``(x_exponent, coefficient)`` for every nonzero term."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield Fraction(self.val + i, self.M), c

    # -- rebasing -----------------------------------------------------------

    def rebase(self, M):
        """Re-express in ``t' = x**(1/M)``; exact, raises if not representable."""
        if M == self.M:
            return self
        if M > MAX_BASE:
            raise RebaseOverflow(f"base denominator {M} exceeds {MAX_BASE}")
        if M % self.M == 0:
            f = M // self.M
            out = [Fraction(0)] * ((len(self.coeffs) - 1) * f + 1) if self.coeffs else []
            for i, c in enumerate(self.coeffs):
                out[i * f] = c
            return PuiseuxSeries(out, self.order * f, M, self.val * f if self.coeffs else 0)
        if self.M % M == 0:
            f = self.M // M
            for x_exp, _ in self.terms():
                if (x_exp * M).denominator != 1:
                    raise ValueError(f"x^{x_exp} is not representable with M={M}")
            if not self.coeffs:
                return PuiseuxSeries.zero(self.order // f, M)
            return PuiseuxSeries(self.coeffs[::f], self.order // f, M, self.val // f)
        return self.rebase(lcm(self.M, M)).rebase(M)

    def reduced(self):
        """Rebase to the smallest M that represents every nonzero exponent."""
        g = self.M
        for k in range(len(self.coeffs)):
            if self.coeffs[k]:
                g = _gcd(g, self.val + k)
        return self.rebase(self.M // g) if g > 1 else self

    # -- arithmetic ---------------------------------------------------------

    def _dense(self, lo, hi):
        """Coefficients for t-exponents lo..hi (inclusive)."""
        out = [Fraction(0)] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            k = self.val + i - lo
            if 0 <= k <= hi - lo:
                out[k] = c
        return out

    def __neg__(self):
        return PuiseuxSeries([-c for c in self.coeffs], self.order, self.M, self.val)

    def __add__(self, other):
        if not isinstance(other, PuiseuxSeries):
            other = PuiseuxSeries.constant(as_fraction(other), self.order, self.M)
        a, b = _common(self, other)
        order = min(a.order, b.order)
        lo = min(a.val, b.val, order + 1)
        dense = a._dense(lo, order)
        for k, c in enumerate(b._dense(lo, order)):
            if c:
                dense[k] += c
        return PuiseuxSeries(dense, order, a.M, lo)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, PuiseuxSeries):
            other = PuiseuxSeries.constant(as_fraction(other), self.order, self.M)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = as_fraction(c)
        return PuiseuxSeries([c * a for a in self.coeffs], self.order, self.M, self.val)

    def __mul__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return self.scale(other)
        a, b = _common(self, other)
        # Error terms of a*b start at min(val_a + order_b, val_b + order_a) + 1.
        # Clamping the valuations at 0 keeps the plain "min of orders" rule
        # for ordinary series and stays sound for negative valuations.
        order = min(a.order + min(b.val, 0), b.order + min(a.val, 0))
        val = a.val + b.val
        if not a.coeffs or not b.coeffs or val > order:
            return PuiseuxSeries.zero(order, a.M)
        # Convolve integer numerators over a common denominator; far fewer
        # gcd calls than summing Fractions term by term.
        span = order - val
        na, da = _integerize(a.coeffs[:span + 1])
        nb, db = _integerize(b.coeffs[:span + 1])
        out = [0] * (span + 1)
        nzb = [(j, c) for j, c in enumerate(nb) if c]
        for i, ca in enumerate(na):
            if not ca:
                continue
            lim = span - i
            for j, cb in nzb:
                if j > lim:
                    break
                out[i + j] += ca * cb
        den = da * db
        return PuiseuxSeries([Fraction(c, den) for c in out], order, a.M, val)

    __rmul__ = __mul__

    def shift(self, exponent):
        """Multiply by ``x**exponent``."""
        exponent = as_fraction(exponent)
        s = self.rebase(lcm(self.M, exponent.denominator))
        k = int(exponent * s.M)
        return PuiseuxSeries(s.coeffs, s.order + k, s.M, s.val + k)

    def inverse(self):
        """Multiplicative inverse of a unit series (nonzero constant term, no
        negative-exponent terms)."""
        if not self.coeffs or self.val != 0:
            raise NonUnitSeries("series has no invertible constant term")
        a = self.coeffs
        n_terms = self.order + 1
        inv0 = 1 / a[0]
        b = [inv0]
        nz = [(k, c) for k, c in enumerate(a) if c and k > 0]
        for n in range(1, n_terms):
            acc = 0
            for k, c in nz:
                if k > n:
                    break
                acc += c * b[n - k]
            b.append(-acc * inv0)
        return PuiseuxSeries(b, self.order, self.M, 0)

    def __truediv__(self, other):
        if isinstance(other, PuiseuxSeries):
            return self * other ** -1
        return self.scale(1 / as_fraction(other))

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("only integer powers are supported")
        if k == 0:
            return PuiseuxSeries.constant(1, self.order, self.M)
        if k < 0:
            if not self.coeffs:
                raise NonUnitSeries("cannot invert the zero series")
            v = self.val
            unit = PuiseuxSeries(self.coeffs, self.order - v, self.M, 0)
            inv = unit.inverse() ** (-k)
            return PuiseuxSeries(inv.coeffs, inv.order + k * v, self.M, inv.val + k * v)
        result = None
        base = self
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def derivative(self):
        """d/dx, term by term: ``t**k -> (k/M) t**(k - M)``."""
        out = [c * Fraction(self.val + i, self.M) for i, c in enumerate(self.coeffs)]
        return PuiseuxSeries(out, self.order - self.M, self.M, self.val - self.M)

    def truncate(self, order):
        """Forget everything past ``t**order``."""
        if order > self.order:
            raise ValueError("cannot truncate to a higher order")
        return PuiseuxSeries(self.coeffs, order, self.M, self.val)

    def truncate_x(self, order_x):
        order_x = as_fraction(order_x)
        s = self.rebase(lcm(self.M, order_x.denominator))
        return s.truncate(int(order_x * s.M))

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PuiseuxSeries.constant(other, self.order, self.M)
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return first_mismatch(self, other) is None

    __hash__ = None

    def __repr__(self):
        return f"PuiseuxSeries({self})"

    def __str__(self):
        parts = []
        for e, c in self.terms():
            if e == 0:
                parts.append(f"{c}")
            else:
                power = "x" if e == 1 else f"x^({e})"
                parts.append(power if c == 1 else f"{c}*{power}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(x^({Fraction(self.order + 1, self.M)}))"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _integerize(coeffs):
    """``(numerators, D)`` with ``coeffs[i] == numerators[i] / D``."""
    D = 1
    for c in coeffs:
        D = lcm(D, c.denominator)
    return [c.numerator * (D // c.denominator) for c in coeffs], D


def _common(a, b):
    if a.M == b.M:
        return a, b
    M = lcm(a.M, b.M)
    if M > MAX_BASE:
        raise RebaseOverflow(f"lcm of base denominators {a.M}, {b.M} exceeds {MAX_BASE}")
    return a.rebase(M), b.rebase(M)


def first_mismatch(a, b):
    """First x-exponent where two series differ within their common order.

    Returns ``None`` when they agree, else ``(x_exponent, coeff_of_a,
    coeff_of_b)``.
    """
    a, b = _common(a, b)
    order = min(a.order, b.order)
    lo = min(a.val, b.val)
    for k in range(lo, order + 1):
        ca, cb = a[k], b[k]
        if ca != cb:
            return Fraction(k, a.M), ca, cb
    return None


def series_arith(lhs, rhs, op):
    """``op`` is one of ``"add"``, ``"sub"``, ``"mul"``."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    raise ValueError(f"unknown series operation {op!r}")


def series_inverse(s):
    return s.inverse()


def series_int_pow(s, k):
    return s ** k


def binomial_series(e, order):
    """Expansion of ``(1 - x)**e`` through ``x**order``.

    The coefficient of ``x**n`` is ``pochhammer(-e, n) / n!``.
    """
    e = as_fraction(e)
    coeffs = [Fraction(1)]
    c = Fraction(1)
    for n in range(order):
        c = c * (n - e) / (n + 1)
        if not c:
            break
        coeffs.append(c)
    return PuiseuxSeries(coeffs, order, 1, 0)


@dataclass(frozen=True)
class LinearSystem:
    matrix: list
    rhs: list


@dataclass(frozen=True)
class LinearSolution:
    status: str  # "unique", "inconsistent" or "underdetermined"
    values: list = field(default=None)
    rank: int = 0

    @property
    def ok(self):
        return self.status == "unique"


def solve_exact(system):
    """Gauss-Jordan elimination over Q.

    Inconsistency and rank deficiency are reported through ``status``, not
    raised. Rows may outnumber columns.
    """
    rows = [[as_fraction(v) for v in row] + [as_fraction(b)]
            for row, b in zip(system.matrix, system.rhs)]
    if len(rows) != len(system.rhs) or len(system.matrix) != len(system.rhs):
        raise ValueError("matrix and rhs have different row counts")
    ncols = len(system.matrix[0]) if system.matrix else 0
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        rows[r] = [v / p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [vi - f * vr for vi, vr in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    rank = len(pivots)
    if any(row[-1] for row in rows[rank:]):
        return LinearSolution("inconsistent", None, rank)
    if rank < ncols:
        return LinearSolution("underdetermined", None, rank)
    values = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        values[col] = rows[i][-1]
    return LinearSolution("unique", values, rank)
