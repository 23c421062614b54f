"""The products ``f_{s,t}`` of two Gauss series around infinity for dihedral
monodromy: two ways of computing them, the degree law, the third-order ODE
and its coefficient recurrence, and the terminating 3F2 values that make
the degree drop."""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConfigError, DegreeMismatch, InternalInconsistency, NonTerminating
from .exact import PuiseuxSeries, as_fraction, pochhammer
from .hypergeom import HGParams, gauss_series, pfq


def _is_int(x):
    return Fraction(x).denominator == 1


@dataclass(frozen=True)
class ProductParams:
    alpha: Fraction
    s: Fraction
    t: Fraction

    def __post_init__(self):
        for name in ("alpha", "s", "t"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if _is_int(self.alpha):
            raise ConfigError(f"alpha = {self.alpha} must not be an integer")
        if not (_is_int(2 * self.s) and _is_int(2 * self.t)):
            raise ConfigError(f"s = {self.s}, t = {self.t} must be half-integers")
        if not _is_int(self.s + self.t):
            raise ConfigError(f"s + t = {self.s + self.t} must be an integer")
        if self.s + self.t + 1 < 1:
            raise ConfigError(f"s + t + 1 = {self.s + self.t + 1} must be a positive integer")

    @property
    def factors(self):
        """The two Gauss parameter triples whose series are multiplied."""
        a, s, t = self.alpha, self.s, self.t
        return (HGParams(a / 2 - s, (a + 1) / 2 - t, a + 1),
                HGParams(-a / 2 - s, (1 - a) / 2 - t, 1 - a))

    @property
    def expected_degree(self):
        if self.s - self.t + 1 >= 1:
            return int(2 * self.s)
        if self.t - self.s >= 1:
            return int(2 * self.t - 1)
        raise ConfigError(f"neither s-t+1 nor t-s is a positive integer for {self}")


@dataclass(frozen=True)
class CoefficientSequence:
    d: tuple

    @property
    def order(self):
        return len(self.d) - 1

    def series(self):
        return PuiseuxSeries.from_x_coeffs(list(self.d), self.order)

    def degree(self):
        """Index of the last nonzero coefficient (-1 for all zeros)."""
        for n in range(len(self.d) - 1, -1, -1):
            if self.d[n]:
                return n
        return -1


def lemma31_coefficient(a, b, c, d, e, f, n):
    """Coefficient of ``x**n`` in ``F(a,b,c;x) F(d,e,f;x)`` via a terminating 4F3."""
    head = pfq((a, b, 1 - n - f, -n), (c, 1 - n - d, 1 - n - e))
    return head * pochhammer(d, n) * pochhammer(e, n) / (pochhammer(f, n) * pochhammer(1, n))


def product_series_lemma31(a, b, c, d, e, f, order):
    a, b, c, d, e, f = (as_fraction(z) for z in (a, b, c, d, e, f))
    return PuiseuxSeries([lemma31_coefficient(a, b, c, d, e, f, n) for n in range(order + 1)],
                         order)


def _collapsed_coefficient(p, n):
    a, s, t = p.alpha, p.s, p.t
    head = pfq((a / 2 - s, (a + 1) / 2 - t, a - n, -n),
               (a + 1, a / 2 + s - n + 1, (a + 1) / 2 + t - n))
    return head * pochhammer(-a / 2 - s, n) * pochhammer(-(a - 1) / 2 - t, n) / (
        pochhammer(1 - a, n) * pochhammer(1, n))


def f_st(p, order):
    """Coefficients ``d_0..d_order`` of ``f_{s,t}``, cross-checked two ways."""
    f1, f2 = p.factors
    direct = gauss_series(f1, order) * gauss_series(f2, order)
    d = tuple(direct.coefficient(n) for n in range(order + 1))
    for n in range(order + 1):
        other = _collapsed_coefficient(p, n)
        if other != d[n]:
            raise InternalInconsistency(
                f"f_st{(p.alpha, p.s, p.t)}: d_{n} is {d[n]} by Cauchy product, {other} by 4F3")
    return CoefficientSequence(d)


def degree_check(p, margin=15):
    """Observed degree of ``f_{s,t}``; raises unless it is the predicted one."""
    expected = p.expected_degree
    w = f_st(p, expected + margin)
    if w.degree() != expected:
        raise DegreeMismatch(
            f"f_st{(p.alpha, p.s, p.t)} has degree {w.degree()} through order "
            f"{w.order}, expected {expected}", list(w.d))
    return expected


def ode_residual(p, w):
    """Left side of the third-order equation for ``f_{s,t}`` applied to ``w``.

    Exact through ``x**(order - 3)``.
    """
    a2, s, t = p.alpha ** 2, p.s, p.t
    series = w.series() if isinstance(w, CoefficientSequence) else w
    order = int(series.x_order)  # floor; w is an ordinary power series here
    if order < 3:
        raise ValueError("need w through at least x**3")

    def poly(*cs):
        return PuiseuxSeries.from_x_coeffs([as_fraction(c) for c in cs], order)

    w1 = series.derivative()
    w2 = w1.derivative()
    w3 = w2.derivative()
    h = Fraction(3, 2)
    res = (poly(0, 0, 1, -2, 1) * w3
           + poly(0, 2 * h, h * (2 * s + 2 * t - 3) - 2 * h, -h * (2 * s + 2 * t - 3)) * w2
           + poly(1 - a2, a2 - 4 * s * t + 6 * s + 4 * t - 4,
                  2 * s * s + 2 * t * t + 8 * s * t - 7 * s - 5 * t + 3) * w1
           - poly(a2 * s + a2 * t + 2 * s * t - s,
                  4 * s * s * t + 4 * s * t * t - 4 * s * t - 2 * s * s + s) * series)
    return res.truncate_x(order - 3)


def recurrence_terms(p, n):
    """Coefficients ``(A, B, C)`` with ``A d_{n+1} - B d_n + C d_{n-1} = 0``."""
    a2, s, t = p.alpha ** 2, p.s, p.t
    A = 2 * (n + 1) * ((n + 1) ** 2 - a2)
    B = (4 * n ** 3 - 3 * (2 * s + 2 * t - 1) * n ** 2
         - (2 * a2 - 8 * s * t + 6 * s + 2 * t - 1) * n
         + 2 * (a2 * s + a2 * t + 2 * s * t - s))
    C = (n - 2 * s - 1) * (n - 2 * t) * (2 * n - 2 * s - 2 * t - 1)
    return A, B, C


@dataclass(frozen=True)
class RecurrenceResult:
    ok: bool
    failing_n: int = None
    relation: str = None

    def __bool__(self):
        return self.ok


def recurrence_check(p, w):
    """True iff ``d`` satisfies the three-term relation and both two-term
    specializations at ``n = 2s+1`` and ``n = 2t``."""
    d = list(w.d if isinstance(w, CoefficientSequence) else w)
    top = len(d) - 1
    for n in range(top):
        A, B, C = recurrence_terms(p, n)
        prev = d[n - 1] if n >= 1 else 0
        if A * d[n + 1] - B * d[n] + C * prev != 0:
            return RecurrenceResult(False, n, "three-term")
    n = 2 * p.s + 1
    if n >= 0 and n + 1 <= top:
        n = int(n)
        if (2 * p.s + 2) * d[n + 1] != (p.s - p.t + 1) * d[n]:
            return RecurrenceResult(False, n, "d_{2s+2}")
    n = 2 * p.t
    if n >= 0 and n + 1 <= top:
        n = int(n)
        if (2 * p.t + 1) * d[n + 1] != (p.t - p.s) * d[n]:
            return RecurrenceResult(False, n, "d_{2t+1}")
    return RecurrenceResult(True)


def lemma35_g(alpha, i, j):
    alpha = as_fraction(alpha)
    return pfq((alpha / 2 - i + j + 1, alpha - 2 * i + 2, 1 - i - j),
               (alpha / 2 - i - j + 2, alpha - i + j + 2))


def lemma36_values(alpha, s, t, variant):
    alpha, s, t = (as_fraction(z) for z in (alpha, s, t))
    if variant == "i":
        stop = -2 * s - 1
        upper = ((alpha + 1) / 2 - t, alpha - 2 * s - 1, stop)
        lower = ((alpha - 1) / 2 + t - 2 * s, alpha + 1)
    elif variant == "ii":
        stop = -2 * t
        upper = (alpha / 2 - s, alpha - 2 * t, stop)
        lower = (alpha / 2 + s - 2 * t + 1, alpha + 1)
    else:
        raise ValueError(f"variant must be 'i' or 'ii', got {variant!r}")
    if not (_is_int(stop) and stop <= 0):
        raise NonTerminating(f"upper parameter {stop} is not a nonpositive integer")
    return pfq(upper, lower)


def degree_drop_coefficient(p):
    """``d_{2s+1}`` from the 3F2 the 4F3 collapses to when ``s-t+1 >= 1``."""
    a, s, t = p.alpha, p.s, p.t
    if not s - t + 1 >= 1:
        raise ConfigError("the 4F3 only collapses when s - t + 1 is a positive integer")
    m = int(2 * s + 1)
    head = lemma36_values(a, s, t, "i")
    return head * pochhammer(-a / 2 - s, m) * pochhammer(-(a - 1) / 2 - t, m) / (
        pochhammer(1 - a, m) * pochhammer(1, m))


def default_grid(alphas=(Fraction(1, 3), Fraction(1, 5), Fraction(2, 7))):
    """Every ``ProductParams`` with ``s, t`` in ``{0, 1/2, ..., 3}``."""
    halves = [Fraction(k, 2) for k in range(7)]
    return [ProductParams(a, s, t) for a in alphas for s in halves for t in halves
            if _is_int(s + t)]
