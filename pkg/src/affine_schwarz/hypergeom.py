"""Gauss hypergeometric series, the Kummer pair at the origin, and
terminating generalized hypergeometric sums at unit argument."""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .errors import BadLowerParameter, DegenerateKummerPair, DivisionMidSum, NonTerminating
from .exact import PuiseuxSeries, as_fraction


@dataclass(frozen=True)
class HGParams:
    """Parameters ``(a, b, c)`` of ``x(1-x)w'' + {c-(a+b+1)x}w' - abw = 0``."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    @property
    def mu0(self):
        return 1 - self.c

    @property
    def mu1(self):
        return self.c - self.a - self.b

    @property
    def mu_inf(self):
        return self.a - self.b

    def __str__(self):
        return f"({self.a}, {self.b}, {self.c})"


def _hyp2f1_coeffs(a, b, c, order):
    coeffs = [Fraction(1)]
    term = Fraction(1)
    for n in range(order):
        if not term:
            coeffs.append(term)
            continue
        if c + n == 0:
            raise BadLowerParameter(f"lower parameter c={c} makes (c, {n + 1}) vanish")
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1))
        coeffs.append(term)
    return coeffs


def gauss_series(p, order):
    """``F(a, b, c; x)`` through ``x**order``.

    A lower parameter that is a nonpositive integer is only an error if the
    series has not already terminated by the time ``(c, n)`` vanishes.
    """
    return PuiseuxSeries(_hyp2f1_coeffs(p.a, p.b, p.c, order), order)


def kummer_pair(p, order):
    """The local solutions ``u = F(a,b,c;x)`` and
    ``v = x**(1-c) F(a-c+1, b-c+1, 2-c; x)``, both through ``x**order``.

    Both series share the base denominator of ``1 - c``.
    """
    shift = 1 - p.c
    if shift.denominator == 1:
        raise DegenerateKummerPair(
            f"1 - c = {shift} is an integer; the second solution is logarithmic")
    M = shift.denominator
    u = gauss_series(p, order).rebase(M)
    # v's series factor needs extra terms when its leading exponent is negative
    extra = max(0, ceil(-shift))
    w = gauss_series(HGParams(p.a - p.c + 1, p.b - p.c + 1, 2 - p.c), order + extra)
    v = w.shift(shift).truncate(order * M)
    return u, v


@dataclass(frozen=True)
class TerminatingPFQ:
    upper: tuple
    lower: tuple

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(as_fraction(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(as_fraction(b) for b in self.lower))

    @property
    def termination_index(self):
        """Smallest ``n`` such that some upper parameter equals ``-n``."""
        ns = [-a for a in self.upper if a.denominator == 1 and a <= 0]
        if not ns:
            raise NonTerminating(f"no upper parameter of {self.upper} is a nonpositive integer")
        return int(min(ns))


def pfq_at_one(f):
    """Exact value of a terminating ``pFq(upper; lower; 1)``."""
    top = f.termination_index
    total = Fraction(1)
    term = Fraction(1)
    for k in range(top):
        den = Fraction(k + 1)
        for b in f.lower:
            if b + k == 0:
                raise DivisionMidSum(
                    f"lower parameter {b} vanishes at index {k + 1} <= {top}")
            den *= b + k
        num = Fraction(1)
        for a in f.upper:
            num *= a + k
        term = term * num / den
        total += term
    return total


def pfq(upper, lower):
    """Shorthand: ``pfq_at_one(TerminatingPFQ(upper, lower))``."""
    return pfq_at_one(TerminatingPFQ(tuple(upper), tuple(lower)))
