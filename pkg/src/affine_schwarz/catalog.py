"""Catalogue of the polyhedral invariant tables.

Each :class:`PolyhedralCase` carries the three basic invariants and four
parameter rows. Rows three and four are stated for the swapped polynomials
``P(v, u)``. Entries are stored verbatim, known errors included; the
verifier decides what is right.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import ConfigError
from .exact import as_fraction
from .hypergeom import HGParams
from .invariants import HomogeneousBivariatePoly

J_LABELS = ("0", "1", "inf")
SIGN_CASES = ("i", "ii", "iii", "iv")
DIHEDRAL = ("D1", "D2", "D3")
REGULAR = ("T1", "T2", "T3", "O1", "O2", "O3", "O4", "O5", "O6", "I1", "I6")
OTHER = ("T4", "T5", "T6", "O7", "O8", "O9", "I7", "I8")


@dataclass(frozen=True)
class FjSpec:
    """``x**e0 * (1-x)**e1 * rational_factor(x)``."""

    j: str
    e0: Fraction
    e1: Fraction
    rational_factor: tuple = (Fraction(1),)

    def __post_init__(self):
        object.__setattr__(self, "e0", as_fraction(self.e0))
        object.__setattr__(self, "e1", as_fraction(self.e1))
        object.__setattr__(self, "rational_factor",
                           tuple(as_fraction(c) for c in self.rational_factor))

    def __str__(self):
        parts = []
        if self.e0:
            parts.append(f"x^({self.e0})")
        if self.e1:
            parts.append(f"(1-x)^({self.e1})")
        if self.rational_factor != (1,):
            parts.append("(" + _poly_str(self.rational_factor) + ")")
        return " ".join(parts) or "1"


@dataclass(frozen=True)
class CaseRow:
    index: int
    params: HGParams
    sign_case: str
    swapped: bool
    table_fj: tuple  # FjSpec for j = 0, 1, inf

    def fj(self, j):
        return self.table_fj[J_LABELS.index(j)]

    @property
    def has_rational_factor(self):
        return any(f.rational_factor != (1,) for f in self.table_fj)


@dataclass(frozen=True)
class PolyhedralCase:
    label: str
    k_triple: tuple
    N: int  # None for cases with a fractional k
    P0: HomogeneousBivariatePoly
    P1: HomogeneousBivariatePoly
    Pinf: HomogeneousBivariatePoly
    rows: tuple
    n: int = None  # dihedral parameter

    def poly(self, j):
        return (self.P0, self.P1, self.Pinf)[J_LABELS.index(j)]

    @property
    def integral(self):
        return all(k.denominator == 1 for k in self.k_triple)

    @property
    def name(self):
        return f"{self.label}(n={self.n})" if self.n is not None else self.label


def _poly_str(coeffs):
    out = []
    for n, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if n == 0 else ("x" if n == 1 else f"x^{n}")
        if mono and c == 1:
            out.append(mono)
        elif mono and c == -1:
            out.append("-" + mono)
        else:
            out.append(f"{c}{'*' + mono if mono else ''}")
    return " + ".join(out).replace("+ -", "- ") or "0"


_FJ = re.compile(r"^(?:x\^\(?(?P<e0>-?\d+(?:/\d+)?)\)?)?"
                 r"(?:\(1-x\)\^\(?(?P<e1>-?\d+(?:/\d+)?)\)?)?"
                 r"(?:\[(?P<f>[^\]]*)\])?$")


def parse_fj(j, text):
    """Parse e.g. ``"x^1/3 (1-x)^-2 [1 -2]"``; the bracket holds the
    coefficients of the rational factor in ascending powers of x."""
    compact = text.replace(" ", "") if "[" not in text else (
        text[:text.index("[")].replace(" ", "") + text[text.index("["):])
    if compact == "1":
        return FjSpec(j, 0, 0)
    m = _FJ.match(compact)
    if not m:
        raise ValueError(f"bad f_j text {text!r}")
    factor = (Fraction(1),)
    if m.group("f") is not None:
        factor = tuple(Fraction(c) for c in m.group("f").split())
    return FjSpec(j, m.group("e0") or 0, m.group("e1") or 0, factor)


def _rows(specs):
    rows = []
    for index, (abc, fjs) in enumerate(specs, start=1):
        a, b, c = abc.split(",")
        rows.append(CaseRow(
            index=index,
            params=HGParams(a, b, c),
            sign_case=SIGN_CASES[index - 1],
            swapped=index >= 3,
            table_fj=tuple(parse_fj(j, t) for j, t in zip(J_LABELS, fjs)),
        ))
    return tuple(rows)


def _case(label, k_triple, polys, specs):
    ks = tuple(as_fraction(k) for k in k_triple.split(","))
    P0, P1, Pinf = (HomogeneousBivariatePoly.parse(p) for p in polys)
    N = None
    if all(k.denominator == 1 for k in ks):
        two_over_n = sum(1 / k for k in ks) - 1
        N = int(2 / two_over_n)
    return PolyhedralCase(label, ks, N, P0, P1, Pinf, _rows(specs))


# Rows: "a,b,c" then the printed right-hand sides of P0, P1, Pinf.
_TABLES = {
    "T1": ("2,3,3", (
        "u^5 v + 1/432 u v^5",
        "u^4 - 1/6 u^2 v^2 - 1/432 v^4",
        "u^4 + 1/6 u^2 v^2 - 1/432 v^4",
    ), [
        ("1/4,-1/12,1/2", ("x^1/2", "(1-x)^1/3", "1")),
        ("1/4,7/12,1/2", ("x^1/2 (1-x)^-2", "(1-x)^-1", "(1-x)^-4/3")),
        ("5/12,3/4,3/2", ("x^-5/2", "x^-2 (1-x)^1/3", "x^-2")),
        ("13/12,3/4,3/2", ("x^-5/2 (1-x)^-2", "x^-2 (1-x)^-1", "x^-2 (1-x)^-4/3")),
    ]),
    "T2": ("3,2,3", (
        "u^3 v - 1/64 v^4",
        "u^6 - 5/16 u^3 v^3 - 1/512 v^6",
        "u^4 + 1/8 u v^3",
    ), [
        ("1/4,-1/12,2/3", ("x^1/3", "(1-x)^1/2", "1")),
        ("5/12,3/4,2/3", ("x^1/3 (1-x)^-2", "(1-x)^-5/2", "(1-x)^-2")),
        ("1/4,7/12,4/3", ("x^-1", "x^-2 (1-x)^1/2", "x^-4/3")),
        ("13/12,3/4,4/3", ("x^-1 (1-x)^-2", "x^-2 (1-x)^-5/2", "x^-4/3 (1-x)^-2")),
    ]),
    "T3": ("3,3,2", (
        "u^3 v + 1/64 v^4",
        "u^4 - 1/8 u v^3",
        "u^6 + 5/16 u^3 v^3 - 1/512 v^6",
    ), [
        ("5/12,-1/12,2/3", ("x^1/3", "(1-x)^1/3", "1")),
        ("1/4,3/4,2/3", ("x^1/3 (1-x)^-4/3", "(1-x)^-1", "(1-x)^-2")),
        ("1/4,3/4,4/3", ("x^-1", "x^-4/3 (1-x)^1/3", "x^-2")),
        ("13/12,7/12,4/3", ("x^-1 (1-x)^-4/3", "x^-4/3 (1-x)^-1", "x^-2 (1-x)^-2")),
    ]),
    "O1": ("2,3,4", (
        "u^11 v - 11/432 u^9 v^3 + 11/3456 u^7 v^5 + 11/165888 u^5 v^7"
        " - 11/47775744 u^3 v^9 + 1/254803968 u v^11",
        "u^8 - 7/36 u^6 v^2 - 7/3456 u^4 v^4 - 7/82944 u^2 v^6 + 1/5308416 v^8",
        "u^6 + 5/48 u^4 v^2 - 5/2304 u^2 v^4 - 1/110592 v^6",
    ), [
        ("5/24,-1/24,1/2", ("x^1/2", "(1-x)^1/3", "1")),
        ("7/24,13/24,1/2", ("x^1/2 (1-x)^-4", "(1-x)^-7/3", "(1-x)^-2")),
        ("11/24,17/24,3/2", ("x^-11/2", "x^-4 (1-x)^1/3", "x^-3")),
        ("25/24,19/24,3/2", ("x^-11/2 (1-x)^-4", "x^-4 (1-x)^-7/3", "x^-3 (1-x)^-2")),
    ]),
    "O2": ("2,4,3", (
        "u^11 v + 11/432 u^9 v^3 + 11/3456 u^7 v^5 - 11/165888 u^5 v^7"
        " - 11/47775744 u^3 v^9 - 1/254803968 u v^11",
        "u^6 - 5/48 u^4 v^2 - 5/2304 u^2 v^4 + 1/110592 v^6",
        "u^8 + 7/36 u^6 v^2 - 7/3456 u^4 v^4 + 7/82944 u^2 v^6 + 1/5308416 v^8",
    ), [
        ("7/24,-1/24,1/2", ("x^1/2", "(1-x)^1/4", "1")),
        ("5/24,13/24,1/2", ("x^1/2 (1-x)^-3", "(1-x)^-5/4", "(1-x)^-2")),
        ("11/24,19/24,3/2", ("x^-11/2", "x^-3 (1-x)^1/4", "x^-4")),
        ("25/24,17/24,3/2", ("x^-11/2 (1-x)^-3", "x^-3 (1-x)^-5/4", "x^-4 (1-x)^-4")),
    ]),
    "O3": ("3,2,4", (
        "u^7 v - 7/256 u^4 v^4 - 1/8192 u v^7",
        "u^12 - 11/32 u^9 v^3 - 11/262144 u^3 v^9 - 1/67108864 v^12",
        "u^6 + 5/64 u^3 v^3 - 1/8192 v^6",
    ), [
        ("5/24,-1/24,2/3", ("x^1/3", "(1-x)^1/2", "1")),
        ("11/24,17/24,2/3", ("x^1/3 (1-x)^-4", "(1-x)^-11/2", "(1-x)^-3")),
        ("7/24,13/24,4/3", ("x^-7/3", "x^-4 (1-x)^1/2", "x^-2")),
        ("25/24,19/24,4/3", ("x^-7/3 (1-x)^-4", "x^-4 (1-x)^-11/2", "x^-2 (1-x)^-3")),
    ]),
    "O4": ("3,4,2", (
        "u^7 v + 7/256 u^4 v^4 - 1/8192 u v^7",
        "u^6 - 5/64 u^3 v^3 - 1/8192 v^6",
        "u^12 + 11/32 u^9 v^3 + 11/262144 u^3 v^9 - 1/67108864 v^12",
    ), [
        ("11/24,-1/24,2/3", ("x^1/3", "(1-x)^1/4", "1")),
        ("5/24,17/24,2/3", ("x^1/3 (1-x)^-2", "(1-x)^-5/4", "(1-x)^-3")),
        ("7/24,19/24,4/3", ("x^-7/3", "x^-2 (1-x)^1/4", "x^-4")),
        ("25/24,13/24,4/3", ("x^-7/3 (1-x)^-2", "x^-2 (1-x)^-5/4", "x^-4 (1-x)^-3")),
    ]),
    "O5": ("4,2,3", (
        "u^5 v - 1/108 u v^5",
        "u^12 - 11/36 u^8 v^4 - 11/3888 u^4 v^8 + 1/1259712 v^12",
        "u^8 + 7/54 u^4 v^4 + 1/11664 v^8",
    ), [
        ("7/24,-1/24,3/4", ("x^1/4", "(1-x)^1/2", "1")),
        ("11/24,19/24,3/4", ("x^1/2 (1-x)^-3", "(1-x)^-11/2", "(1-x)^-4")),
        ("5/24,13/24,5/4", ("x^-5/4", "x^-3 (1-x)^1/2", "x^-2")),
        ("25/24,17/24,5/4", ("x^-5/4 (1-x)^-3", "x^-3 (1-x)^-11/2", "x^-2 (1-x)^-4")),
    ]),
    "O6": ("4,3,2", (
        "u^5 v + 1/108 u v^5",
        "u^8 - 7/54 u^4 v^4 + 1/11664 v^8",
        "u^12 + 11/36 u^8 v^4 - 11/3888 u^4 v^8 - 1/1259712 v^12",
    ), [
        ("11/24,-1/24,3/4", ("x^1/4", "(1-x)^1/3", "1")),
        ("7/24,19/24,3/4", ("x^1/4 (1-x)^-2", "(1-x)^-7/3", "(1-x)^-4")),
        ("5/24,17/24,5/4", ("x^-5/4", "x^-2 (1-x)^1/3", "x^-3")),
        ("25/24,13/24,5/4", ("x^-5/4 (1-x)^-2", "x^-2 (1-x)^-7/3", "x^-3 (1-x)^-4")),
    ]),
    "I1": ("2,3,5", (
        # The printed P0 repeats the monomial u^17 v^13 (the second time
        # written v^13 u^17) and has no u^15 v^15 or u^13 v^17 term.
        "u^29 v - 29/675 u^27 v^3 + 1769/450000 u^25 v^5 + 29/337500 u^23 v^7"
        " + 667/540000000 u^21 v^9 - 667/72900000000 u^19 v^11"
        " + 12673/29160000000000 u^17 v^13 - 12673/524880000000000000 u^17 v^13"
        " + 667/23619600000000000000 u^11 v^19 - 667/3149280000000000000000 u^9 v^21"
        " - 29/35429400000000000000000 u^7 v^23 - 1769/850305600000000000000000000 u^5 v^25"
        " + 29/22958251200000000000000000000 u^3 v^27"
        " - 1/612220032000000000000000000000 u v^29",
        "u^20 - 19/90 u^18 v^2 - 19/18000 u^16 v^4 - 19/135000 u^14 v^6"
        " - 247/162000000 u^12 v^8 + 247/14580000000 u^10 v^10"
        " - 247/2916000000000 u^8 v^12 - 19/43740000000000 u^6 v^14"
        " - 19/104976000000000000 u^4 v^16 - 19/9447840000000000000 u^2 v^18"
        " + 1/1889568000000000000000 v^20",
        "u^12 + 11/150 u^10 v^2 - 11/6000 u^8 v^4 - 11/1350000 u^6 v^6"
        " - 11/108000000 u^4 v^8 + 11/48600000000 u^2 v^10 + 1/5832000000000 v^12",
    ), [
        ("11/60,-1/60,1/2", ("x^1/2", "(1-x)^1/3", "1")),
        ("19/60,31/60,1/2", ("x^1/2 (1-x)^-10", "(1-x)^-19/3", "(1-x)^-4")),
        ("29/60,41/60,3/2", ("x^-29/2", "x^-10 (1-x)^1/3", "x^-6")),
        ("61/60,49/60,3/2", ("x^-29/2 (1-x)^-10", "x^-10 (1-x)^-19/3", "x^-6 (1-x)^-4")),
    ]),
    "I6": ("5,3,2", (
        "u^11 v + 11/1728 u^6 v^6 - 1/2985984 u v^11",
        "u^20 - 19/144 u^15 v^5 + 247/1492992 u^10 v^10 + 19/429981696 u^5 v^15"
        " + 1/8916100448256 v^20",
        "u^30 + 29/96 u^25 v^5 - 3335/995328 u^20 v^10 - 3335/2972033482752 u^10 v^20"
        " - 29/855945643032576 u^5 v^25 + 1/26623333280885243904 v^30",
    ), [
        ("29/60,-1/60,4/5", ("x^1/5", "(1-x)^1/3", "1")),
        ("19/60,49/60,4/5", ("x^1/5 (1-x)^-4", "(1-x)^-19/3", "(1-x)^-10")),
        ("11/60,41/60,6/5", ("x^-11/5", "x^-4 (1-x)^1/3", "x^-6")),
        ("61/60,31/60,6/5", ("x^-11/5 (1-x)^-4", "x^-4 (1-x)^-19/3", "x^-6 (1-x)^-10")),
    ]),
    "T4": ("3,3,3/2", (
        "u^3 v - 1/16 v^4",
        "u^6 - 5/4 u^3 v^3 - 1/32 v^6",
        "u^4 + 1/2 u v^3",
    ), [
        ("1/2,-1/6,2/3", ("x^1/3 (1-x)^1/3", "[1 -2]", "1")),
        ("1/6,5/6,2/3", ("x^1/3 (1-x)^-1", "(1-x)^-2 [1 -2]", "(1-x)^-4/3")),
        ("1/6,5/6,4/3", ("x^-1 (1-x)^1/3", "x^-2 [1 -2]", "x^-4/3")),
        ("7/6,1/2,4/3", ("x^-1 (1-x)^-1", "x^-2 (1-x)^-2 [1 -2]", "x^-4/3 (1-x)^-4/3")),
    ]),
    "T5": ("3,3/2,3", (
        "u^3 v + 1/16 v^4",
        "u^4 - 1/2 u v^3",
        "u^6 + 5/4 u^3 v^3 - 1/32 v^6",
    ), [
        ("1/6,-1/6,2/3", ("x^1/3", "(1-x)^2/3", "[1 1]")),
        ("1/2,5/6,2/3", ("x^1/3 (1-x)^-8/3", "(1-x)^-2", "(1-x)^-4 [1 1]")),
        # printed with the same parameters as the fourth row
        ("7/6,5/6,4/3", ("x^-1", "x^-4/3 (1-x)^2/3", "x^-2 [1 1]")),
        ("7/6,5/6,4/3", ("x^-1 (1-x)^-8/3", "x^-4/3 (1-x)^-2", "x^-2 (1-x)^-4 [1 1]")),
    ]),
    "T6": ("3/2,3,3", (
        "u^3 v + 1/256 v^4",
        "u^4 - 1/32 u v^3",
        "u^6 + 5/64 u^3 v^3 - 1/8192 v^6",
    ), [
        ("1/6,-1/6,1/3", ("x^2/3", "(1-x)^1/3", "[1 -1/2]")),
        ("1/6,1/2,1/3", ("x^2/3 (1-x)^-4/3", "(1-x)^-1", "(1-x)^-2 [1 -1/2]")),
        ("1/2,5/6,5/3", ("x^-2", "x^-8/3 (1-x)^1/3", "x^-4 [1 -1/2]")),
        ("7/6,5/6,5/3", ("x^-2 (1-x)^-4/3", "x^-8/3 (1-x)^-1", "x^-4 (1-x)^-2 [1 -1/2]")),
    ]),
    "O7": ("4,4,3/2", (
        "u^5 v - 1/27 u v^5",
        "u^12 - 11/9 u^8 v^4 - 11/243 u^4 v^8 + 1/19683 v^12",
        "u^8 + 14/27 u^4 v^4 + 1/729 v^8",
    ), [
        ("7/12,-1/12,3/4", ("x^1/4 (1-x)^1/4", "[1 -2]", "1")),
        ("1/6,5/6,3/4", ("x^1/4 (1-x)^-5/4", "(1-x)^-3 [1 -2]", "(1-x)^-2")),
        ("1/6,5/6,5/4", ("x^-5/4 (1-x)^1/4", "x^-3 [1 -2]", "x^-2")),
        ("13/12,5/12,5/4", ("x^-5/4 (1-x)^-5/4", "x^-3 (1-x)^-3 [1 -2]",
                            "x^-2 (1-x)^-2 [1 -1/2]")),
    ]),
    "O8": ("4,3/2,4", (
        "u^5 v + 1/27 u v^5",
        "u^12 + 11/9 u^8 v^4 - 11/243 u^4 v^8 - 1/19683 v^12",
        "u^8 - 14/27 u^4 v^4 + 1/729 v^8",
    ), [
        ("1/6,-1/12,3/4", ("x^1/4", "(1-x)^2/3", "[1 1]")),
        ("7/12,5/6,3/4", ("x^1/4 (1-x)^-4", "(1-x)^-14/3", "(1-x)^-8 [1 1]")),
        ("1/6,5/12,5/4", ("x^-5/4", "x^-2 (1-x)^2/3", "x^-3 [1 1]")),
        ("13/12,5/6,5/4", ("x^-5/4 (1-x)^-4", "x^-2 (1-x)^-14/3", "x^-3 (1-x)^-8 [1 1]")),
    ]),
    "O9": ("3/2,4,4", (
        "u^7 v + 7/1024 u^4 v^4 - 1/131072 u v^7",
        "u^6 - 5/256 u^3 v^3 - 1/131072 v^6",
        "u^12 + 11/128 u^9 v^3 + 11/16777216 u^3 v^9 - 1/17179869184 v^12",
    ), [
        ("1/6,-1/12,1/3", ("x^2/3", "(1-x)^1/4", "[1 -1/2]")),
        ("1/6,5/12,1/3", ("x^2/3 (1-x)^-2", "(1-x)^-5/4", "(1-x)^-3 [1 -1/2]")),
        ("7/12,5/6,5/3", ("x^-14/3", "x^-4 (1-x)^1/4", "x^-8 [1 -1/2]")),
        ("13/12,5/6,5/3", ("x^-14/3 (1-x)^-2", "x^-4 (1-x)^-5/4", "x^-8 (1-x)^-3 [1 -1/2]")),
    ]),
    "I7": ("3,3,5/2", (
        "u^19 v - 57/400 u^16 v^4 - 57/25000 u^13 v^7 - 247/2500000 u^10 v^10"
        " + 57/312500000 u^7 v^13 - 57/62500000000 u^4 v^16 - 1/1953125000000 u v^19",
        "u^30 - 29/20 u^27 v^3 + 783/20000 u^24 v^6 - 2001/500000 u^21 v^9"
        " - 38019/250000000 u^18 v^12 - 38019/3125000000000 u^12 v^18"
        " + 2001/78125000000000 u^9 v^21 + 783/39062500000000000 u^6 v^24"
        " + 29/488281250000000000 u^3 v^27 + 1/305175781250000000000 v^30",
        "u^12 + 11/50 u^9 v^3 - 3/12500 u^6 v^6 - 11/625000 u^3 v^9 + 1/156250000 v^12",
    ), [
        ("11/30,-1/30,2/3", ("x^1/3 (1-x)^1/3", "[1 -2]", "1")),
        ("7/10,3/10,2/3", ("x^1/3 (1-x)^-19/3", "(1-x)^-10 [1 -2]", "(1-x)^-4")),
        ("7/10,3/10,4/3", ("x^-19/3 (1-x)^1/3", "x^-10 [1 -2]", "x^-4")),
        ("31/30,19/30,4/3", ("x^-19/3 (1-x)^-19/3", "x^-10 (1-x)^-10 [1 -2]",
                             "x^-4 (1-x)^-4")),
    ]),
    "I8": ("5,5,3/2", (
        "u^11 v - 11/432 u^6 v^6 - 1/186624 u v^11",
        "u^30 - 29/24 u^25 v^5 - 3335/62208 u^20 v^10 - 3335/11609505792 u^10 v^20"
        " + 29/835884417024 u^5 v^25 + 1/649983722678624 v^30",
        "u^20 + 19/36 u^15 v^5 + 247/93312 u^10 v^10 - 19/6718464 u^5 v^15"
        " + 1/3482851767 v^20",
    ), [
        ("19/30,-1/30,4/5", ("x^1/5 (1-x)^1/5", "[1 -2]", "1")),
        ("1/6,5/6,4/5", ("x^1/5 (1-x)^-11/5", "(1-x)^-6 [1 -2]", "(1-x)^-4")),
        ("1/6,5/6,6/5", ("x^-11/5 (1-x)^1/5", "x^-6 [1 -2]", "x^-4")),
        ("31/30,11/30,6/5", ("x^-11/5 (1-x)^-11/5", "x^-6 (1-x)^-6 [1 -2]",
                             "x^-4 (1-x)^-4")),
    ]),
}


def _dihedral_polys(label, n):
    def alt_sum(start, sign):
        terms = {}
        for k in range((n - start) // 2 + 1):
            j = 2 * k + start
            if j > n:
                break
            terms[j] = Fraction((-1) ** k if sign else 1) * comb(n, j) / Fraction(n) ** j
        return HomogeneousBivariatePoly.from_terms(n, terms)

    if label == "D1":
        # printed as i * sum C(n,2k+1) u^(n-2k-1) (v/(i n))^(2k+1); the
        # powers of i collapse to (-1)^k
        return (alt_sum(1, True), alt_sum(0, True),
                HomogeneousBivariatePoly.from_terms(2, {0: 1, 2: Fraction(1, n * n)}))
    if label == "D2":
        return (alt_sum(1, False),
                HomogeneousBivariatePoly.from_terms(2, {0: 1, 2: Fraction(-1, n * n)}),
                alt_sum(0, False))
    return (HomogeneousBivariatePoly.from_terms(2, {1: 1}),
            HomogeneousBivariatePoly.from_terms(n, {0: 1, n: Fraction(-1, 4)}),
            HomogeneousBivariatePoly.from_terms(n, {0: 1, n: Fraction(1, 4)}))


def _dihedral_rows(label, n):
    F = Fraction
    h = F(1, 2 * n)
    half_n = F(n, 2)
    if label == "D1":
        params = [(h, -h, F(1, 2)), ((n - 1) * h, (n + 1) * h, F(1, 2)),
                  ((n - 1) * h, (n + 1) * h, F(3, 2)), ((2 * n - 1) * h, (2 * n + 1) * h, F(3, 2))]
        fjs = [
            [(F(1, 2), 0), (0, F(1, 2)), (0, 0)],
            [(F(1, 2), -half_n), (0, F(1 - n, 2)), (0, -1)],
            [(F(1 - n, 2), 0), (-half_n, F(1, 2)), (-1, 0)],
            [(F(1 - n, 2), -half_n), (-half_n, F(1 - n, 2)), (-1, -1)],
        ]
    elif label == "D2":
        params = [((n - 1) * h, -h, F(1, 2)), (h, (n + 1) * h, F(1, 2)),
                  ((n - 1) * h, (2 * n - 1) * h, F(3, 2)), ((2 * n + 1) * h, (n + 1) * h, F(3, 2))]
        fjs = [
            [(F(1, 2), 0), (0, F(1, n)), (0, 0)],
            [(F(1, 2), -1), (0, F(-1, n)), (0, -1)],
            [(F(1 - n, 2), 0), (-1, F(1, n)), (-half_n, 0)],
            [(F(1 - n, 2), -1), (-1, F(-1, n)), (-half_n, -1)],
        ]
    else:
        params = [((n - 1) * h, -h, F(n - 1, n)), ((n - 1) * h, (2 * n - 1) * h, F(n - 1, n)),
                  (h, (n + 1) * h, F(n + 1, n)), ((2 * n + 1) * h, (n + 1) * h, F(n + 1, n))]
        fjs = [
            [(F(1, n), 0), (0, F(1, 2)), (0, 0)],
            [(F(1, n), -1), (0, F(1 - n, 2)), (0, -half_n)],
            [(F(-1, n), 0), (-1, F(1, 2)), (-1, 0)],
            [(F(-1, n), -1), (-1, F(1 - n, 2)), (-1, -half_n)],
        ]
    rows = []
    for index, ((a, b, c), pairs) in enumerate(zip(params, fjs), start=1):
        rows.append(CaseRow(
            index=index,
            params=HGParams(a, b, c),
            sign_case=SIGN_CASES[index - 1],
            swapped=index >= 3,
            table_fj=tuple(FjSpec(j, e0, e1) for j, (e0, e1) in zip(J_LABELS, pairs)),
        ))
    return tuple(rows)


def dihedral_case(label, n):
    """D1, D2 or D3 for a concrete integer ``n >= 2``."""
    if label not in DIHEDRAL:
        raise ConfigError(f"{label!r} is not a dihedral case")
    if not isinstance(n, int) or n < 2:
        raise ConfigError(f"dihedral n must be an integer >= 2, got {n!r}")
    ks = {"D1": (2, 2, n), "D2": (2, n, 2), "D3": (n, 2, 2)}[label]
    P0, P1, Pinf = _dihedral_polys(label, n)
    return PolyhedralCase(label, tuple(Fraction(k) for k in ks), 2 * n, P0, P1, Pinf,
                          _dihedral_rows(label, n), n=n)


_CACHE = {}


def get_case(label, n=None):
    """Look up one case; dihedral labels need ``n``."""
    if label in DIHEDRAL:
        if n is None:
            raise ConfigError(f"{label} needs a dihedral parameter n")
        return dihedral_case(label, n)
    if label not in _TABLES:
        raise ConfigError(f"unknown case label {label!r}")
    if label not in _CACHE:
        _CACHE[label] = _case(label, *_TABLES[label])
    return _CACHE[label]


def catalog(n_values=range(2, 8)):
    """Every catalogued case: D1-D3 for each n in ``n_values``, then the
    regular-polyhedral cases, then the fractional-k cases."""
    cases = [dihedral_case(label, n) for label in DIHEDRAL for n in n_values]
    cases += [get_case(label) for label in REGULAR + OTHER]
    return cases


# -- serialization ----------------------------------------------------------

def _q(x):
    x = as_fraction(x)
    return f"{x.numerator}/{x.denominator}"


def case_to_document(case):
    """JSON-ready dict; every rational is a ``"p/q"`` string."""
    return {
        "label": case.label,
        "n": case.n,
        "k_triple": [_q(k) for k in case.k_triple],
        "N": case.N,
        "polynomials": {j: [_q(c) for c in case.poly(j).coeffs] for j in J_LABELS},
        "rows": [
            {
                "index": row.index,
                "abc": [_q(row.params.a), _q(row.params.b), _q(row.params.c)],
                "sign_case": row.sign_case,
                "swapped": row.swapped,
                "table_fj": {
                    f.j: {"e0": _q(f.e0), "e1": _q(f.e1),
                          "rational_factor": [_q(c) for c in f.rational_factor]}
                    for f in row.table_fj
                },
            }
            for row in case.rows
        ],
    }


def case_from_document(doc):
    polys = [HomogeneousBivariatePoly([Fraction(c) for c in doc["polynomials"][j]])
             for j in J_LABELS]
    rows = tuple(
        CaseRow(
            index=r["index"],
            params=HGParams(*r["abc"]),
            sign_case=r["sign_case"],
            swapped=r["swapped"],
            table_fj=tuple(
                FjSpec(j, r["table_fj"][j]["e0"], r["table_fj"][j]["e1"],
                       r["table_fj"][j]["rational_factor"])
                for j in J_LABELS),
        )
        for r in doc["rows"]
    )
    return PolyhedralCase(doc["label"], tuple(Fraction(k) for k in doc["k_triple"]),
                          doc["N"], *polys, rows, n=doc.get("n"))
