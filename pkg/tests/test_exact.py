from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from affine_schwarz.errors import NonUnitSeries, RebaseOverflow
from affine_schwarz.exact import (MAX_BASE, LinearSystem, PuiseuxSeries, as_fraction,
                                  binomial_series, first_mismatch, pochhammer,
                                  pochhammer_is_zero, series_arith, series_int_pow,
                                  series_inverse, solve_exact)

X = PuiseuxSeries.from_x_coeffs

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def series_st(order=20, unit=False):
    coeffs = st.lists(rationals, min_size=order + 1, max_size=order + 1)
    if unit:
        coeffs = coeffs.filter(lambda cs: cs[0] != 0)
    return coeffs.map(lambda cs: X(cs, order))


# -- scalars --------------------------------------------------------------

def test_as_fraction_accepts_strings_and_rejects_floats():
    assert as_fraction("3/4") == F(3, 4)
    assert as_fraction(-2) == F(-2)
    with pytest.raises(TypeError):
        as_fraction(0.5)


def test_pochhammer_values():
    assert pochhammer(F(5, 2), 0) == 1
    assert pochhammer(3, 4) == 360
    assert pochhammer(-2, 4) == 0


def test_pochhammer_is_zero_examples():
    assert pochhammer_is_zero(-2, 4)
    assert not pochhammer_is_zero(F(1, 2), 100)
    assert not pochhammer_is_zero(-2, 2)


def test_pochhammer_is_zero_agrees_on_grid():
    for num in range(-10, 11):
        a = F(num, 2)
        for n in range(13):
            assert pochhammer_is_zero(a, n) == (pochhammer(a, n) == 0), (a, n)


def test_pochhammer_matches_sympy():
    for a in (F(1, 3), F(-7, 2), F(5)):
        for n in range(8):
            assert pochhammer(a, n) == sympy.rf(sympy.Rational(a.numerator, a.denominator), n)


# -- series basics ----------------------------------------------------------

def test_ring_examples():
    one_plus = X([1, 1], 6)
    one_minus = X([1, -1], 6)
    assert series_arith(one_plus, one_minus, "mul") == X([1, 0, -1], 6)
    s = X([3, 1, 4, 1, 5], 4)
    assert series_arith(s, PuiseuxSeries.zero(4), "add") == s
    half = PuiseuxSeries.monomial(F(1, 2), 5)
    assert half.M == 2
    prod = half * half
    assert prod.coefficient(1) == 1 and prod.x_valuation == 1


def test_unknown_operation():
    with pytest.raises(ValueError):
        series_arith(X([1], 2), X([1], 2), "div")


def test_order_is_min_of_operands():
    a = X([1, 2, 3], 5)
    b = X([1, 1], 3)
    assert (a + b).x_order == 3
    assert (a * b).x_order == 3


def test_zero_series_equal_regardless_of_base():
    assert PuiseuxSeries.zero(5, 1) == PuiseuxSeries.zero(5, 3)
    assert PuiseuxSeries([0, 0, 0], 4, 2).is_zero()


def test_rebase_roundtrip():
    s = PuiseuxSeries.monomial(F(1, 3), 4) + X([1, 2], 4)
    up = s.rebase(6)
    assert up.M == 6
    assert up.rebase(3) == s
    assert up.reduced().M == 3


def test_rebase_rejects_unrepresentable():
    s = PuiseuxSeries.monomial(F(1, 3), 4)
    with pytest.raises(ValueError):
        s.rebase(1)


def test_rebase_overflow():
    a = PuiseuxSeries.monomial(F(1, 9973), 1)
    b = PuiseuxSeries.monomial(F(1, 9967), 1)
    assert a.M <= MAX_BASE and b.M <= MAX_BASE
    with pytest.raises(RebaseOverflow):
        a + b


def test_getitem_beyond_order():
    s = X([1, 2], 3)
    assert s[3] == 0
    with pytest.raises(IndexError):
        s[4]


def test_inverse_examples():
    inv = series_inverse(X([1, -1], 10))
    assert all(inv.coefficient(n) == 1 for n in range(11))
    assert series_inverse(PuiseuxSeries.constant(2, 5)) == PuiseuxSeries.constant(F(1, 2), 5)
    with pytest.raises(NonUnitSeries):
        series_inverse(X([0, 1], 5))


def test_int_pow_examples():
    assert series_int_pow(X([1, 1], 6), 2) == X([1, 2, 1], 6)
    s = X([5, 3], 6)
    assert series_int_pow(s, 0) == PuiseuxSeries.constant(1, 6)
    base = PuiseuxSeries.monomial(F(1, 2), 12) * binomial_series(1, 12)
    got = series_int_pow(base, -2)
    assert got.x_valuation == -1
    for n in range(8):
        assert got.coefficient(n - 1) == n + 1


def test_negative_power_of_negative_valuation():
    s = PuiseuxSeries.monomial(-1, 10) * binomial_series(-1, 10)
    inv2 = s ** -2
    assert inv2.x_valuation == 2
    assert first_mismatch(inv2 * s ** 2, PuiseuxSeries.constant(1, 10)) is None


def test_shift_and_derivative():
    s = X([1, 1, 1], 4).shift(F(1, 2))
    assert s.x_valuation == F(1, 2)
    d = X([0, 0, 0, 1], 6).derivative()
    assert d.coefficient(2) == 3 and d.x_order == 5


def test_first_mismatch_reports_exponent():
    a = X([1, 2, 3], 4)
    b = X([1, 2, 4], 4)
    assert first_mismatch(a, b) == (2, 3, 4)
    assert first_mismatch(a, a) is None


# -- binomial series -------------------------------------------------------

def test_binomial_examples():
    assert binomial_series(1, 8) == X([1, -1], 8)
    assert all(binomial_series(-1, 8).coefficient(n) == 1 for n in range(9))
    half = binomial_series(F(1, 2), 6)
    assert [half.coefficient(n) for n in range(4)] == [1, F(-1, 2), F(-1, 8), F(-1, 16)]
    assert half * half == X([1, -1], 6)


def test_binomial_integer_power_terminates():
    for p in range(1, 8):
        s = binomial_series(p, 15)
        expected = [(-1) ** k * sympy.binomial(p, k) for k in range(p + 1)]
        assert [s.coefficient(k) for k in range(16)] == expected + [0] * (15 - p)


@settings(max_examples=20, deadline=None, derandomize=True)
@given(rationals)
def test_binomial_inverse_pair(e):
    prod = binomial_series(e, 15) * binomial_series(-e, 15)
    assert prod == PuiseuxSeries.constant(1, 15)


def test_binomial_cube_root():
    s = binomial_series(F(1, 3), 10)
    assert [s.coefficient(n) for n in range(3)] == [1, F(-1, 3), F(-1, 9)]
    assert s ** 3 == X([1, -1], 10)


# -- property suites (ring axioms, inverses) ---------------------------------

@settings(max_examples=100, deadline=None, derandomize=True)
@given(series_st(), series_st(), series_st())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=100, deadline=None, derandomize=True)
@given(series_st(unit=True))
def test_inverse_roundtrip(s):
    assert s * s.inverse() == PuiseuxSeries.constant(1, 20)


# -- linear solver ----------------------------------------------------------

def test_solve_examples():
    ident = solve_exact(LinearSystem([[1, 0], [0, 1]], [F(3), F(-2, 7)]))
    assert ident.ok and ident.values == [3, F(-2, 7)]
    sol = solve_exact(LinearSystem([[1, 1], [1, -1]], [2, 0]))
    assert sol.values == [1, 1]
    assert solve_exact(LinearSystem([[1, 1], [2, 2]], [1, 3])).status == "inconsistent"
    assert solve_exact(LinearSystem([[1, 1], [2, 2]], [1, 2])).status == "underdetermined"


@settings(max_examples=100, deadline=None, derandomize=True)
@given(st.integers(1, 5).flatmap(
    lambda n: st.tuples(
        st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n + 2),
        st.lists(st.integers(-5, 5), min_size=n + 2, max_size=n + 2))))
def test_solve_against_sympy_rank(data):
    matrix, rhs = data
    rhs = rhs[:len(matrix)]
    sol = solve_exact(LinearSystem(matrix, rhs))
    A = sympy.Matrix(matrix)
    aug = A.row_join(sympy.Matrix(rhs))
    rank, rank_aug, cols = A.rank(), aug.rank(), A.shape[1]
    if rank < rank_aug:
        assert sol.status == "inconsistent"
    elif rank < cols:
        assert sol.status == "underdetermined"
    else:
        assert sol.status == "unique"
        for row, b in zip(matrix, rhs):
            assert sum(F(c) * x for c, x in zip(row, sol.values)) == b
