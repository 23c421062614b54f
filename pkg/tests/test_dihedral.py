import random
from fractions import Fraction as F

import pytest

from affine_schwarz.cli import random_product_params
from affine_schwarz.dihedral import (CoefficientSequence, ProductParams, default_grid,
                                     degree_check, degree_drop_coefficient, f_st,
                                     lemma31_coefficient, lemma35_g, lemma36_values,
                                     ode_residual, product_series_lemma31, recurrence_check,
                                     recurrence_terms)
from affine_schwarz.errors import ConfigError, DegreeMismatch, NonTerminating
from affine_schwarz.exact import PuiseuxSeries
from affine_schwarz.hypergeom import HGParams, gauss_series


def P(alpha, s, t):
    return ProductParams(alpha, s, t)


def test_params_validation():
    with pytest.raises(ConfigError):
        P(2, 0, 0)
    with pytest.raises(ConfigError):
        P(F(1, 3), F(1, 3), 0)
    with pytest.raises(ConfigError):
        P(F(1, 3), F(1, 2), 0)
    with pytest.raises(ConfigError):
        P(F(1, 3), -1, -1)


def test_product_formula_examples():
    s = product_series_lemma31(1, 1, 1, 1, 1, 1, 10)
    assert [s.coefficient(n) for n in range(11)] == list(range(1, 12))
    assert lemma31_coefficient(F(1, 3), F(2, 5), F(7, 2), F(-1, 4), F(5, 6), F(3, 7), 0) == 1


def test_product_formula_matches_cauchy_product():
    rng = random.Random(5)
    for _ in range(10):
        a, b, c, d, e, f = random_product_params(rng)
        lhs = product_series_lemma31(a, b, c, d, e, f, 10)
        rhs = gauss_series(HGParams(a, b, c), 10) * gauss_series(HGParams(d, e, f), 10)
        assert lhs == rhs


def test_f_st_dihedral_identity():
    w = f_st(P(F(1, 3), 0, 0), 20)
    assert w.d[0] == 1 and all(x == 0 for x in w.d[1:])


def test_f_st_values():
    assert f_st(P(F(1, 5), 1, 0), 8).d[:4] == (1, -1, F(25, 99), 0)
    assert f_st(P(F(1, 7), F(3, 2), F(1, 2)), 6).d[:5] == (1, F(1, 24), F(-1, 48),
                                                           F(49, 21120), 0)
    assert f_st(P(F(2, 7), 0, 2), 6).d[:5] == (1, F(8, 45), F(-4, 45), F(196, 19665), 0)
    assert f_st(P(F(2, 5), F(1, 2), F(3, 2)), 5).d[:4] == (1, F(11, 7), F(7, 32), 0)


def test_degree_examples():
    assert degree_check(P(F(1, 3), 0, 0)) == 0
    assert degree_check(P(F(1, 5), 1, 0)) == 2
    assert degree_check(P(F(2, 7), 0, 2)) == 3
    assert degree_check(P(F(1, 7), F(3, 2), F(1, 2))) == 3
    assert degree_check(P(F(2, 5), F(1, 2), F(3, 2))) == 2
    assert degree_check(P(F(1, 3), F(5, 2), F(1, 2))) == 5
    assert degree_check(P(F(1, 3), 3, 0)) == 6


def test_degree_mismatch_carries_coefficients():
    class Wrong(ProductParams):
        @property
        def expected_degree(self):
            return 1

    with pytest.raises(DegreeMismatch) as info:
        degree_check(Wrong(F(1, 5), 1, 0), 4)
    assert info.value.coefficients[:3] == [1, -1, F(25, 99)]


def test_ode_examples():
    one = CoefficientSequence((F(1),) + (F(0),) * 8)
    assert ode_residual(P(F(1, 7), 0, 0), one).is_zero()
    p = P(F(1, 3), 1, 0)
    res = ode_residual(p, f_st(p, 12))
    assert res.is_zero() and res.x_order == 9
    bad = CoefficientSequence((F(1), F(1)) + (F(0),) * 8)
    assert not ode_residual(P(F(1, 2), 0, 0), bad).is_zero()


def test_ode_on_general_series():
    # a non-polynomial product still satisfies the equation through order-3
    p = P(F(1, 5), 0, 0)
    f1, f2 = p.factors
    w = gauss_series(f1, 15) * gauss_series(f2, 15)
    assert ode_residual(p, w).is_zero()


def test_recurrence_examples():
    assert recurrence_check(P(F(1, 3), 0, 0), [F(1)] + [F(0)] * 8)
    p = P(F(1, 5), 1, 0)
    d = list(f_st(p, 10).d)
    assert recurrence_check(p, d)
    d[2] += 1
    res = recurrence_check(p, d)
    assert not res and res.failing_n in (1, 2)


def test_recurrence_specializations():
    for p in default_grid():
        d = f_st(p, p.expected_degree + 6).d
        n = int(2 * p.s + 1)
        assert (2 * p.s + 2) * d[n + 1] == (p.s - p.t + 1) * d[n]
        n = int(2 * p.t)
        assert (2 * p.t + 1) * d[n + 1] == (p.t - p.s) * d[n]


def test_recurrence_leading_sign():
    p = P(F(1, 5), 1, 0)
    d = f_st(p, 6).d
    A, B, C = recurrence_terms(p, 0)
    assert A * d[1] - B * d[0] == 0
    assert -A * d[1] - B * d[0] != 0


def test_g_vanishes_for_positive_i_j():
    assert lemma35_g(F(1, 3), 1, 1) == 0
    assert lemma35_g(F(1, 7), 0, 1) == 1
    for a in (F(1, 3), F(2, 5), F(1, 7)):
        for i in range(1, 4):
            for j in range(1, 4):
                assert lemma35_g(a, i, j) == 0


def test_g_nonzero_witness_off_the_grid():
    for i, j in [(0, 1), (0, 2), (0, 3), (1, 0), (2, 0), (3, 0)]:
        assert any(lemma35_g(a, i, j) != 0 for a in (F(1, 3), F(2, 5), F(1, 7)))


def test_collapsed_3f2_examples():
    assert lemma36_values(F(1, 3), F(1, 2), F(1, 2), "i") == 0
    assert lemma36_values(F(1, 5), 0, 1, "ii") == 0
    assert lemma36_values(F(1, 7), F(1, 2), F(3, 2), "i") != 0
    with pytest.raises(NonTerminating):
        lemma36_values(F(1, 3), F(-1, 4), 0, "i")
    with pytest.raises(ValueError):
        lemma36_values(F(1, 3), 0, 0, "iii")


def test_collapsed_3f2_is_shifted_g():
    for p in default_grid():
        v = lemma36_values(p.alpha, p.s, p.t, "i")
        g = lemma35_g(p.alpha + 2 * p.t - 1, p.s + p.t + 1, p.s - p.t + 1)
        assert v == g


def test_degree_drop_coefficient():
    for p in default_grid():
        if p.s - p.t + 1 >= 1:
            m = int(2 * p.s + 1)
            assert degree_drop_coefficient(p) == 0 == f_st(p, m + 1).d[m]
    with pytest.raises(ConfigError):
        degree_drop_coefficient(P(F(1, 3), 0, 2))


def test_coefficient_sequence_series():
    w = CoefficientSequence((F(1), F(2), F(0)))
    assert w.series() == PuiseuxSeries.from_x_coeffs([1, 2], 2)
    assert w.degree() == 1 and w.order == 2
