import math

import numpy as np
import pytest

from abcspec import (
    AbcParams,
    ArrowheadParams,
    N2Variant,
    UnsupportedOrder,
    ZeroBorder,
    ZeroTire,
    abc_eigenbasis,
    abc_spectrum,
    arrowhead_eigenvalues,
    crossing_abscissas,
    materialize_abc,
    multiplicity_profile,
    small_n_spectrum,
    spectrum_cardinality,
)
from abcspec.oracle import distinct_count, jacobi_eigenvalues, residual

R10 = math.sqrt(10)


def oracle(p):
    return jacobi_eigenvalues(materialize_abc(p)).values


class TestM6:
    """m_6(2, 1, 0), worked by hand: D = 4^2 + 24 = 40."""

    def test_values(self, m6):
        s = abc_spectrum(m6)
        assert s.discriminant == 40
        assert s.lambda_minus == pytest.approx(2 - R10, rel=1e-15)
        assert s.lambda_plus == pytest.approx(2 + R10, rel=1e-15)
        np.testing.assert_allclose(s.lambda_k, [2, -2, -4, -2, 2], atol=1e-15)
        assert (s.p, s.q) == (2, 3)
        np.testing.assert_allclose(oracle(m6), s.values(), atol=1e-12)

    def test_beta(self, m6):
        s = abc_spectrum(m6)
        assert s.beta_minus == pytest.approx(-2 - R10, rel=1e-15)
        assert s.beta_plus == pytest.approx(-2 + R10, rel=1e-15)
        for beta, lam in ((s.beta_minus, s.lambda_minus), (s.beta_plus, s.lambda_plus)):
            assert m6.b * beta + 2 * m6.a + m6.c == pytest.approx(lam, abs=1e-14)

    def test_eigenvectors(self, m6):
        basis = abc_eigenbasis(m6)
        np.testing.assert_allclose(basis.w_plus, [-2 + R10] + [1] * 6, rtol=1e-15)
        np.testing.assert_allclose(basis.w_k[2], [0, 1, -1, 1, -1, 1, -1], atol=1e-15)
        assert all(w[0] == 0 for w in basis.w_k)

    def test_cardinality_and_profile(self, m6):
        assert spectrum_cardinality(m6) == 5
        prof = multiplicity_profile(m6)
        assert [m for _, m in prof] == [1, 2, 1, 2, 1]
        np.testing.assert_allclose([v for v, _ in prof], [-4, -2, 2 - R10, 2, 2 + R10], atol=1e-14)


@pytest.mark.parametrize("n", [3, 4, 7, 12])
@pytest.mark.parametrize("b", [1.0, -0.5, 2.5])
@pytest.mark.parametrize("c", [-1.3, 0.0, 2.0])
def test_a_zero_reduces_to_arrowhead(n, b, c):
    s = abc_spectrum(AbcParams(n, 0.0, b, c))
    assert all(v == c for v in s.lambda_k)
    ah = arrowhead_eigenvalues(ArrowheadParams(n, -n * c, b, c))
    assert s.lambda_minus == pytest.approx(ah.lambda_minus, rel=1e-14, abs=1e-14)
    assert s.lambda_plus == pytest.approx(ah.lambda_plus, rel=1e-14, abs=1e-14)
    np.testing.assert_array_equal(materialize_abc(AbcParams(n, 0.0, b, c)), _arrowhead(n, b, c))


def _arrowhead(n, b, c):
    from abcspec import materialize_arrowhead

    return materialize_arrowhead(ArrowheadParams(n, -n * c, b, c))


def test_errors():
    with pytest.raises(ZeroBorder):
        abc_spectrum(AbcParams(4, 1.0, 0.0, 1.0))
    with pytest.raises(UnsupportedOrder):
        abc_spectrum(AbcParams(1, 1.0, 1.0, 1.0))
    with pytest.raises(UnsupportedOrder):
        small_n_spectrum(AbcParams(3, 1.0, 1.0, 1.0))


class TestSmallN:
    def test_tilde_n1(self):
        p = AbcParams(1, 7.0, 3.0, 4.0, N2Variant.TILDE)
        s = small_n_spectrum(p)
        assert s.values() == [-5.0, 5.0]
        np.testing.assert_allclose(oracle(p), [-5, 5], atol=1e-12)

    def test_tilde_n2_single_eigenvalue_case(self):
        # c = (a^2 - b^2)/(3a) = 0: spectrum {s, -s/2, -s/2} with s = 2(2a^2+b^2)/(3a) = 2
        p = AbcParams(2, 1.0, 1.0, 0.0, N2Variant.TILDE)
        np.testing.assert_allclose(small_n_spectrum(p).values(), [-1, -1, 2], atol=1e-15)
        np.testing.assert_allclose(oracle(p), [-1, -1, 2], atol=1e-12)
        assert spectrum_cardinality(p) == 2
        assert multiplicity_profile(p)[0][1] == 2

    @pytest.mark.parametrize("a,b,c", [(1.0, 1.0, 1.0), (-0.4, 2.0, 0.3), (3.0, -1.0, -2.0)])
    def test_tilde_n2_formula(self, a, b, c):
        p = AbcParams(2, a, b, c, N2Variant.TILDE)
        d = (a + 3 * c) ** 2 + 8 * b * b
        expected = sorted([(a - c - math.sqrt(d)) / 2, (a - c + math.sqrt(d)) / 2, c - a])
        s = small_n_spectrum(p)
        assert s.discriminant == pytest.approx(d)
        np.testing.assert_allclose(s.values(), expected, rtol=1e-14, atol=1e-14)
        np.testing.assert_allclose(oracle(p), expected, atol=1e-12)

    def test_doubled_n2(self):
        # tilde formulas with a -> 2a: D = 25 + 8 = 33
        p = AbcParams(2, 1.0, 1.0, 1.0, N2Variant.DOUBLED)
        s = small_n_spectrum(p)
        assert s.discriminant == 33
        expected = sorted([(1 - math.sqrt(33)) / 2, (1 + math.sqrt(33)) / 2, -1])
        np.testing.assert_allclose(s.values(), expected, rtol=1e-15)
        np.testing.assert_allclose(oracle(p), expected, atol=1e-12)
        assert abc_spectrum(p) == s

    def test_doubled_n1_is_arrowhead(self):
        p = AbcParams(1, 0.5, 2.0, -1.0, N2Variant.DOUBLED)
        ah = arrowhead_eigenvalues(ArrowheadParams(1, 1.0, 2.0, 0.0))
        np.testing.assert_allclose(small_n_spectrum(p).values(), ah.values(), rtol=1e-15)
        np.testing.assert_allclose(oracle(p), ah.values(), atol=1e-12)

    def test_small_n_zero_border(self):
        with pytest.raises(ZeroBorder):
            small_n_spectrum(AbcParams(2, 1.0, 0.0, 1.0))


class TestCrossings:
    def test_half_index_matches_transition_formula(self):
        for n, a in ((4, 1.0), (6, 2.0), (10, -0.7)):
            c_half = crossing_abscissas(n, a)[-1]
            assert c_half == pytest.approx((8 * a * a - n) / (4 * (n + 1) * a), rel=1e-14)

    def test_n6_a2_values(self):
        ck = crossing_abscissas(6, 2.0)
        # hand substitution: cos = 1/2, -1/2, -1
        np.testing.assert_allclose(ck, [-5 / 7, 1 / 7, 13 / 28], rtol=1e-14)

    def test_crossing_meets_border_eigenvalue(self):
        for k, c in enumerate(crossing_abscissas(6, 2.0), start=1):
            s = abc_spectrum(AbcParams(6, 2.0, 1.0, c))
            assert s.tire(k) == pytest.approx(s.lambda_minus, abs=1e-10)

    @pytest.mark.parametrize("n", [3, 5, 8, 13])
    @pytest.mark.parametrize("a", [0.3, 2.0, -0.3, -2.0])
    def test_monotone_and_on_correct_branch(self, n, a):
        ck = np.array(crossing_abscissas(n, a))
        d = np.diff(ck)
        assert np.all(d > 0) if a > 0 else np.all(d < 0)
        for k, c in enumerate(ck, start=1):
            s = abc_spectrum(AbcParams(n, a, 1.0, c))
            target = s.lambda_minus if a > 0 else s.lambda_plus
            assert s.tire(k) == pytest.approx(target, abs=1e-10 * (1 + abs(target)))

    def test_zero_tire(self):
        with pytest.raises(ZeroTire):
            crossing_abscissas(6, 0.0)


class TestCardinality:
    def test_half_crossing_is_double(self):
        p = AbcParams(6, 2.0, 1.0, 13 / 28)
        assert spectrum_cardinality(p) == 4
        assert distinct_count(oracle(p), 1e-7) == 4
        prof = multiplicity_profile(p)
        assert sorted(m for _, m in prof) == [1, 2, 2, 2]
        merged = [v for v, m in prof if abs(v - (13 / 28 - 4)) < 1e-12]
        assert len(merged) == 1

    @pytest.mark.parametrize("c", [-5 / 7, 1 / 7])
    def test_triple_point(self, c):
        p = AbcParams(6, 2.0, 1.0, c)
        assert spectrum_cardinality(p) == 4
        assert distinct_count(oracle(p), 1e-7) == 4
        assert sorted(m for _, m in multiplicity_profile(p)) == [1, 1, 2, 3]

    def test_zero_tire_reduction(self):
        assert spectrum_cardinality(AbcParams(5, 0.0, 1.0, 1.0)) == 3
        assert spectrum_cardinality(AbcParams(2, 0.0, 1.0, 1.0)) == 3

    def test_odd_generic_profile(self):
        prof = multiplicity_profile(AbcParams(5, 1.0, 1.0, 0.0))
        assert sorted(m for _, m in prof) == [1, 1, 2, 2]

    def test_odd_crossing_profile(self):
        c1 = crossing_abscissas(5, 1.0)[0]
        prof = multiplicity_profile(AbcParams(5, 1.0, 1.0, c1))
        assert sorted(m for _, m in prof) == [1, 2, 3]

    def test_even_at_half_crossing(self):
        c3 = crossing_abscissas(8, -1.0)[-1]
        prof = multiplicity_profile(AbcParams(8, -1.0, 1.0, c3))
        # one single (lambda_-), n/2 doubles
        assert sorted(m for _, m in prof) == [1, 2, 2, 2, 2]

    def test_general_b_is_normalized(self):
        # m_6(4, 2, 2 c_3) = 2 m_6(2, 1, c_3)
        p = AbcParams(6, 4.0, 2.0, 2 * 13 / 28)
        assert spectrum_cardinality(p) == 4
        assert spectrum_cardinality(AbcParams(6, 4.0, -2.0, 2 * 13 / 28)) == 4

    def test_zero_border(self):
        with pytest.raises(ZeroBorder):
            spectrum_cardinality(AbcParams(6, 1.0, 0.0, 0.0))


@pytest.mark.parametrize("n", [2, 3, 4, 9, 16])
def test_eigenbasis_residual_and_rank(n):
    p = AbcParams(n, 1.3, -0.7, 0.4)
    m = materialize_abc(p)
    s = abc_spectrum(p)
    basis = abc_eigenbasis(p)
    lams = [s.lambda_minus, s.lambda_plus, *s.lambda_k]
    for lam, w in zip(lams, basis.columns().T):
        assert residual(m, lam, w) <= 1e-10
    sv = np.linalg.svd(basis.columns(), compute_uv=False)
    assert sv[-1] > 1e-3 * sv[0]


@pytest.mark.parametrize("n", [3, 6, 7])
def test_real_eigenbasis(n):
    p = AbcParams(n, 0.9, 1.0, -0.2)
    m = materialize_abc(p)
    s = abc_spectrum(p)
    cols = abc_eigenbasis(p, real=True).columns()
    assert np.all(cols.imag == 0)
    for lam, w in zip([s.lambda_minus, s.lambda_plus, *s.lambda_k], cols.T):
        assert residual(m, lam, w.real) <= 1e-10
    assert np.linalg.matrix_rank(cols.real) == n + 1


def test_asymptotes():
    n, a = 6, 2.0
    big = 1e6
    hi = abc_spectrum(AbcParams(n, a, 1.0, big))
    lo = abc_spectrum(AbcParams(n, a, 1.0, -big))
    assert abs(hi.lambda_plus - (big + 2 * a)) <= 1e-3
    assert abs(hi.lambda_minus - (-n * big)) <= 1e-3
    assert abs(lo.lambda_plus - (n * big)) <= 1e-3
    assert abs(lo.lambda_minus - (-big + 2 * a)) <= 1e-3
