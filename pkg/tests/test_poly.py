import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import special as sp

from umbral_laguerre.poly import (
    MAX_DEGREE,
    PolyEval,
    TwoIndexArgs,
    generating_function_deviation,
    hermite2,
    hermite2_shift_expand,
    hermite_2index,
    laguerre2,
    laguerre_assoc,
    q_2index,
    q_poly,
    q_poly_coefficients,
    q_poly_operational,
    t_poly,
)
from umbral_laguerre.special import DomainError, classical_laguerre, wright2

reals = st.floats(-3, 3, allow_nan=False)
orders = st.sampled_from([0.0, 0.5, 1.0, 2.5, -0.5])
degrees = st.integers(0, 12)
GRID = (-2.0, -0.5, 0.0, 1.0, 3.0)


class TestHermite2:
    def test_degree_zero(self):
        assert hermite2(0, 1.7, -3.0) == 1.0

    @given(degrees, reals)
    def test_y_zero_gives_power(self, n, x):
        assert hermite2(n, x, 0.0) == pytest.approx(x**n, rel=1e-14, abs=1e-300)

    def test_hand_value(self):
        # H_2 = x^2 + 2y
        assert hermite2(2, 1.0, 1.0) == 3.0
        # H_3 = x^3 + 6xy
        assert hermite2(3, 1.5, 2.0) == 21.375

    @pytest.mark.parametrize("n", range(10))
    def test_classical_hermite_reduction(self, n):
        xs = np.linspace(-2, 2, 9)
        np.testing.assert_allclose(hermite2(n, 2 * xs, -1.0), sp.eval_hermite(n, xs), rtol=1e-12, atol=1e-9)

    def test_degree_cap(self):
        hermite2(MAX_DEGREE, 0.1, 0.1)
        with pytest.raises(ValueError):
            hermite2(MAX_DEGREE + 1, 0.1, 0.1)
        with pytest.raises(ValueError):
            hermite2(-1, 0.1, 0.1)


class TestLaguerre:
    def test_examples(self):
        assert laguerre2(0, 2.0, 3.0) == 1.0
        assert laguerre2(1, 2.0, 3.0) == 1.0
        assert laguerre2(2, 1.0, 1.0) == -0.5

    @pytest.mark.parametrize("n", range(16))
    def test_y_one_is_classical(self, n):
        xs = np.linspace(-1, 6, 15)
        # alternating sum: error scales with the term mass L_n(-|x|, 1)
        mass = laguerre2(n, -np.abs(xs), 1.0)
        assert np.all(np.abs(laguerre2(n, xs, 1.0) - classical_laguerre(n, 0, xs)) <= 1e-13 * mass)

    def test_assoc_examples(self):
        assert laguerre_assoc(0, 2.5, 1.0, 7.0) == 1.0
        assert laguerre_assoc(2, 0, 1.0, 1.0) == -0.5
        # Gamma(3)/1! * (y/Gamma(2) - x/Gamma(3)) at x = y = 1
        assert laguerre_assoc(1, 1, 1.0, 1.0) == 1.0

    @given(degrees, reals, reals)
    def test_assoc_order_zero_is_laguerre2(self, n, x, y):
        a, b = laguerre_assoc(n, 0, x, y), laguerre2(n, x, y)
        scale = sum(abs(x) ** k * abs(y) ** (n - k) * math.comb(n, k) / math.factorial(k) for k in range(n + 1))
        assert abs(a - b) <= 1e-13 * max(scale, 1.0)

    @pytest.mark.parametrize("n", [0, 1, 4, 9])
    @pytest.mark.parametrize("nu", [0.5, 1.0, 2.5, -0.5])
    def test_assoc_y_one_is_classical(self, n, nu):
        xs = np.linspace(-1, 6, 15)
        ref = classical_laguerre(n, nu, xs)
        np.testing.assert_allclose(laguerre_assoc(n, nu, xs, 1.0), ref, rtol=1e-12, atol=1e-12 * np.max(np.abs(ref)))

    def test_assoc_homogeneity(self):
        # L_n^(nu)(x, y) = y^n L_n^(nu)(x/y)
        for y in (0.5, 2.0, -1.5):
            for x in GRID:
                assert laguerre_assoc(6, 1.5, x, y) == pytest.approx(y**6 * classical_laguerre(6, 1.5, x / y), rel=1e-12)

    def test_assoc_domain(self):
        with pytest.raises(DomainError):
            laguerre_assoc(2, -1.0, 1.0, 1.0)


class TestQ:
    @given(degrees, reals)
    def test_y_zero(self, n, x):
        assert q_poly(n, 0, x, 0.0) == pytest.approx(x**n, rel=1e-14, abs=1e-300)

    def test_hand_values(self):
        # Q_2^(0) = x^2 + y
        assert q_poly(2, 0, 1.0, 1.0) == 2.0
        for nu in (0, 0.5, 2.5):
            assert q_poly(1, nu, 1.3, 5.0) == pytest.approx(1.3 / math.gamma(nu + 1), rel=1e-15)

    @given(degrees, orders, reals, reals)
    def test_parity(self, n, nu, x, y):
        assert q_poly(n, nu, -x, y) == (-1) ** n * q_poly(n, nu, x, y)

    @pytest.mark.parametrize("n", range(13))
    @pytest.mark.parametrize("nu", range(5))
    def test_operational_identity_exact(self, n, nu):
        assert q_poly_operational(n, nu) == q_poly_coefficients(n, nu)

    def test_coefficients_match_float_evaluation(self):
        coeffs = q_poly_coefficients(7, 3)
        x, y = 1.3, -0.7
        expected = sum(float(c) * x**p * y**k for (p, k), c in coeffs.items())
        assert q_poly(7, 3, x, y) == pytest.approx(expected, rel=1e-14)


class TestShift:
    def test_examples(self):
        assert hermite2_shift_expand(4, 0.0, 1.2, -0.3) == hermite2(4, 1.2, -0.3)
        assert hermite2_shift_expand(1, 0.7, 1.5, 9.0) == pytest.approx(2.2)
        assert hermite2_shift_expand(3, 0.5, 1.0, 2.0) == pytest.approx(21.375, rel=1e-15)

    @pytest.mark.parametrize("n", range(16))
    def test_identity_grid(self, n):
        vals = (-2.0, -0.5, 0.0, 1.0, 3.0)
        for a in vals:
            for x in vals:
                for y in vals:
                    lhs = hermite2(n, x + a, y)
                    rhs = hermite2_shift_expand(n, a, x, y)
                    scale = hermite2(n, abs(x) + abs(a), abs(y))
                    assert abs(lhs - rhs) <= 1e-12 * max(abs(lhs), 1e-3 * scale, 1e-300)


class TestTwoIndex:
    def test_hermite_2index_examples(self):
        h = hermite_2index(3, 2, TwoIndexArgs(0.4, 1.1, -0.7, 0.3, 0.0))
        assert h == pytest.approx(hermite2(3, 0.4, 1.1) * hermite2(2, -0.7, 0.3), rel=1e-15)
        assert hermite_2index(0, 4, TwoIndexArgs(0.4, 1.1, -0.7, 0.3, 2.0)) == hermite2(4, -0.7, 0.3)
        assert hermite_2index(1, 1, TwoIndexArgs(1, 1, 1, 1, 1)) == 2.0

    def test_hermite_2index_gaussian_moment(self):
        # H_{m,n}(x,0;w,0|tau) counts products of two shifted lines; check one hand expansion:
        # H_{2,1}(x,y;w,z|t) = H_2(x,y) w + 2 t x
        args = TwoIndexArgs(0.5, 0.25, 2.0, 7.0, 0.3)
        assert hermite_2index(2, 1, args) == pytest.approx((0.25 + 0.5) * 2.0 + 2 * 0.3 * 0.5, rel=1e-15)

    def test_q_2index_examples(self):
        args = TwoIndexArgs(0.4, 1.1, -0.7, 0.3, 0.0)
        assert q_2index(3, 2, 0.5, 2.5, args) == pytest.approx(
            q_poly(3, 0.5, 0.4, 1.1) * q_poly(2, 2.5, -0.7, 0.3), rel=1e-15
        )
        args = TwoIndexArgs(0.4, 1.1, -0.7, 0.3, 2.0)
        assert q_2index(0, 3, 1.5, 0.5, args) == pytest.approx(q_poly(0, 1.5, 0, 0) * q_poly(3, 0.5, -0.7, 0.3))
        assert q_2index(1, 1, 0, 0, TwoIndexArgs(1, 1, 1, 1, 1)) == 2.0

    def test_q_2index_rising_order(self):
        # k=1 term of Q_{1,1}^{(mu,nu)} carries Q_0^{(1+mu)} Q_0^{(1+nu)}
        mu, nu = 0.5, 2.5
        args = TwoIndexArgs(0.0, 1.0, 0.0, 1.0, 1.0)
        expected = 1.0 / (math.gamma(mu + 2) * math.gamma(nu + 2))
        assert q_2index(1, 1, mu, nu, args) == pytest.approx(expected, rel=1e-14)

    @given(st.integers(0, 6), st.integers(0, 6), orders, orders, reals, reals, reals, reals, reals)
    def test_q_2index_swap_symmetry(self, m, n, mu, nu, x, y, w, z, tau):
        a = q_2index(m, n, mu, nu, TwoIndexArgs(x, y, w, z, tau))
        b = q_2index(n, m, nu, mu, TwoIndexArgs(w, z, x, y, tau))
        assert a == pytest.approx(b, rel=1e-12, abs=1e-12)

    def test_t_poly_examples(self):
        args = TwoIndexArgs(0.4, 1.1, -0.7, 0.3, 0.0)
        assert t_poly(3, 2, 1.5, args) == pytest.approx(q_poly(3, 1.5, 0.4, 1.1) * hermite2(2, -0.7, 0.3), rel=1e-15)
        args = TwoIndexArgs(0.4, 1.1, -0.7, 0.3, 2.0)
        assert t_poly(3, 0, 1.5, args) == pytest.approx(q_poly(3, 1.5, 0.4, 1.1), rel=1e-15)
        assert t_poly(1, 1, 0, TwoIndexArgs(1, 1, 1, 1, 1)) == 2.0

    def test_two_index_args_finite(self):
        with pytest.raises(ValueError):
            TwoIndexArgs(1.0, float("nan"), 0.0, 0.0, 0.0)


class TestGeneratingFunctions:
    @pytest.fixture(scope="class")
    @classmethod
    def grid(cls):
        return np.meshgrid(np.linspace(-0.5, 0.5, 11), np.linspace(-2, 2, 9), np.linspace(-2, 2, 9), indexing="ij")

    def test_hermite(self, grid):
        assert generating_function_deviation("hermite", 30, *grid) < 1e-10

    @pytest.mark.parametrize("nu", [0, 0.5, 1, 2.5])
    def test_q(self, grid, nu):
        assert generating_function_deviation("q", 30, *grid, nu=nu) < 1e-10

    def test_q_n0_at_t0(self):
        assert generating_function_deviation("q", 0, 0.0, np.linspace(-2, 2, 5), 1.5) == 0.0

    def test_q_gf_closed_side(self):
        # N -> infinity limit: exp(xt) W(yt^2) at a single point, summed far enough
        t, x, y = 0.4, 1.2, -1.7
        partial = sum(t**n / math.factorial(n) * q_poly(n, 1.5, x, y) for n in range(40))
        assert partial == pytest.approx(math.exp(x * t) * wright2(1.5, y * t * t), rel=1e-14)

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            generating_function_deviation("laguerre", 3, 0.1, 0.1, 0.1)


class TestPolyEval:
    def test_dispatch(self):
        assert PolyEval("laguerre2", {"n": 2}, {"x": 1.0, "y": 1.0}).evaluate() == -0.5
        assert PolyEval("q", {"n": 2}, {"x": 1.0, "y": 1.0}).evaluate() == 2.0
        assert PolyEval("t", {"m": 1, "n": 1}, dict(x=1, y=1, w=1, z=1, tau=1)).evaluate() == 2.0

    def test_arity_checked(self):
        with pytest.raises(ValueError):
            PolyEval("hermite2", {"n": 2, "m": 1}, {"x": 1.0, "y": 1.0})
        with pytest.raises(ValueError):
            PolyEval("hermite2", {"n": 2}, {"x": 1.0})
        with pytest.raises(ValueError):
            PolyEval("nope", {"n": 2}, {})


def test_vectorized_matches_scalar():
    xs = np.linspace(-2, 3, 7)
    for fn in (lambda x: hermite2(5, x, 0.3), lambda x: laguerre_assoc(5, 1.5, x, -0.4), lambda x: q_poly(6, 2.5, x, 1.1)):
        np.testing.assert_allclose(fn(xs), [fn(x) for x in xs], rtol=1e-15)


def test_extended_precision_dtype_preserved():
    xs = np.linspace(-2, 3, 7).astype(np.longdouble)
    for fn in (hermite2, laguerre2):
        assert fn(6, xs, 0.5).dtype == np.longdouble
    assert laguerre_assoc(6, 2.5, xs, 0.5).dtype == np.longdouble
