import math

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.special import eval_genlaguerre, roots_genlaguerre

from diracoulomb.errors import DomainError, NonConvergenceError
from diracoulomb.specfun import (
    LaguerreParams,
    kummer_m,
    laguerre,
    laguerre_derivative,
    log_factorial,
    log_gamma_ratio,
)


class TestLaguerre:
    def test_degree_zero_is_one(self):
        assert laguerre(0, 2.5, 7.3) == 1.0

    def test_degree_one(self):
        assert laguerre(1, 2.0, 1.0) == pytest.approx(2.0)

    def test_degree_minus_one_is_zero(self):
        assert laguerre(-1, 2.66, 0.5) == 0.0

    def test_scalar_in_scalar_out(self):
        assert isinstance(laguerre(3, 1.0, 0.2), float)

    def test_array_shape_preserved(self):
        x = np.linspace(0.0, 5.0, 12).reshape(3, 4)
        assert laguerre(4, 0.5, x).shape == (3, 4)

    @pytest.mark.parametrize("alpha", [0.5, 1.0, 2.66, 7.2])
    @pytest.mark.parametrize("n", [1, 2, 5, 12, 25])
    def test_matches_scipy(self, n, alpha):
        x = np.linspace(0.0, 40.0 * (n + alpha / 2.0), 60)
        expected = eval_genlaguerre(n, alpha, x)
        scale = np.maximum(1.0, np.abs(expected))
        assert np.max(np.abs(laguerre(n, alpha, x) - expected) / scale) < 1e-9

    def test_recurrence_holds(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            n = int(rng.integers(1, 20))
            alpha = float(rng.uniform(0.0, 6.0))
            x = float(rng.uniform(0.0, 30.0))
            lhs = (n + 1) * laguerre(n + 1, alpha, x)
            rhs = (2 * n + alpha + 1 - x) * laguerre(n, alpha, x) - (n + alpha) * laguerre(n - 1, alpha, x)
            assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-10)

    def test_orthogonality(self):
        alpha = 1.3
        nodes, weights = roots_genlaguerre(40, alpha)
        for n in range(11):
            for m in range(11):
                integral = float(np.sum(weights * laguerre(n, alpha, nodes) * laguerre(m, alpha, nodes)))
                expected = math.gamma(n + alpha + 1) / math.factorial(n) if n == m else 0.0
                assert integral == pytest.approx(expected, rel=1e-8, abs=1e-8)

    def test_derivative_is_shifted_polynomial(self):
        x = np.linspace(0.0, 10.0, 7)
        assert_allclose(laguerre_derivative(3, 1.5, x), -laguerre(2, 2.5, x))
        assert np.all(laguerre_derivative(0, 1.5, x) == 0.0)

    @pytest.mark.parametrize("n, alpha", [(-2, 1.0), (2, -1.0), (2, -3.0)])
    def test_domain_errors(self, n, alpha):
        with pytest.raises(DomainError):
            laguerre(n, alpha, 1.0)

    def test_params_validate(self):
        assert LaguerreParams(1, 2.0, 1.0).evaluate() == pytest.approx(2.0)
        with pytest.raises(DomainError):
            LaguerreParams(1, 2.0, -1.0)


class TestGamma:
    def test_identity(self):
        assert log_gamma_ratio(5, 5) == 0.0

    def test_integer_ratio(self):
        assert log_gamma_ratio(5, 4) == pytest.approx(math.log(4.0), rel=1e-12)

    def test_half_integer_ratio(self):
        assert log_gamma_ratio(0.5, 1.5) == pytest.approx(math.log(2.0), rel=1e-12)

    def test_large_arguments_stay_finite(self):
        assert log_gamma_ratio(400.5, 400.0) == pytest.approx(0.5 * math.log(400.0), rel=1e-3)

    @pytest.mark.parametrize("a, b", [(0.0, 1.0), (1.0, -2.0), (math.inf, 1.0)])
    def test_rejects_non_positive(self, a, b):
        with pytest.raises(DomainError):
            log_gamma_ratio(a, b)

    def test_log_factorial(self):
        assert log_factorial(0) == 0.0
        assert log_factorial(6) == pytest.approx(math.log(720.0))
        with pytest.raises(DomainError):
            log_factorial(-1)


class TestKummer:
    def test_a_zero(self):
        assert kummer_m(0, 3.0, 2.0) == 1.0

    def test_linear_polynomial(self):
        assert kummer_m(-1, 4.0, 1.0) == pytest.approx(0.75)

    def test_exponential(self):
        assert kummer_m(1, 1, 1.0) == pytest.approx(math.e, rel=1e-13)

    @pytest.mark.parametrize("n", [0, 1, 4, 10, 30])
    @pytest.mark.parametrize("alpha", [0.5, 1.0, 2.66])
    def test_terminating_series_is_laguerre(self, n, alpha):
        prefactor = math.exp(log_factorial(n) + log_gamma_ratio(alpha + 1.0, n + alpha + 1.0))
        for x in np.linspace(0.0, 50.0, 11):
            series = kummer_m(-n, alpha + 1.0, float(x))
            closed = prefactor * laguerre(n, alpha, float(x))
            # absolute term sum of the alternating series
            scale = kummer_m(-n, alpha + 1.0, -float(x))
            assert abs(series - closed) <= 1e-10 * max(1.0, scale)

    @pytest.mark.parametrize("b", [0.0, -1.0, -4.0])
    def test_rejects_non_positive_integer_b(self, b):
        with pytest.raises(DomainError):
            kummer_m(0.5, b, 1.0)

    def test_reports_non_convergence(self):
        with pytest.raises(NonConvergenceError) as info:
            kummer_m(0.5, 1.5, 200.0, max_terms=10)
        assert info.value.terms == 10
        assert info.value.tolerance == pytest.approx(1e-14)
