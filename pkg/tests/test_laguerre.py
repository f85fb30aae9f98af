import math
from fractions import Fraction

import numpy as np
import pytest

from polyfock.laguerre import (LaguerreParams, laguerre_eval, laguerre_exact,
                               laguerre_function, laguerre_function_log,
                               laguerre_function_sup, laguerre_function_values,
                               rodrigues_identity_residual)
from polyfock.quadrature import gauss_laguerre


def explicit_sum(n, alpha, x):
    """Independent oracle: the explicit alternating sum, in exact rationals."""
    xf = Fraction(x)
    total = Fraction(0)
    for k in range(n + 1):
        total += Fraction((-1) ** k * math.comb(n + alpha, n - k),
                          math.factorial(k)) * xf ** k
    return float(total)


class TestLaguerreEval:
    def test_degree_zero_is_one(self):
        assert laguerre_eval(LaguerreParams(0, 5), 7.3) == 1.0

    def test_degree_one(self):
        assert laguerre_eval(LaguerreParams(1, 0), 2.0) == -1.0

    def test_degree_two(self):
        # oracle: (x^2 - 4x + 2)/2 at x = 3
        assert laguerre_eval(LaguerreParams(2, 0), 3.0) == pytest.approx(-0.5, abs=1e-15)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            laguerre_eval(LaguerreParams(2, 0), -1.0)
        with pytest.raises(ValueError):
            LaguerreParams(-1, 0)
        with pytest.raises(ValueError):
            LaguerreParams(0, -2)

    def test_recurrence_matches_explicit_sum(self):
        for n in range(31):
            for alpha in (0, 1, 4, 10):
                for x in (0.1, 1.0, 10.0, 50.0):
                    exact = explicit_sum(n, alpha, x)
                    got = laguerre_eval(LaguerreParams(n, alpha), x)
                    scale = abs(exact) if exact != 0 else 1.0
                    assert abs(got - exact) <= 1e-12 * scale


class TestLaguerreExact:
    def test_examples(self):
        assert laguerre_exact(LaguerreParams(2, 0)) == [1, -2, Fraction(1, 2)]
        assert laguerre_exact(LaguerreParams(1, 2)) == [3, -1]
        assert laguerre_exact(LaguerreParams(0, 9)) == [1]


class TestLaguerreFunction:
    def test_base_case(self):
        assert laguerre_function(0, 0, 2.0) == pytest.approx(math.exp(-1.0), rel=1e-15)

    def test_with_order(self):
        expected = math.exp(-0.5) / math.sqrt(2.0)
        assert laguerre_function(0, 2, 1.0) == pytest.approx(expected, rel=1e-14)

    def test_zero_of_polynomial(self):
        assert laguerre_function(1, 0, 1.0) == pytest.approx(0.0, abs=1e-16)

    def test_at_origin(self):
        assert laguerre_function(0, 0, 0.0) == 1.0
        assert laguerre_function(3, 2, 0.0) == 0.0

    def test_domain_error(self):
        with pytest.raises(ValueError):
            laguerre_function(0, 0, -0.5)

    def test_log_form_consistent(self):
        for m, alpha, t in ((0, 0, 2.0), (2, 5, 7.5), (4, 60, 40.0)):
            sign, logmag = laguerre_function_log(m, alpha, t)
            assert sign * math.exp(logmag) == pytest.approx(
                laguerre_function(m, alpha, t), rel=1e-14)

    def test_vectorized_matches_scalar(self):
        t = np.array([0.0, 0.3, 2.0, 11.0])
        vals = laguerre_function_values(3, 4, t)
        for ti, vi in zip(t, vals):
            assert vi == pytest.approx(laguerre_function(3, 4, float(ti)), abs=1e-16)

    def test_normalization(self):
        # unit L2 norm on the half-line, against the alpha-absorbed rule
        for alpha in range(9):
            rule = gauss_laguerre(alpha, 16)
            for m in range(13):
                norm = math.factorial(m) / math.factorial(m + alpha)
                lm = np.array([laguerre_eval(LaguerreParams(m, alpha), float(t))
                               for t in rule.nodes])
                val = norm * float(np.sum(rule.weights * lm * lm))
                assert val == pytest.approx(1.0, abs=1e-10)


class TestOrthogonality:
    def test_weighted_orthogonality(self):
        for alpha in range(9):
            rule = gauss_laguerre(alpha, 14)
            for n in range(13):
                for m in range(n, 13):
                    ln = np.array([laguerre_eval(LaguerreParams(n, alpha), float(t))
                                   for t in rule.nodes])
                    lm = np.array([laguerre_eval(LaguerreParams(m, alpha), float(t))
                                   for t in rule.nodes])
                    val = float(np.sum(rule.weights * ln * lm))
                    want = math.factorial(n + alpha) / math.factorial(n) if n == m else 0.0
                    scale = math.sqrt(
                        math.factorial(n + alpha) / math.factorial(n)
                        * math.factorial(m + alpha) / math.factorial(m))
                    assert abs(val - want) <= 1e-10 * scale


class TestRodrigues:
    def test_stated_examples(self):
        assert rodrigues_identity_residual(1, 0)
        assert rodrigues_identity_residual(2, 1)
        assert rodrigues_identity_residual(3, 2)

    def test_full_range(self):
        for n in range(0, 6):
            for alpha in range(0, 6):
                assert rodrigues_identity_residual(n, alpha)

    def test_cap(self):
        with pytest.raises(ValueError):
            rodrigues_identity_residual(11, 0)


class TestSup:
    def test_monotone_base(self):
        assert laguerre_function_sup(0, 0, 1.0) == 1.0

    def test_large_order_tiny(self):
        assert laguerre_function_sup(0, 40, 4.0) < 1e-6

    def test_grid_convergence(self):
        coarse = laguerre_function_sup(2, 0, 1.0, grid=1000)
        fine = laguerre_function_sup(2, 0, 1.0, grid=10000)
        assert coarse > 0
        assert abs(coarse - fine) <= 5e-4 * fine

    def test_decay_in_order(self):
        for m in range(4):
            for x in (1.0, 4.0):
                assert laguerre_function_sup(m, 80, x) < laguerre_function_sup(m, 40, x)
                assert laguerre_function_sup(m, 120, x) < 1e-4

    def test_grid_validation(self):
        with pytest.raises(ValueError):
            laguerre_function_sup(0, 0, 1.0, grid=1)
