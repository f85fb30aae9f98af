import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from polyfock.fock_spaces import (FockVector, SpaceId, berezin, creation_apply,
                                  evaluation_bound, evaluation_bound_log,
                                  kernel_partial_sum, kernel_poly, kernel_poly_log,
                                  kernel_recursion_check, kernel_true,
                                  kernel_true_log)
from polyfock.hermite_basis import HermiteIndex, b_eval
from polyfock.quadrature import plane_inner
from polyfock.radial_ops import vanishing_berezin_witness

SAMPLES = [(0.3 + 0.4j, -1.2 + 0.5j), (1.0 + 0j, 1.0 + 0j), (0j, 1.0 + 0j),
           (-0.7 - 0.7j, 0.2 + 1.1j), (1.4 - 0.2j, -0.5 - 0.9j)]


class TestClosedForms:
    def test_order_one_is_classical(self):
        for z, w in SAMPLES:
            assert kernel_true(1, z, w) == pytest.approx(cmath.exp(z.conjugate() * w))
            assert kernel_poly(1, z, w) == pytest.approx(cmath.exp(z.conjugate() * w))

    def test_diagonal_values(self):
        for z, _ in SAMPLES:
            for n in (1, 2, 5):
                assert kernel_true(n, z, z) == pytest.approx(math.exp(abs(z) ** 2))
                assert kernel_poly(n, z, z) == pytest.approx(
                    n * math.exp(abs(z) ** 2))

    def test_zero_of_true_kernel(self):
        # the order-2 profile is 1 - |w - z|^2
        assert kernel_true(2, 0j, 1 + 0j) == pytest.approx(0.0, abs=1e-15)

    def test_layer_difference(self):
        for z, w in SAMPLES:
            for n in (2, 3, 4):
                diff = kernel_poly(n, z, w) - kernel_poly(n - 1, z, w)
                assert diff == pytest.approx(kernel_true(n, z, w), abs=1e-12)

    def test_telescoping(self):
        for z, w in SAMPLES:
            total = sum(kernel_true(m, z, w) for m in range(1, 5))
            assert total == pytest.approx(kernel_poly(4, z, w), abs=1e-12)

    def test_hermitian_symmetry_and_rotation_invariance(self):
        tau = cmath.exp(1j * math.sqrt(2))
        for z, w in SAMPLES:
            for n in (1, 3):
                assert kernel_poly(n, z, w) == pytest.approx(
                    kernel_poly(n, w, z).conjugate(), abs=1e-12)
                assert kernel_true(n, tau * z, tau * w) == pytest.approx(
                    kernel_true(n, z, w), abs=1e-12)

    def test_overflow_signaled(self):
        with pytest.raises(OverflowError):
            kernel_true(1, 30 + 0j, 30 + 0j)
        with pytest.raises(OverflowError):
            kernel_poly(2, 30 + 0j, 30 + 0j)

    def test_log_scaled_variant(self):
        z, w = 1.2 + 0.4j, -0.3 + 0.9j
        for plain, logform in ((kernel_true, kernel_true_log),
                               (kernel_poly, kernel_poly_log)):
            logmag, phase = logform(3, z, w)
            reconstructed = math.exp(logmag) * cmath.exp(1j * phase)
            assert reconstructed == pytest.approx(plain(3, z, w), rel=1e-12)
        logmag, _ = kernel_true_log(1, 40 + 0j, 40 + 0j)
        assert logmag == pytest.approx(1600.0)


class TestSeries:
    def test_true_layer_at_origin(self):
        for trunc in (1, 3, 50):
            assert kernel_partial_sum(SpaceId("true_poly", 1), 0j, 0j,
                                      trunc) == pytest.approx(1.0)

    def test_true_layer_converges(self):
        got = kernel_partial_sum(SpaceId("true_poly", 2), 1 + 0j, 1 + 0j, 200)
        assert got == pytest.approx(math.e, abs=1e-8)

    def test_poly_converges(self):
        got = kernel_partial_sum(SpaceId("poly", 3), 1j, 1j, 200)
        assert got == pytest.approx(3 * math.e, abs=1e-8)

    def test_series_matches_closed_form_generally(self):
        for z, w in SAMPLES:
            for n in (1, 2, 4):
                for kind, closed in (("poly", kernel_poly), ("true_poly", kernel_true)):
                    got = kernel_partial_sum(SpaceId(kind, n), z, w, 120)
                    assert got == pytest.approx(closed(n, z, w), abs=1e-8)


class TestRecursion:
    def test_exact_steps(self):
        for n in range(1, 6):
            assert kernel_recursion_check(n)

    def test_order_zero_rejected(self):
        with pytest.raises(ValueError):
            kernel_recursion_check(0)

    def test_cap(self):
        with pytest.raises(ValueError):
            kernel_recursion_check(9)


class TestCreationIsometry:
    def test_basis_shift(self):
        v = FockVector(SpaceId("true_poly", 2), {(0, 1): 1.0}, truncation=6)
        out = creation_apply(2, v)
        assert out.space == SpaceId("true_poly", 3)
        assert out.coefficients == {(0, 2): 1.0}
        assert out.norm() == v.norm() == 1.0

    def test_zero_vector(self):
        v = FockVector(SpaceId("true_poly", 1), {}, truncation=4)
        assert creation_apply(1, v).coefficients == {}

    def test_two_term_isometry(self):
        c = 1 / math.sqrt(2)
        v = FockVector(SpaceId("true_poly", 4), {(0, 3): c, (5, 3): c},
                       truncation=8)
        out = creation_apply(4, v)
        assert out.coefficients == {(0, 4): c, (5, 4): c}
        assert out.norm() == pytest.approx(1.0)

    def test_wrong_space_rejected(self):
        v = FockVector(SpaceId("true_poly", 2), {(0, 1): 1.0}, truncation=4)
        with pytest.raises(ValueError):
            creation_apply(3, v)

    def test_vector_validation_and_mixing(self):
        with pytest.raises(ValueError):
            FockVector(SpaceId("poly", 2), {(0, 5): 1.0}, truncation=4)
        a = FockVector(SpaceId("poly", 2), {(0, 0): 1.0}, truncation=4)
        b = FockVector(SpaceId("poly", 2), {(0, 0): 1.0}, truncation=5)
        with pytest.raises(ValueError):
            a.inner(b)


class TestEvaluationBound:
    def test_values(self):
        assert evaluation_bound(1, 0j) == 1.0
        assert evaluation_bound(4, 0j) == 2.0
        assert evaluation_bound_log(4, 0j) == pytest.approx(math.log(2.0))

    def test_equality_witness(self):
        # the bound is attained by the kernel itself: sqrt(K(z,z)) = bound
        for z in (0.5 + 0.5j, 1.5j, -1.0 + 0.2j):
            for n in (1, 2, 4):
                attained = math.sqrt(abs(kernel_poly(n, z, z)))
                assert attained == pytest.approx(evaluation_bound(n, z), rel=1e-12)


class TestReproducingProperty:
    def test_inner_against_kernel_reproduces_value(self):
        # self-refining plane rule: fixed-size rules alias the kernel's high
        # angular frequencies once |z| approaches 3
        for n in (1, 2):
            for p, q in ((0, 0), (2, 0), (1, 1), (3, 1))[: 2 * n]:
                if q >= n:
                    continue
                idx = HermiteIndex(p, q)
                for z in (0.4 + 0.3j, -1.0 + 0.8j, 3.0 + 0j):
                    got = plane_inner(lambda w: b_eval(idx, w),
                                      lambda w: kernel_poly(n, z, w))
                    assert got == pytest.approx(b_eval(idx, z), abs=1e-8)


class TestBerezin:
    def test_identity(self):
        space = SpaceId("poly", 2)
        k = len(space.basis_indices(40))
        for z in (0.1 + 0.2j, -0.8j, 1.2 - 0.1j):
            val = berezin(space, np.eye(k, dtype=complex), z, 40)
            assert val == pytest.approx(1.0, abs=1e-10)

    def test_rank_two_blind_spot(self):
        space = SpaceId("poly", 2)
        witness = vanishing_berezin_witness(space, 40)
        assert np.max(np.abs(witness.entries)) == 1.0  # nonzero operator
        for z in (0.3 + 0.1j, -0.9 + 0.4j, 1.1j, 0.2 - 1.0j):
            assert berezin(space, witness.entries, z, 40) == pytest.approx(
                0.0, abs=1e-8)

    def test_scalar_diagonal(self):
        space = SpaceId("true_poly", 1)
        c = 2.5 - 0.5j
        k = len(space.basis_indices(40))
        val = berezin(space, c * np.eye(k, dtype=complex), 0.7 + 0.3j, 40)
        assert val == pytest.approx(c, abs=1e-10)

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            berezin(SpaceId("poly", 2), np.eye(3, dtype=complex), 0j, 4)

    def test_truncation_warning(self):
        space = SpaceId("poly", 1)
        with pytest.warns(UserWarning):
            berezin(space, np.eye(4, dtype=complex), 2.0 + 0j, 4)


class TestMeanValueFixture:
    """The small exactly-rational moment system behind the crude evaluation
    bound: the degree < n polynomial whose products with x^j integrate on
    [0, 1] to the indicator of j = 0."""

    @staticmethod
    def solve_moment_polynomial(n):
        # Hilbert system: sum_k c_k / (j + k + 1) = delta_{j0}
        rows = [[Fraction(1, j + k + 1) for k in range(n)] for j in range(n)]
        rhs = [Fraction(1) if j == 0 else Fraction(0) for j in range(n)]
        # exact Gaussian elimination
        for col in range(n):
            pivot = next(r for r in range(col, n) if rows[r][col] != 0)
            rows[col], rows[pivot] = rows[pivot], rows[col]
            rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
            inv = 1 / rows[col][col]
            rows[col] = [v * inv for v in rows[col]]
            rhs[col] *= inv
            for r in range(n):
                if r != col and rows[r][col] != 0:
                    factor = rows[r][col]
                    rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
                    rhs[r] -= factor * rhs[col]
        return rhs

    def test_orthogonal_to_positive_powers_exactly(self):
        for n in range(1, 7):
            coeffs = self.solve_moment_polynomial(n)
            for j in range(n):
                moment = sum(c / (j + k + 1) for k, c in enumerate(coeffs))
                assert moment == (1 if j == 0 else 0)


def test_space_validation():
    with pytest.raises(ValueError):
        SpaceId("poly", 0)
    with pytest.raises(ValueError):
        SpaceId("weird", 1)
    with pytest.raises(ValueError):
        SpaceId("poly", 2).basis_indices(0)


def test_enumeration_order():
    assert SpaceId("poly", 2).basis_indices(3) == [
        (0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)]
    assert SpaceId("true_poly", 3).basis_indices(2) == [(0, 2), (1, 2)]
