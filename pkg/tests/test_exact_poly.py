import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyfock.exact_poly import (BiPolynomial, RationalComplex, ScaledPolynomial,
                                 creation_adagger, creation_adagger_bar, factorial,
                                 gaussian_inner, sqrt_fraction, wirtinger_dz,
                                 wirtinger_dzbar)


def mono(j, k, c=1):
    return BiPolynomial.monomial(j, k, c)


class TestWirtinger:
    def test_dz_of_z_zbar(self):
        assert wirtinger_dz(mono(1, 1)) == mono(0, 1)

    def test_dz_kills_antiholomorphic(self):
        assert wirtinger_dz(mono(0, 3)).is_zero

    def test_power_rule_with_coefficient(self):
        assert wirtinger_dz(mono(3, 1, 2)) == mono(2, 1, 6)

    def test_dzbar_mirror(self):
        assert wirtinger_dzbar(mono(1, 3)) == mono(1, 2, 3)

    @given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4),
                              st.integers(-5, 5)), max_size=4),
           st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4),
                              st.integers(-5, 5)), max_size=4))
    @settings(max_examples=60, deadline=None)
    def test_leibniz_product_rule(self, terms_f, terms_g):
        f = sum((mono(j, k, c) for j, k, c in terms_f), BiPolynomial.zero())
        g = sum((mono(j, k, c) for j, k, c in terms_g), BiPolynomial.zero())
        lhs = wirtinger_dz(f * g)
        rhs = wirtinger_dz(f) * g + f * wirtinger_dz(g)
        assert lhs == rhs


class TestCreationOperators:
    def test_on_constant(self):
        assert creation_adagger(BiPolynomial.one()) == mono(0, 1)
        assert creation_adagger_bar(BiPolynomial.one()) == mono(1, 0)

    def test_unnormalized_b11(self):
        assert creation_adagger(mono(1, 0)) == mono(1, 1) - mono(0, 0)
        assert creation_adagger_bar(mono(0, 1)) == mono(1, 1) - mono(0, 0)

    def test_pure_powers(self):
        assert creation_adagger(mono(0, 1)) == mono(0, 2)
        assert creation_adagger_bar(mono(2, 0)) == mono(3, 0)

    def test_operators_commute_on_monomials(self):
        for p in range(9):
            for q in range(9):
                m = mono(p, q)
                assert creation_adagger(creation_adagger_bar(m)) == \
                    creation_adagger_bar(creation_adagger(m))

    @given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5),
                              st.integers(-6, 6)), min_size=1, max_size=4))
    @settings(max_examples=50, deadline=None)
    def test_operators_commute_on_random_polynomials(self, terms):
        f = sum((mono(j, k, c) for j, k, c in terms), BiPolynomial.zero())
        assert creation_adagger(creation_adagger_bar(f)) == \
            creation_adagger_bar(creation_adagger(f))


class TestGaussianInner:
    def test_monomial_rule_examples(self):
        # oracle: <m_pq, m_jk> = delta_{p+k, q+j} (p+k)!
        assert gaussian_inner(mono(1, 0), mono(1, 0)) == 1
        assert gaussian_inner(mono(2, 0), mono(1, 1)) == 0
        assert gaussian_inner(mono(2, 2), mono(2, 2)) == math.factorial(4)

    def test_monomial_rule_exhaustive(self):
        for p in range(4):
            for q in range(4):
                for j in range(4):
                    for k in range(4):
                        got = gaussian_inner(mono(p, q), mono(j, k))
                        want = math.factorial(p + k) if p + k == q + j else 0
                        assert got == want

    @given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3),
                              st.integers(-4, 4), st.integers(-4, 4)),
                    min_size=1, max_size=4))
    @settings(max_examples=60, deadline=None)
    def test_conjugate_symmetry_and_positivity(self, terms):
        f = sum((mono(j, k, RationalComplex(Fraction(a), Fraction(b)))
                 for j, k, a, b in terms), BiPolynomial.zero())
        assert gaussian_inner(f, f).im == 0
        assert gaussian_inner(f, f).re >= 0
        if not f.is_zero:
            assert gaussian_inner(f, f).re > 0
        g = mono(1, 2) - mono(0, 1, 3)
        assert gaussian_inner(f, g) == gaussian_inner(g, f).conjugate()


class TestRationalComplex:
    def test_arithmetic(self):
        a = RationalComplex(Fraction(1, 2), Fraction(3))
        b = RationalComplex(Fraction(2), Fraction(-1))
        assert a * b == RationalComplex(Fraction(4), Fraction(11, 2))
        assert (a / b) * b == a
        assert a - a == 0
        assert a.conjugate().im == -3

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            RationalComplex(Fraction(1)) / RationalComplex()


class TestScaledPolynomial:
    def test_same_polynomial_under_rescaling(self):
        a = ScaledPolynomial(mono(1, 1, 2) - mono(0, 0, 2), Fraction(1, 4))
        b = ScaledPolynomial(mono(1, 1) - mono(0, 0), Fraction(1))
        assert a.same_polynomial(b)
        assert b.same_polynomial(a)

    def test_different_polynomials(self):
        a = ScaledPolynomial(mono(1, 1), Fraction(1))
        b = ScaledPolynomial(mono(1, 1) - mono(0, 0), Fraction(1))
        c = ScaledPolynomial(mono(1, 1), Fraction(2))
        assert not a.same_polynomial(b)
        assert not a.same_polynomial(c)

    def test_inner_requires_square_scale_product(self):
        a = ScaledPolynomial(mono(1, 0), Fraction(1, 2))
        with pytest.raises(ValueError):
            a.inner(ScaledPolynomial(mono(1, 0), Fraction(1)))
        sign, square = a.inner_sign_square(ScaledPolynomial(mono(1, 0), Fraction(1)))
        assert (sign, square) == (1, Fraction(1, 2))

    def test_scale_must_be_positive(self):
        with pytest.raises(ValueError):
            ScaledPolynomial(mono(0, 0), Fraction(-1))


def test_sqrt_fraction():
    assert sqrt_fraction(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_fraction(Fraction(2)) is None
    assert sqrt_fraction(Fraction(-1)) is None


def test_factorial_cap_and_values():
    assert factorial(10) == math.factorial(10)
    with pytest.raises(ValueError):
        factorial(300)
    with pytest.raises(ValueError):
        factorial(-1)


def test_evaluate_matches_hand_value():
    f = mono(2, 1) - mono(0, 0, 3)
    z = 1.0 + 2.0j
    assert f.evaluate(z) == pytest.approx(z * z * z.conjugate() - 3.0)
