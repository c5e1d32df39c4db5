"""Tests for binomial, multinomial and Gaussian coefficients."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis.strategies import integers

from enumeration.compositions import vec_range
from kernel.binomial import (
    binom_int,
    binom_poly,
    dot_product,
    falling_factorial,
    multinomial_poly,
    shifted_power,
    vec_binom,
    vec_monomial,
    vec_size,
)
from kernel.polynomial import ONE, ZERO, poly_eval, poly_substitute, poly_sum, var
from kernel.qseries import Q, gauss_binom, q_pochhammer, q_power_exponent

X, Y, Z = var("x"), var("y"), var("z")


class TestScalarBinomials:
    def test_falling_factorial(self):
        assert falling_factorial(X, 3) == X**3 - 3 * X**2 + 2 * X
        assert falling_factorial(X, 0) == ONE

    def test_small_cases(self):
        assert binom_poly(X, 0) == ONE
        assert binom_poly(X, -1) == ZERO
        assert binom_poly(X, 2) == Fraction(1, 2) * X * X - Fraction(1, 2) * X

    @pytest.mark.parametrize("k", range(7))
    def test_pascal(self, k):
        assert binom_poly(X + 1, k) == binom_poly(X, k) + binom_poly(X, k - 1)

    @given(integers(-8, 8), integers(0, 7))
    def test_negative_upper_index(self, a, k):
        assert binom_int(-a, k) == (-1) ** k * binom_int(a + k - 1, k)

    @pytest.mark.parametrize("k", range(6))
    def test_negative_upper_index_symbolic(self, k):
        assert binom_poly(-X, k) == (-1) ** k * binom_poly(X + k - 1, k)

    @given(integers(0, 12), integers(0, 12))
    def test_integer_values(self, a, k):
        assert binom_int(a, k) == math.comb(a, k)
        assert binom_poly(a, k) == binom_int(a, k)

    @pytest.mark.parametrize("n", range(6))
    def test_chu_vandermonde(self, n):
        lhs = poly_sum(binom_poly(X, k) * binom_poly(Y, n - k) for k in range(n + 1))
        assert lhs == binom_poly(X + Y, n)

    @pytest.mark.parametrize("i", range(6))
    def test_swap_of_upper_arguments(self, i):
        for k in range(i + 1):
            top = X + k * Z
            lhs = binom_poly(top, k) * binom_poly(-top - 1, i - k)
            rhs = (-1) ** (i - k) * math.comb(i, k) * binom_poly(top + i - k, i)
            assert lhs == rhs

    @pytest.mark.parametrize("i", range(6))
    def test_alternating_sum_is_leading_coefficient(self, i):
        total = poly_sum(
            (-1) ** (i - k) * math.comb(i, k) * binom_poly(X + k * Z + i - k, i)
            for k in range(i + 1)
        )
        assert total == (Z - 1) ** i


class TestMultinomials:
    def test_one_dimension_is_binomial(self):
        for k in range(6):
            assert multinomial_poly(X, (k,)) == binom_poly(X, k)

    def test_value(self):
        assert multinomial_poly(4, (2, 1)) == 12
        assert multinomial_poly(X, (1, 1)) == X * X - X

    def test_negative_component_is_zero(self):
        assert multinomial_poly(X, (2, -1)) == ZERO

    def test_negative_upper_argument(self):
        for k in vec_range((2, 1)):
            expected = (-1) ** vec_size(k) * multinomial_poly(X + vec_size(k) - 1, k)
            assert multinomial_poly(-X, k) == expected

    def test_vec_binom(self):
        assert vec_binom((3, 2), (1, 1)) == 6
        assert vec_binom((3, 2), (4, 0)) == 0
        with pytest.raises(ValueError):
            vec_binom((1,), (1, 1))

    def test_monomials_and_dot_products(self):
        z1, z2 = var("z1"), var("z2")
        assert vec_monomial(("z1", "z2"), (2, 1)) == z1 * z1 * z2
        assert dot_product(("z1", "z2"), (2, 0)) == 2 * z1
        assert shifted_power(("z1", "z2"), (1, 2), -1) == (z1 - 1) * (z2 - 1) ** 2
        with pytest.raises(ValueError):
            vec_monomial(("z1",), (-1,))


class TestGaussianBinomials:
    def test_known_expansion(self):
        assert gauss_binom(4, 2) == 1 + Q + 2 * Q**2 + Q**3 + Q**4

    def test_edge_cases(self):
        assert gauss_binom(5, 0) == ONE
        assert gauss_binom(5, -1) == ZERO
        assert gauss_binom(2, 3) == ZERO
        assert gauss_binom(-1, 1) == -q_power_exponent(-1)

    @pytest.mark.parametrize("alpha", range(-4, 7))
    def test_q_one_is_ordinary_binomial(self, alpha):
        for k in range(6):
            assert poly_eval(gauss_binom(alpha, k), {"q": 1}) == binom_int(alpha, k)

    @pytest.mark.parametrize("alpha", range(7))
    def test_q_pascal(self, alpha):
        for k in range(6):
            expected = (
                gauss_binom(alpha - 1, k - 1) + q_power_exponent(k) * gauss_binom(alpha - 1, k)
            )
            assert gauss_binom(alpha, k) == expected
            if k > alpha:
                assert gauss_binom(alpha, k) == ZERO

    def test_pochhammer(self):
        assert q_pochhammer(X, 0) == ONE
        assert q_pochhammer(Q, 2) == (1 - Q) * (1 - Q * Q)
        assert poly_substitute(q_pochhammer(-X * Q, 3), {"q": 1}) == (1 + X) ** 3
        with pytest.raises(ValueError):
            q_pochhammer(Q, -1)
