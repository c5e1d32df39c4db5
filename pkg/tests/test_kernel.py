"""Tests for exact polynomial arithmetic and Laurent division in q."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from kernel.polynomial import (
    ONE,
    ZERO,
    KernelError,
    Polynomial,
    const,
    monomial_poly,
    poly_eval,
    poly_pow,
    poly_substitute,
    poly_sum,
    poly_to_string,
    var,
)
from kernel.qseries import Q, laurent_divide, q_power_exponent

X, Y, Z = var("x"), var("y"), var("z")

fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
monomials = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2)).map(
    lambda e: (("x", e[0]), ("y", e[1]), ("z", e[2]))
)
polynomials = st.dictionaries(monomials, fractions, max_size=5).map(Polynomial)
points = st.fixed_dictionaries({"x": fractions, "y": fractions, "z": fractions})


class TestRingAxioms:
    @settings(max_examples=300, deadline=None)
    @given(polynomials, polynomials, polynomials)
    def test_addition(self, a, b, c):
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a + ZERO == a
        assert a + (-a) == ZERO

    @settings(max_examples=300, deadline=None)
    @given(polynomials, polynomials, polynomials)
    def test_multiplication(self, a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * ONE == a
        assert a * ZERO == ZERO

    @settings(max_examples=300, deadline=None)
    @given(polynomials, polynomials, polynomials)
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=200, deadline=None)
    @given(polynomials, polynomials)
    def test_subtraction_is_inverse_of_addition(self, a, b):
        assert (a + b) - b == a
        assert a - b == -(b - a)


class TestEvaluation:
    @settings(max_examples=300, deadline=None)
    @given(polynomials, polynomials, points)
    def test_evaluation_is_a_ring_homomorphism(self, a, b, point):
        assert poly_eval(a + b, point) == poly_eval(a, point) + poly_eval(b, point)
        assert poly_eval(a * b, point) == poly_eval(a, point) * poly_eval(b, point)

    def test_random_rational_pairs_match_fraction_arithmetic(self):
        rng = random.Random(7)
        for _ in range(10_000):
            p = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
            r = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
            assert (const(p) + const(r)).constant_value() == p + r
            assert (const(p) * const(r)).constant_value() == p * r

    def test_missing_variable(self):
        with pytest.raises(KernelError):
            poly_eval(X + Y, {"x": 1})

    def test_q_zero_with_negative_exponent(self):
        with pytest.raises(ZeroDivisionError):
            poly_eval(q_power_exponent(-1), {"q": 0})

    def test_exact_value(self):
        assert poly_eval(X * X - Fraction(1, 3) * Y, {"x": Fraction(1, 2), "y": 3}) == Fraction(
            -3, 4
        )


class TestConstruction:
    def test_zero_coefficients_are_dropped(self):
        p = Polynomial({(("x", 1),): 2, (("x", 1), ("y", 0)): -2})
        assert p == ZERO
        assert len(p) == 0

    def test_negative_exponent_only_on_q(self):
        with pytest.raises(KernelError):
            monomial_poly({"x": -1})
        assert len(monomial_poly({"q": -2})) == 1

    def test_laurent_monomials_cancel(self):
        assert q_power_exponent(-1) * Q == ONE

    def test_int_and_fraction_comparison(self):
        assert const(Fraction(6, 2)) == 3
        assert ZERO == 0
        assert not X.is_constant()
        assert X.variables() == frozenset({"x"})

    def test_pow(self):
        assert poly_pow(ZERO, 0) == ONE
        assert poly_pow(X + 1, 2) == X * X + 2 * X + 1
        with pytest.raises(ValueError):
            poly_pow(X, -1)

    def test_sum(self):
        assert poly_sum([X, Y, -X]) == Y
        assert poly_sum([]) == ZERO


class TestSubstitution:
    def test_polynomial_replacement(self):
        assert poly_substitute((X + Y) ** 2, {"x": 1 - Y}) == ONE

    def test_simultaneous(self):
        assert poly_substitute(X - Y, {"x": Y, "y": X}) == Y - X

    def test_negative_q_power_needs_nonzero_constant(self):
        assert poly_substitute(q_power_exponent(-2) + X, {"q": 2}) == X + Fraction(1, 4)
        with pytest.raises(KernelError):
            poly_substitute(q_power_exponent(-1), {"q": X})


class TestSympyOracle:
    @pytest.mark.parametrize("power", [2, 3, 5])
    def test_expansion_matches_sympy(self, power):
        sx, sy, sz = sympy.symbols("x y z")
        ours = poly_pow(X + 2 * Y - Fraction(1, 3) * Z + 1, power)
        theirs = sympy.Poly(sympy.expand((sx + 2 * sy - sympy.Rational(1, 3) * sz + 1) ** power),
                            sx, sy, sz)
        expected = {}
        for (ex, ey, ez), coeff in theirs.terms():
            mono = tuple((v, e) for v, e in (("x", ex), ("y", ey), ("z", ez)) if e)
            expected[mono] = Fraction(int(coeff.p), int(coeff.q))
        assert dict(ours.terms) == expected


class TestRendering:
    def test_mixed_terms(self):
        p = Fraction(3, 2) * X * X * Y - Z
        assert poly_to_string(p) == "3/2*x^2*y - z"

    def test_zero_and_leading_sign(self):
        assert str(ZERO) == "0"
        assert str(-X) == "-x"
        assert str(-X + 1) == "-x + 1"

    def test_degree_then_lex(self):
        assert str((X + Y) ** 2) == "x^2 + 2*x*y + y^2"
        assert str(X + Y + Z) == "x + y + z"

    def test_constants(self):
        assert str(const(13)) == "13"
        assert str(const(Fraction(-1, 2))) == "-1/2"


class TestLaurentDivision:
    def test_exact_quotient(self):
        assert laurent_divide(1 - Q * Q, 1 - Q) == 1 + Q

    def test_negative_exponents(self):
        numerator = q_power_exponent(-1) - Q
        assert laurent_divide(numerator, 1 - Q) == q_power_exponent(-1) + 1

    def test_inexact(self):
        with pytest.raises(KernelError):
            laurent_divide(1 + Q * Q, 1 - Q)

    def test_not_univariate(self):
        with pytest.raises(KernelError):
            laurent_divide(X + Q, 1 - Q)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            laurent_divide(Q, ZERO)
