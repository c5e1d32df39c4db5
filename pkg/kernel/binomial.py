"""Binomial and multinomial coefficients with polynomial upper arguments."""

from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction
from functools import cache

from kernel.polynomial import (
    ONE,
    ZERO,
    Polynomial,
    Scalar,
    as_polynomial,
    monomial_poly,
    poly_mul,
    poly_pow,
    poly_scale,
    poly_sum,
    var,
)

VecIndex = tuple[int, ...]


@cache
def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    return math.factorial(n)


# ── Scalar binomials ─────────────────────────────────────────────────────────


def falling_factorial(p: Polynomial | Scalar, k: int) -> Polynomial:
    """p(p-1)...(p-k+1); the empty product (k = 0) is 1."""
    if k < 0:
        raise ValueError(f"falling factorial length must be nonnegative, got {k}")
    p = as_polynomial(p)
    result = ONE
    for i in range(k):
        result = poly_mul(result, p - i)
    return result


def binom_poly(p: Polynomial | Scalar, k: int) -> Polynomial:
    """C(p, k) as a polynomial in the variables of p; zero for k < 0."""
    if k < 0:
        return ZERO
    return poly_scale(falling_factorial(p, k), Fraction(1, factorial(k)))


def binom_int(a: int, k: int) -> Fraction:
    """C(a, k) for integer a of any sign, so C(-a, k) == (-1)^k C(a+k-1, k).

    Same value as ``binom_poly(const(a), k)``, computed on integers.
    """
    if k < 0:
        return Fraction(0)
    numerator = 1
    for i in range(k):
        numerator *= a - i
    return Fraction(numerator, factorial(k))


# ── Vector indices ───────────────────────────────────────────────────────────


def vec_size(k: Sequence[int]) -> int:
    return sum(k)


def vec_factorial(k: Sequence[int]) -> int:
    return math.prod(factorial(c) for c in k)


def vec_sub(n: Sequence[int], k: Sequence[int]) -> VecIndex:
    _check_dims(n, k)
    return tuple(a - b for a, b in zip(n, k))


def _check_dims(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")


def multinomial_poly(p: Polynomial | Scalar, n: Sequence[int]) -> Polynomial:
    """C(p, n) = p(p-1)...(p-|n|+1)/n! for n in N^m, zero if some component is negative."""
    if any(c < 0 for c in n):
        return ZERO
    return poly_scale(falling_factorial(p, vec_size(n)), Fraction(1, vec_factorial(n)))


def vec_binom(n: Sequence[int], k: Sequence[int]) -> Fraction:
    """Componentwise product of integer binomials C(n_i, k_i)."""
    _check_dims(n, k)
    return math.prod((binom_int(a, b) for a, b in zip(n, k)), start=Fraction(1))


def vec_monomial(z_vars: Sequence[str], k: Sequence[int]) -> Polynomial:
    """z_1^{k_1} ... z_m^{k_m}."""
    _check_dims(z_vars, k)
    if any(c < 0 for c in k):
        raise ValueError(f"negative component in exponent vector {tuple(k)}")
    return monomial_poly(dict(zip(z_vars, k)))


def dot_product(z_vars: Sequence[str], k: Sequence[int]) -> Polynomial:
    """k_1 z_1 + ... + k_m z_m."""
    _check_dims(z_vars, k)
    return poly_sum(c * var(name) for name, c in zip(z_vars, k) if c)


def shifted_power(names: Sequence[str], k: Sequence[int], delta: Scalar) -> Polynomial:
    """(v_1 + delta)^{k_1} ... (v_m + delta)^{k_m}; (z - 1)^k and (1 + x)^k in vector sums."""
    _check_dims(names, k)
    result = ONE
    for name, exp in zip(names, k):
        if exp:
            result = poly_mul(result, poly_pow(var(name) + delta, exp))
    return result
