"""q-Pochhammer symbols and Gaussian binomials over Laurent polynomials in q."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from kernel.polynomial import (
    LAURENT_VARIABLE,
    ONE,
    ZERO,
    KernelError,
    Polynomial,
    monomial_poly,
    poly_mul,
    var,
)

Q = var(LAURENT_VARIABLE)


def q_power_exponent(e: int) -> Polynomial:
    """The Laurent monomial q^e (e may be negative)."""
    return monomial_poly({LAURENT_VARIABLE: e})


def q_pochhammer(a: Polynomial, n: int) -> Polynomial:
    """(a;q)_n = (1-a)(1-aq)...(1-aq^{n-1}); the empty product is 1."""
    if n < 0:
        raise ValueError(f"q-Pochhammer length must be nonnegative, got {n}")
    result = ONE
    for i in range(n):
        result = poly_mul(result, ONE - poly_mul(a, q_power_exponent(i)))
    return result


# ── Laurent division in q ────────────────────────────────────────────────────


def _q_coefficients(p: Polynomial) -> dict[int, Fraction]:
    coeffs: dict[int, Fraction] = {}
    for mono, coeff in p.terms.items():
        if any(name != LAURENT_VARIABLE for name, _ in mono):
            raise KernelError(f"{p} is not a Laurent polynomial in {LAURENT_VARIABLE}")
        coeffs[dict(mono).get(LAURENT_VARIABLE, 0)] = coeff
    return coeffs


def laurent_divide(numerator: Polynomial, denominator: Polynomial) -> Polynomial:
    """Exact quotient of Laurent polynomials in q; a nonzero remainder is a KernelError."""
    num = _q_coefficients(numerator)
    den = _q_coefficients(denominator)
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num:
        return ZERO

    # Shift both to start at q^0; the quotient is then an ordinary polynomial.
    n_lo, d_lo = min(num), min(den)
    rem = {e - n_lo: c for e, c in num.items()}
    den = {e - d_lo: c for e, c in den.items()}
    top = max(den)
    lead = den[top]

    quotient: dict[int, Fraction] = {}
    while rem and max(rem) >= top:
        hi = max(rem)
        factor = rem[hi] / lead
        shift = hi - top
        quotient[shift] = factor
        for e, c in den.items():
            value = rem.get(e + shift, 0) - factor * c
            if value:
                rem[e + shift] = value
            else:
                rem.pop(e + shift, None)
    if rem:
        raise KernelError(f"inexact division of {numerator} by {denominator}")

    offset = n_lo - d_lo
    return Polynomial({((LAURENT_VARIABLE, e + offset),): c for e, c in quotient.items()})


@lru_cache(maxsize=None)
def gauss_binom(alpha: int, k: int) -> Polynomial:
    """Gaussian binomial [alpha, k] = (q^{alpha-k+1};q)_k / (q;q)_k, zero for k < 0."""
    if k < 0:
        return ZERO
    numerator = q_pochhammer(q_power_exponent(alpha - k + 1), k)
    denominator = q_pochhammer(Q, k)
    return laurent_divide(numerator, denominator)
