"""Scalar identities of the Jensen family, plus the GKP identity in its m-form."""

from __future__ import annotations

from fractions import Fraction

from catalog.schema import (
    IdentityDescriptor,
    ParamSpec,
    StatusFlag,
    SumSide,
    Variables,
    closed_form,
    fixed_vars,
    index_range,
    sign,
)
from kernel.binomial import binom_int, binom_poly, factorial, falling_factorial
from kernel.polynomial import ONE, ZERO, Polynomial, const, poly_pow, var
from models.data import StructuralParams

X, Y = var("x"), var("y")

N_SCHEMA = (ParamSpec("n"),)


# ── Chu-Vandermonde ──────────────────────────────────────────────────────────


def _cv_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, (k,) = params["n"], index
    x, y = v.of("x", "y")
    return binom_poly(x + shift, k) * binom_poly(y, n - k)


def _cv_rhs(params: StructuralParams, v: Variables) -> Polynomial:
    x, y = v.of("x", "y")
    return binom_poly(x + y, params["n"])


CHU_VANDERMONDE = IdentityDescriptor(
    name="chu_vandermonde",
    schema=N_SCHEMA,
    symbolic_vars=("x", "y"),
    lhs=SumSide(index_range("n"), _cv_lhs),
    rhs=closed_form(_cv_rhs),
    reference="Chu-Vandermonde convolution",
    variables=fixed_vars("x", "y"),
)


# ── Abel and Rothe ───────────────────────────────────────────────────────────


def _abel_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, (k,) = params["n"], index
    x, y, z = v.of("x", "y", "z")
    weight = binom_int(n + shift, k)
    if k == 0:
        # x (x + 0z)^{-1} cancels
        return weight * poly_pow(y, n)
    return weight * x * poly_pow(x + k * z, k - 1) * poly_pow(y - k * z, n - k)


def _x_plus_y_power(params: StructuralParams, v: Variables) -> Polynomial:
    x, y = v.of("x", "y")
    return poly_pow(x + y, params["n"])


ABEL = IdentityDescriptor(
    name="abel",
    schema=N_SCHEMA,
    symbolic_vars=("x", "y", "z"),
    lhs=SumSide(index_range("n"), _abel_lhs),
    rhs=closed_form(_x_plus_y_power),
    reference="Abel's identity; Comtet, Advanced Combinatorics, sec. 3.1",
    variables=fixed_vars("x", "y", "z"),
)


def _rothe_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    """x/(x-kz) C(x-kz, k) written as x (x-kz-1)_{k-1} / k! so no division by x-kz occurs."""
    n, (k,) = params["n"], index
    x, y, z = v.of("x", "y", "z")
    if k == 0:
        return binom_poly(y, n)
    top = x + shift
    fused = top * falling_factorial(top - k * z - 1, k - 1) * Fraction(1, factorial(k))
    return fused * binom_poly(y + k * z, n - k)


ROTHE = IdentityDescriptor(
    name="rothe",
    schema=N_SCHEMA,
    symbolic_vars=("x", "y", "z"),
    lhs=SumSide(index_range("n"), _rothe_lhs),
    rhs=closed_form(_cv_rhs),
    reference="Hagen-Rothe identity; Graham, Knuth, Patashnik, Concrete Mathematics, sec. 5.4",
    variables=fixed_vars("x", "y", "z"),
)


# ── Jensen and its relatives ─────────────────────────────────────────────────


def _jensen_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, (k,) = params["n"], index
    x, y, z = v.of("x", "y", "z")
    return binom_poly(x + k * z + shift, k) * binom_poly(y - k * z, n - k)


def _jensen_rhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, (k,) = params["n"], index
    x, y, z = v.of("x", "y", "z")
    return binom_poly(x + y - k, n - k) * poly_pow(z, k)


JENSEN = IdentityDescriptor(
    name="jensen",
    schema=N_SCHEMA,
    symbolic_vars=("x", "y", "z"),
    lhs=SumSide(index_range("n"), _jensen_lhs),
    rhs=SumSide(index_range("n"), _jensen_rhs),
    reference="Jensen, Acta Math. 26 (1902)",
    variables=fixed_vars("x", "y", "z"),
)


def _gould_jensen_lhs(
    params: StructuralParams, index: tuple, shift: int, v: Variables
) -> Polynomial:
    n, (k,) = params["n"], index
    x, y, z = v.of("x", "y", "z")
    scale = Fraction(1, factorial(k) * factorial(n - k))
    return poly_pow(x + k * z + shift, k) * poly_pow(y - k * z, n - k) * scale


def _gould_jensen_rhs(
    params: StructuralParams, index: tuple, shift: int, v: Variables
) -> Polynomial:
    n, (k,) = params["n"], index
    x, y, z = v.of("x", "y", "z")
    return poly_pow(x + y, k) * poly_pow(z, n - k) * Fraction(1, factorial(k))


GOULD_JENSEN = IdentityDescriptor(
    name="gould_jensen",
    schema=N_SCHEMA,
    symbolic_vars=("x", "y", "z"),
    lhs=SumSide(index_range("n"), _gould_jensen_lhs),
    rhs=SumSide(index_range("n"), _gould_jensen_rhs),
    reference="Gould, Abel-type analogue of Jensen's identity (1960)",
    variables=fixed_vars("x", "y", "z"),
)


def _gould_variation_rhs(
    params: StructuralParams, index: tuple, shift: int, v: Variables
) -> Polynomial:
    """k C(x+y-k, n-k) (x+y-(n-k)z-k)/(x+y-k) z^k with the division carried out."""
    n, (k,) = params["n"], index
    x, y, z = v.of("x", "y", "z")
    if k == 0:
        return ZERO
    if k == n:
        return n * poly_pow(z, n)
    base = x + y - k
    reduced = falling_factorial(base - 1, n - k - 1) * Fraction(1, factorial(n - k))
    return k * (base - (n - k) * z) * reduced * poly_pow(z, k)


GOULD_VARIATION = IdentityDescriptor(
    name="gould_variation",
    schema=N_SCHEMA,
    symbolic_vars=("x", "y", "z"),
    lhs=SumSide(index_range("n"), _jensen_lhs),
    rhs=SumSide(index_range("n"), _gould_variation_rhs),
    reference="Gould, variation of Jensen's identity (1962), as printed",
    variables=fixed_vars("x", "y", "z"),
    flag=StatusFlag.KNOWN_DISCREPANT,
    expected_differences=(
        (StructuralParams.of(n=0), ONE),
        (StructuralParams.of(n=1), X + Y),
        (
            StructuralParams.of(n=2),
            (X * X + 2 * X * Y + Y * Y - X - Y) * Fraction(1, 2),
        ),
    ),
)


def _jensen_alt_rhs(
    params: StructuralParams, index: tuple, shift: int, v: Variables
) -> Polynomial:
    n, (i,) = params["n"], index
    x, y, z = v.of("x", "y", "z")
    return binom_poly(x + y + 1, n - i) * poly_pow(z - 1, i)


JENSEN_ALT = IdentityDescriptor(
    name="jensen_alt",
    schema=N_SCHEMA,
    symbolic_vars=("x", "y", "z"),
    lhs=SumSide(index_range("n"), _jensen_lhs),
    rhs=SumSide(index_range("n"), _jensen_alt_rhs),
    reference="Jensen's identity after interchanging the order of summation",
    variables=fixed_vars("x", "y", "z"),
)


def _shift_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, (k,) = params["n"], index
    x, z = v.of("x", "z")
    return binom_poly(x - k + shift, n - k) * poly_pow(z, k)


def _shift_rhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, (k,) = params["n"], index
    x, z = v.of("x", "z")
    return binom_poly(x + 1, n - k) * poly_pow(z - 1, k)


SHIFT_IDENTITY = IdentityDescriptor(
    name="shift_identity",
    schema=N_SCHEMA,
    symbolic_vars=("x", "z"),
    lhs=SumSide(index_range("n"), _shift_lhs),
    rhs=SumSide(index_range("n"), _shift_rhs),
    reference="Jensen's identity combined with its interchanged form",
    variables=fixed_vars("x", "z"),
)


# ── Alternating power sum ────────────────────────────────────────────────────


def _stirling_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, r, (k,) = params["n"], params["r"], index
    return const(sign(n - k) * binom_int(n + shift, k) * k**r)


def _stirling_rhs(params: StructuralParams, v: Variables) -> Polynomial:
    n, r = params["n"], params["r"]
    return const(factorial(n)) if r == n else ZERO


def _r_at_most_n(params: StructuralParams) -> str | None:
    return None if params["r"] <= params["n"] else "r must not exceed n"


STIRLING_SUM = IdentityDescriptor(
    name="stirling_sum",
    schema=(ParamSpec("n"), ParamSpec("r")),
    symbolic_vars=(),
    lhs=SumSide(index_range("n"), _stirling_lhs),
    rhs=closed_form(_stirling_rhs),
    reference="Stirling numbers of the second kind; Stanley, EC1, p. 34 (24a)",
    variables=fixed_vars(),
    constraint=_r_at_most_n,
)


# ── Graham-Knuth-Patashnik, m-form ───────────────────────────────────────────


def _gkp_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    m, (k,) = params["m"], index
    r, x, y = v.of("r", "x", "y")
    return binom_poly(r + m + shift, k) * poly_pow(x, k) * poly_pow(y, m - k)


def _gkp_rhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    m, (k,) = params["m"], index
    r, x, y = v.of("r", "x", "y")
    return binom_poly(-r, k) * poly_pow(-x, k) * poly_pow(x + y, m - k)


GKP = IdentityDescriptor(
    name="gkp",
    schema=(ParamSpec("m"),),
    symbolic_vars=("r", "x", "y"),
    lhs=SumSide(index_range("m"), _gkp_lhs),
    rhs=SumSide(index_range("m"), _gkp_rhs),
    reference="Graham, Knuth, Patashnik, Concrete Mathematics, p. 218",
    variables=fixed_vars("r", "x", "y"),
)
