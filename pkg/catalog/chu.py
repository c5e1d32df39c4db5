"""Chu's multi-sum identity and the family of identities equivalent to its ks2 form."""

from __future__ import annotations

from catalog.schema import (
    ZERO,
    IdentityDescriptor,
    ParamSpec,
    SumSide,
    Variables,
    fixed_vars,
    guarded_power,
    index_range,
    indexed,
    sign,
)
from enumeration.compositions import compositions
from kernel.binomial import binom_int, binom_poly
from kernel.polynomial import ONE, Polynomial, poly_pow, poly_sum
from models.data import StructuralParams


# ── Chu's multi-sum and its (z - 1) form ─────────────────────────────────────


def _x_vars(params: StructuralParams, v: Variables) -> tuple[Polynomial, ...]:
    return v.of(*indexed("x", params["s"]))


def _multisum_vars(params: StructuralParams) -> tuple[str, ...]:
    return (*indexed("x", params["s"]), "z")


def _multisum_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    z = v["z"]
    term = ONE
    for i, (x_i, k_i) in enumerate(zip(_x_vars(params, v), index)):
        upper = x_i + k_i * z + (shift if i == 0 else 0)
        term = term * binom_poly(upper, k_i)
    return term


def _multisum_rhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, s, (k,) = params["n"], params["s"], index
    z = v["z"]
    total = poly_sum(_x_vars(params, v))
    return (
        binom_int(k + s - 2, k) * binom_poly(total + n * z - k, n - k) * poly_pow(z, k)
    )


def _multisum_alt_rhs(
    params: StructuralParams, index: tuple, shift: int, v: Variables
) -> Polynomial:
    n, s, (j,) = params["n"], params["s"], index
    z = v["z"]
    total = poly_sum(_x_vars(params, v))
    return (
        binom_int(j + s - 2, j)
        * binom_poly(total + n * z + (s - 1), n - j)
        * poly_pow(z - 1, j)
    )


MULTISUM_SCHEMA = (ParamSpec("n"), ParamSpec("s", minimum=1))
MULTISUM_LHS = SumSide(lambda p: compositions(p["n"], p["s"]), _multisum_lhs)

CHU_MULTISUM = IdentityDescriptor(
    name="chu_multisum",
    schema=MULTISUM_SCHEMA,
    symbolic_vars=("x1..xs", "z"),
    lhs=MULTISUM_LHS,
    rhs=SumSide(index_range("n"), _multisum_rhs),
    reference="Chu, multi-sum generalization of Jensen's identity (1986)",
    variables=_multisum_vars,
)

CHU_MULTISUM_ALT = IdentityDescriptor(
    name="chu_multisum_alt",
    schema=MULTISUM_SCHEMA,
    symbolic_vars=("x1..xs", "z"),
    lhs=MULTISUM_LHS,
    rhs=SumSide(index_range("n"), _multisum_alt_rhs),
    reference="Chu's multi-sum identity after interchanging the order of summation",
    variables=_multisum_vars,
)


# ── ks2 and its equivalents ──────────────────────────────────────────────────


def _ks2_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, s, (k,) = params["n"], params["s"], index
    x, z = v.of("x", "z")
    return binom_int(k + s + shift, k) * binom_poly(x - k, n - k) * poly_pow(z, k)


def _ks2_rhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, s, (k,) = params["n"], params["s"], index
    x, z = v.of("x", "z")
    return binom_int(k + s, k) * binom_poly(x + s + 1, n - k) * poly_pow(z - 1, k)


KS2 = IdentityDescriptor(
    name="ks2",
    schema=(ParamSpec("n"), ParamSpec("s")),
    symbolic_vars=("x", "z"),
    lhs=SumSide(index_range("n"), _ks2_lhs),
    rhs=SumSide(index_range("n"), _ks2_rhs),
    reference="Chu's identity compared with its (z-1) form, s replaced by s+2",
    variables=fixed_vars("x", "z"),
)


def _gkp_full_indices(params: StructuralParams):
    return ((k,) for k in range(params["m"] - params["n"] + 1))


def _gkp_full_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    m, n, (k,) = params["m"], params["n"], index
    r, x, y = v.of("r", "x", "y")
    return (
        binom_poly(r + m + shift, m - n - k)
        * binom_int(n + k, n)
        * poly_pow(x, m - n - k)
        * poly_pow(y, k)
    )


def _gkp_full_rhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    m, n, (k,) = params["m"], params["n"], index
    r, x, y = v.of("r", "x", "y")
    return (
        binom_poly(-r, m - n - k)
        * binom_int(n + k, n)
        * poly_pow(-x, m - n - k)
        * poly_pow(x + y, k)
    )


def _n_at_most_m(params: StructuralParams) -> str | None:
    return None if params["n"] <= params["m"] else "n must not exceed m"


GKP_FULL = IdentityDescriptor(
    name="gkp_full",
    schema=(ParamSpec("m"), ParamSpec("n")),
    symbolic_vars=("r", "x", "y"),
    lhs=SumSide(_gkp_full_indices, _gkp_full_lhs),
    rhs=SumSide(_gkp_full_indices, _gkp_full_rhs),
    reference="Graham, Knuth, Patashnik, Concrete Mathematics, p. 218",
    variables=fixed_vars("r", "x", "y"),
    constraint=_n_at_most_m,
)


def _sun_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    m, n, a, (k,) = params["m"], params["n"], params["a"], index
    weight = binom_int(n + k, a)
    if not weight:
        return ZERO
    return sign(m - k) * binom_int(m + shift, k) * weight * guarded_power(1 + v["x"], n + k - a)


def _sun_rhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    m, n, a, (k,) = params["m"], params["n"], params["a"], index
    weight = binom_int(m + k, a)
    if not weight:
        return ZERO
    return binom_int(n, k) * weight * guarded_power(v["x"], m + k - a)


SUN = IdentityDescriptor(
    name="sun",
    schema=(ParamSpec("m"), ParamSpec("n"), ParamSpec("a")),
    symbolic_vars=("x",),
    lhs=SumSide(index_range("m"), _sun_lhs),
    rhs=SumSide(index_range("n"), _sun_rhs),
    reference="Z.-W. Sun, combinatorial identity with two parameters",
    variables=fixed_vars("x"),
)


def _munarini_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, (k,) = params["n"], index
    alpha, beta, x = v.of("alpha", "beta", "x")
    return (
        sign(n - k)
        * binom_poly(beta - alpha + n + shift, n - k)
        * binom_poly(beta + k, k)
        * poly_pow(1 + x, k)
    )


def _munarini_rhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, (k,) = params["n"], index
    alpha, beta, x = v.of("alpha", "beta", "x")
    return binom_poly(alpha, n - k) * binom_poly(beta + k, k) * poly_pow(x, k)


MUNARINI = IdentityDescriptor(
    name="munarini",
    schema=(ParamSpec("n"),),
    symbolic_vars=("alpha", "beta", "x"),
    lhs=SumSide(index_range("n"), _munarini_lhs),
    rhs=SumSide(index_range("n"), _munarini_rhs),
    reference="Munarini, generalization of a binomial identity of Simons (2005)",
    variables=fixed_vars("alpha", "beta", "x"),
)


def _simons_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, (k,) = params["n"], index
    weight = binom_int(n + shift, k) * binom_int(n + k, k)
    return sign(n - k) * weight * poly_pow(1 + v["x"], k)


def _simons_rhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, (k,) = params["n"], index
    return binom_int(n, k) * binom_int(n + k, k) * poly_pow(v["x"], k)


SIMONS = IdentityDescriptor(
    name="simons",
    schema=(ParamSpec("n"),),
    symbolic_vars=("x",),
    lhs=SumSide(index_range("n"), _simons_lhs),
    rhs=SumSide(index_range("n"), _simons_rhs),
    reference="Simons, a curious identity, Math. Gazette (2001)",
    variables=fixed_vars("x"),
)
