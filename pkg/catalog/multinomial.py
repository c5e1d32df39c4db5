"""Vector-indexed identities: multinomial Chu-Vandermonde, Mohanty-Handa, Chu (1989)
and the multinomial extensions of ks2, Munarini and Simons.

Vector parameters are written ``nvec``; the dimension m is ``len(nvec)``.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable

from catalog.schema import (
    SYMBOLIC,
    ZERO,
    IdentityDescriptor,
    ParamKind,
    ParamSpec,
    SumSide,
    Variables,
    closed_form,
    indexed,
    sign,
)
from enumeration.compositions import vec_compositions, vec_range
from kernel.binomial import multinomial_poly, vec_binom, vec_factorial, vec_size, vec_sub
from kernel.polynomial import ONE, Polynomial, const, poly_sum
from models.data import StructuralParams

NVEC = ParamSpec("nvec", ParamKind.VECTOR)


def _vec_indices(name: str = "nvec") -> Callable[[StructuralParams], Iterable[tuple]]:
    return lambda params: vec_range(params[name])


def _z_names(params: StructuralParams) -> tuple[str, ...]:
    return indexed("z", len(params["nvec"]))


def _with_shift(n: tuple[int, ...], shift: int) -> tuple[int, ...]:
    return (n[0] + shift, *n[1:]) if shift else n


# ── Multinomial Chu-Vandermonde and the alternating power sum ────────────────


def _cv_multi_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n = params["nvec"]
    x, y = v.of("x", "y")
    return multinomial_poly(x + shift, index) * multinomial_poly(y, vec_sub(n, index))


def _cv_multi_rhs(params: StructuralParams, v: Variables) -> Polynomial:
    x, y = v.of("x", "y")
    return multinomial_poly(x + y, params["nvec"])


CV_MULTI = IdentityDescriptor(
    name="cv_multi",
    schema=(NVEC,),
    symbolic_vars=("x", "y"),
    lhs=SumSide(_vec_indices(), _cv_multi_lhs),
    rhs=closed_form(_cv_multi_rhs),
    reference="multinomial Chu-Vandermonde convolution (Zeng)",
    variables=lambda params: ("x", "y"),
)


def _stirling_multi_lhs(
    params: StructuralParams, index: tuple, shift: int, v: Variables
) -> Polynomial:
    n, r = params["nvec"], params["rvec"]
    powers = 1
    for k_i, r_i in zip(index, r):
        powers *= k_i**r_i
    weight = vec_binom(_with_shift(n, shift), index)
    return const(sign(vec_size(n) - vec_size(index)) * weight * powers)


def _stirling_multi_rhs(params: StructuralParams, v: Variables) -> Polynomial:
    n, r = params["nvec"], params["rvec"]
    return const(vec_factorial(n)) if r == n else ZERO


def _rvec_within_nvec(params: StructuralParams) -> str | None:
    n, r = params["nvec"], params["rvec"]
    if len(n) != len(r):
        return "rvec and nvec must have the same dimension"
    if any(a > b for a, b in zip(r, n)):
        return "rvec must not exceed nvec componentwise"
    return None


STIRLING_MULTI = IdentityDescriptor(
    name="stirling_multi",
    schema=(NVEC, ParamSpec("rvec", ParamKind.VECTOR)),
    symbolic_vars=(),
    lhs=SumSide(_vec_indices(), _stirling_multi_lhs),
    rhs=closed_form(_stirling_multi_rhs),
    reference="multinomial alternating power sum (Stirling numbers of the second kind)",
    variables=lambda params: (),
    constraint=_rvec_within_nvec,
)


# ── Compositions of vectors ──────────────────────────────────────────────────


def _upper_composition_lhs(
    params: StructuralParams, index: tuple, shift: int, v: Variables
) -> Polynomial:
    term = ONE
    for i, (a_i, block) in enumerate(zip(params["avec"], index)):
        term = term * multinomial_poly(a_i + (shift if i == 0 else 0), block)
    return term


def _avec_matches_size(params: StructuralParams) -> str | None:
    if sum(params["avec"]) != vec_size(params["nvec"]):
        return "avec must sum to |nvec|"
    return None


SCALAR_UPPER_COMPOSITION = IdentityDescriptor(
    name="scalar_upper_composition",
    schema=(NVEC, ParamSpec("avec", ParamKind.VECTOR)),
    symbolic_vars=(),
    lhs=SumSide(
        lambda p: vec_compositions(p["nvec"], len(p["avec"])), _upper_composition_lhs
    ),
    rhs=closed_form(lambda p, v: multinomial_poly(vec_size(p["nvec"]), p["nvec"])),
    reference="multinomial convolution with integer upper arguments summing to |n|",
    variables=lambda params: (),
    constraint=_avec_matches_size,
)


def _lemma_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    term = ONE
    for i, block in enumerate(index):
        term = term * multinomial_poly(vec_size(block) + (shift if i == 0 else 0), block)
    return term


COMPOSITIONS_LEMMA = IdentityDescriptor(
    name="compositions_lemma",
    schema=(NVEC, ParamSpec("s", minimum=1)),
    symbolic_vars=(),
    lhs=SumSide(lambda p: vec_compositions(p["nvec"], p["s"]), _lemma_lhs),
    rhs=closed_form(
        lambda p, v: multinomial_poly(vec_size(p["nvec"]) + p["s"] - 1, p["nvec"])
    ),
    reference="sum over s-part vector compositions of C(|k_i|, k_i)",
    variables=lambda params: (),
)


# ── Mohanty-Handa and Chu (1989) ─────────────────────────────────────────────


def _mh_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, x, y = params["nvec"], v["x"], v["y"]
    kz = v.dot(_z_names(params), index)
    return multinomial_poly(x + kz + shift, index) * multinomial_poly(y - kz, vec_sub(n, index))


def _mh_rhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, size = params["nvec"], vec_size(index)
    x, y = v.of("x", "y")
    return (
        multinomial_poly(x + y - size, vec_sub(n, index))
        * multinomial_poly(size, index)
        * v.monomial(_z_names(params), index)
    )


MOHANTY_HANDA = IdentityDescriptor(
    name="mohanty_handa",
    schema=(NVEC,),
    symbolic_vars=("x", "y", "z1..zm"),
    lhs=SumSide(_vec_indices(), _mh_lhs),
    rhs=SumSide(_vec_indices(), _mh_rhs),
    reference="Mohanty and Handa, multinomial generalization of Jensen's identity (1969)",
    variables=lambda params: ("x", "y", *_z_names(params)),
)


def _chu89_x(params: StructuralParams, v: Variables) -> tuple[Polynomial, ...]:
    return v.of(*indexed("x", params["s"]))


def _chu89_vars(params: StructuralParams) -> tuple[str, ...]:
    return (*indexed("x", params["s"]), *_z_names(params))


def _chu89_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    z = _z_names(params)
    term = ONE
    for i, (x_i, block) in enumerate(zip(_chu89_x(params, v), index)):
        upper = x_i + v.dot(z, block) + (shift if i == 0 else 0)
        term = term * multinomial_poly(upper, block)
    return term


def _chu89_rhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, s, z = params["nvec"], params["s"], _z_names(params)
    size = vec_size(index)
    upper = poly_sum(_chu89_x(params, v)) + v.dot(z, n) - size
    return (
        multinomial_poly(size + s - 2, index)
        * multinomial_poly(upper, vec_sub(n, index))
        * v.monomial(z, index)
    )


def _chu89_alt_summand(offset: Callable[[StructuralParams], int]):
    def summand(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
        n, s, z = params["nvec"], params["s"], _z_names(params)
        upper = poly_sum(_chu89_x(params, v)) + v.dot(z, n) + offset(params)
        return (
            multinomial_poly(vec_size(index) + s - 2, index)
            * multinomial_poly(upper, vec_sub(n, index))
            * v.shifted_power(z, index, -1)
        )

    return summand


def shifted_vector_rhs(params: StructuralParams, offset: int) -> Polynomial:
    """chu89_alt right side with an arbitrary constant in the long binomial."""
    summand = _chu89_alt_summand(lambda p: offset)
    return poly_sum(summand(params, k, 0, SYMBOLIC) for k in vec_range(params["nvec"]))


CHU89_SCHEMA = (NVEC, ParamSpec("s", minimum=1))
CHU89_LHS = SumSide(lambda p: vec_compositions(p["nvec"], p["s"]), _chu89_lhs)

CHU89 = IdentityDescriptor(
    name="chu89",
    schema=CHU89_SCHEMA,
    symbolic_vars=("x1..xs", "z1..zm"),
    lhs=CHU89_LHS,
    rhs=SumSide(_vec_indices(), _chu89_rhs),
    reference="Chu, generalization of Mohanty-Handa's identity (1989)",
    variables=_chu89_vars,
)

CHU89_ALT = IdentityDescriptor(
    name="chu89_alt",
    schema=CHU89_SCHEMA,
    symbolic_vars=("x1..xs", "z1..zm"),
    lhs=CHU89_LHS,
    rhs=SumSide(_vec_indices(), _chu89_alt_summand(lambda p: p["s"] - 1)),
    reference="Chu (1989) after interchanging the order of summation",
    variables=_chu89_vars,
)


# ── Multinomial ks2, Munarini and Simons ─────────────────────────────────────


def _newmulti_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, s, size = params["nvec"], params["s"], vec_size(index)
    return (
        multinomial_poly(size + s + shift, index)
        * multinomial_poly(v["x"] - size, vec_sub(n, index))
        * v.monomial(_z_names(params), index)
    )


def _newmulti_rhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, s, size = params["nvec"], params["s"], vec_size(index)
    return (
        multinomial_poly(size + s, index)
        * multinomial_poly(v["x"] + s + 1, vec_sub(n, index))
        * v.shifted_power(_z_names(params), index, -1)
    )


NEWMULTI = IdentityDescriptor(
    name="newmulti",
    schema=(NVEC, ParamSpec("s")),
    symbolic_vars=("x", "z1..zm"),
    lhs=SumSide(_vec_indices(), _newmulti_lhs),
    rhs=SumSide(_vec_indices(), _newmulti_rhs),
    reference="multinomial generalization of ks2",
    variables=lambda params: ("x", *_z_names(params)),
)


def _x_names(params: StructuralParams) -> tuple[str, ...]:
    return indexed("x", len(params["nvec"]))


def _multi_munarini_lhs(
    params: StructuralParams, index: tuple, shift: int, v: Variables
) -> Polynomial:
    n, alpha, beta = params["nvec"], params["alpha"], params["beta"]
    size = vec_size(index)
    return (
        sign(vec_size(n) - size)
        * multinomial_poly(beta - alpha + vec_size(n) + shift, vec_sub(n, index))
        * multinomial_poly(beta + size, index)
        * v.shifted_power(_x_names(params), index, 1)
    )


def _multi_munarini_rhs(
    params: StructuralParams, index: tuple, shift: int, v: Variables
) -> Polynomial:
    n, alpha, beta = params["nvec"], params["alpha"], params["beta"]
    return (
        multinomial_poly(alpha, vec_sub(n, index))
        * multinomial_poly(beta + vec_size(index), index)
        * v.monomial(_x_names(params), index)
    )


MULTI_MUNARINI = IdentityDescriptor(
    name="multi_munarini",
    schema=(NVEC, ParamSpec("alpha"), ParamSpec("beta")),
    symbolic_vars=("x1..xm",),
    lhs=SumSide(_vec_indices(), _multi_munarini_lhs),
    rhs=SumSide(_vec_indices(), _multi_munarini_rhs),
    reference="multinomial generalization of Munarini's identity",
    variables=_x_names,
)


def _multi_simons_lhs(
    params: StructuralParams, index: tuple, shift: int, v: Variables
) -> Polynomial:
    n, size = vec_size(params["nvec"]), vec_size(index)
    return (
        sign(n - size)
        * multinomial_poly(n + shift, vec_sub(params["nvec"], index))
        * multinomial_poly(n + size, index)
        * v.shifted_power(_x_names(params), index, 1)
    )


def _multi_simons_rhs(
    params: StructuralParams, index: tuple, shift: int, v: Variables
) -> Polynomial:
    n, size = vec_size(params["nvec"]), vec_size(index)
    return (
        multinomial_poly(n, vec_sub(params["nvec"], index))
        * multinomial_poly(n + size, index)
        * v.monomial(_x_names(params), index)
    )


MULTI_SIMONS = IdentityDescriptor(
    name="multi_simons",
    schema=(NVEC,),
    symbolic_vars=("x1..xm",),
    lhs=SumSide(_vec_indices(), _multi_simons_lhs),
    rhs=SumSide(_vec_indices(), _multi_simons_rhs),
    reference="multinomial generalization of Simons' identity",
    variables=_x_names,
)
