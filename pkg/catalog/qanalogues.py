"""q-analogues of Sun's and Munarini's identities, built from Gaussian binomials."""

from __future__ import annotations

from math import comb

from catalog.schema import (
    ZERO,
    BuilderError,
    IdentityDescriptor,
    ParamSpec,
    SumSide,
    Variables,
    fixed_vars,
    guarded_power,
    index_range,
    sign,
)
from kernel.polynomial import Polynomial
from models.data import StructuralParams


def _pochhammer(v: Variables, base: Polynomial, length: int) -> Polynomial:
    if length < 0:
        raise BuilderError(f"q-Pochhammer of negative length {length} with a nonzero coefficient")
    return v.pochhammer(base, length)


def _hz_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    m, n, a, (k,) = params["m"], params["n"], params["a"], index
    bracket = v.gauss(n + k, a)
    if not bracket:
        return ZERO
    return (
        sign(m - k)
        * v.gauss(m + shift, k)
        * bracket
        * _pochhammer(v, -v["x"] * v.q_power(a), n + k - a)
        * v.q_power(comb(k + 1, 2) - m * k + comb(a, 2))
    )


def _hz_rhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    m, n, a, (k,) = params["m"], params["n"], params["a"], index
    bracket = v.gauss(m + k, a)
    if not bracket:
        return ZERO
    return (
        v.gauss(n, k)
        * bracket
        * guarded_power(v["x"], m + k - a)
        * v.q_power(m * n + comb(k, 2))
    )


HOU_ZENG_Q = IdentityDescriptor(
    name="hou_zeng_q",
    schema=(ParamSpec("m"), ParamSpec("n"), ParamSpec("a")),
    symbolic_vars=("q", "x"),
    lhs=SumSide(index_range("m"), _hz_lhs),
    rhs=SumSide(index_range("n"), _hz_rhs),
    reference="Hou and Zeng, q-analogue of Sun's identity",
    variables=fixed_vars("q", "x"),
)


def _munarini_q_lhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, alpha, beta, (k,) = params["n"], params["alpha"], params["beta"], index
    return (
        sign(n - k)
        * v.gauss(beta - alpha + n + shift, n - k)
        * v.gauss(beta + k, k)
        * v.q_power(comb(n - k, 2) - comb(n, 2))
        * _pochhammer(v, -v["x"], k)
    )


def _munarini_q_rhs(params: StructuralParams, index: tuple, shift: int, v: Variables) -> Polynomial:
    n, alpha, beta, (k,) = params["n"], params["alpha"], params["beta"], index
    return (
        v.gauss(alpha, n - k)
        * v.gauss(beta + k, k)
        * v.q_power(comb(n - k + 1, 2) + (beta - alpha) * (n - k))
        * guarded_power(v["x"], k)
    )


MUNARINI_Q = IdentityDescriptor(
    name="munarini_q",
    schema=(ParamSpec("n"), ParamSpec("alpha"), ParamSpec("beta")),
    symbolic_vars=("q", "x"),
    lhs=SumSide(index_range("n"), _munarini_q_lhs),
    rhs=SumSide(index_range("n"), _munarini_q_rhs),
    reference="q-analogue of Munarini's identity, from Hou and Zeng's q-Sun identity",
    variables=fixed_vars("q", "x"),
)
