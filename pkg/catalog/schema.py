"""Descriptor types shared by every catalog module."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import reduce

from kernel.binomial import dot_product, shifted_power, vec_monomial
from kernel.polynomial import (
    LAURENT_VARIABLE,
    ONE,
    ZERO,
    KernelError,
    Polynomial,
    Scalar,
    as_polynomial,
    const,
    poly_eval,
    poly_mul,
    poly_pow,
    poly_sum,
    var,
)
from kernel.qseries import gauss_binom, q_pochhammer, q_power_exponent
from models.data import ParamValue, StructuralParams

Index = tuple


class SchemaError(ValueError):
    """Parameters do not fit an identity's schema."""


class IndexDomainError(ValueError):
    """A summand index lies outside the side's summation domain."""


class BuilderError(RuntimeError):
    """A side builder reached a state its guards should have excluded."""


class UnknownIdentityError(KeyError):
    pass


# ── Variables ────────────────────────────────────────────────────────────────


def _product(factors: Iterable[Polynomial]) -> Polynomial:
    return reduce(poly_mul, factors, ONE)


class Variables:
    """Source of the variables a summand is built from.

    ``Variables()`` hands out the variables themselves. ``Variables(point)`` hands out
    constants, so a summand built from it is its exact value at *point* and no
    multivariate product is ever formed.
    """

    __slots__ = ("_point",)

    def __init__(self, point: Mapping[str, Scalar] | None = None) -> None:
        self._point = None if point is None else {k: Fraction(v) for k, v in point.items()}

    @property
    def symbolic(self) -> bool:
        return self._point is None

    def _value(self, name: str) -> Fraction:
        try:
            return self._point[name]
        except KeyError:
            raise KernelError(f"no value assigned to variable {name!r}") from None

    def __getitem__(self, name: str) -> Polynomial:
        if self._point is None:
            return var(name)
        return const(self._value(name))

    def of(self, *names: str) -> tuple[Polynomial, ...]:
        return tuple(self[name] for name in names)

    # ── vector helpers ───────────────────────────────────────────────────

    def monomial(self, names: Sequence[str], k: Sequence[int]) -> Polynomial:
        """v_1^{k_1} ... v_m^{k_m}."""
        if self._point is None:
            return vec_monomial(names, k)
        _check_dims(names, k)
        return _product(poly_pow(self[name], e) for name, e in zip(names, k))

    def dot(self, names: Sequence[str], k: Sequence[int]) -> Polynomial:
        """k_1 v_1 + ... + k_m v_m."""
        if self._point is None:
            return dot_product(names, k)
        _check_dims(names, k)
        return poly_sum(c * self[name] for name, c in zip(names, k) if c)

    def shifted_power(self, names: Sequence[str], k: Sequence[int], delta: Scalar) -> Polynomial:
        """(v_1 + delta)^{k_1} ... (v_m + delta)^{k_m}."""
        if self._point is None:
            return shifted_power(names, k, delta)
        _check_dims(names, k)
        return _product(poly_pow(self[name] + delta, e) for name, e in zip(names, k))

    # ── q-series ─────────────────────────────────────────────────────────

    def q_power(self, e: int) -> Polynomial:
        if self._point is None:
            return q_power_exponent(e)
        return const(self._value(LAURENT_VARIABLE) ** e)

    def gauss(self, alpha: int, k: int) -> Polynomial:
        bracket = gauss_binom(alpha, k)
        if self._point is None:
            return bracket
        return const(poly_eval(bracket, {LAURENT_VARIABLE: self._value(LAURENT_VARIABLE)}))

    def pochhammer(self, a: Polynomial, n: int) -> Polynomial:
        """(a;q)_n."""
        if self._point is None:
            return q_pochhammer(a, n)
        if n < 0:
            raise ValueError(f"q-Pochhammer length must be nonnegative, got {n}")
        return _product(ONE - a * self.q_power(i) for i in range(n))


def _check_dims(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")


SYMBOLIC = Variables()

Summand = Callable[[StructuralParams, Index, int, Variables], Polynomial]


class ParamKind(str, Enum):
    SCALAR = "scalar"
    VECTOR = "vector"


class StatusFlag(str, Enum):
    NORMAL = "normal"
    KNOWN_DISCREPANT = "known_discrepant"


@dataclass(frozen=True)
class ParamSpec:
    name: str
    kind: ParamKind = ParamKind.SCALAR
    minimum: int | None = 0

    def describe(self) -> str:
        shape = f"{self.name}=(..)" if self.kind is ParamKind.VECTOR else self.name
        return shape if self.minimum is None else f"{shape}>={self.minimum}"

    def check(self, value: ParamValue) -> ParamValue:
        """Return the normalized value or raise SchemaError."""
        if self.kind is ParamKind.VECTOR:
            if not isinstance(value, (tuple, list)) or not value:
                raise SchemaError(f"{self.name} must be a nonempty integer vector, got {value!r}")
            value = tuple(value)
            components = value
        else:
            components = (value,)
        for c in components:
            if isinstance(c, bool) or not isinstance(c, int):
                raise SchemaError(f"{self.name} must hold integers, got {value!r}")
            if self.minimum is not None and c < self.minimum:
                raise SchemaError(f"{self.name} must be >= {self.minimum}, got {value!r}")
        return value


@dataclass(frozen=True)
class SumSide:
    """One side of an identity: a summation domain plus a summand builder.

    ``summand(params, index, shift, v)`` reads its variables from *v* and adds *shift* to
    the upper argument of the first binomial factor; shift is 0 except under the
    shift_upper mutation.
    """

    indices: Callable[[StructuralParams], Iterable[Index]]
    summand: Summand


@dataclass(frozen=True)
class IdentityDescriptor:
    name: str
    schema: tuple[ParamSpec, ...]
    symbolic_vars: tuple[str, ...]
    lhs: SumSide
    rhs: SumSide
    reference: str
    variables: Callable[[StructuralParams], tuple[str, ...]]
    constraint: Callable[[StructuralParams], str | None] | None = None
    flag: StatusFlag = StatusFlag.NORMAL
    expected_differences: tuple[tuple[StructuralParams, Polynomial], ...] = field(default=())

    def schema_summary(self) -> str:
        return ", ".join(spec.describe() for spec in self.schema) or "-"

    def expected_difference(self, params: StructuralParams) -> Polynomial | None:
        for fixture_params, difference in self.expected_differences:
            if fixture_params == params:
                return difference
        return None


# ── Builder helpers ──────────────────────────────────────────────────────────


def closed_form(build: Callable[[StructuralParams, Variables], Polynomial]) -> SumSide:
    """A side with the single index ``()``."""
    return SumSide(
        indices=lambda params: [()], summand=lambda params, index, shift, v: build(params, v)
    )


def index_range(name: str) -> Callable[[StructuralParams], Iterable[Index]]:
    """Indices (k,) for k = 0..params[name]."""
    return lambda params: ((k,) for k in range(params[name] + 1))


def sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def guarded_power(base: Polynomial, exponent: int) -> Polynomial:
    if exponent < 0:
        raise BuilderError(f"negative power {exponent} reached with a nonzero coefficient")
    return poly_pow(as_polynomial(base), exponent)


def indexed(prefix: str, count: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(1, count + 1))


def fixed_vars(*names: str) -> Callable[[StructuralParams], tuple[str, ...]]:
    ordered = tuple(names)
    return lambda params: ordered


__all__ = [
    "ZERO",
    "BuilderError",
    "IdentityDescriptor",
    "Index",
    "IndexDomainError",
    "ParamKind",
    "ParamSpec",
    "SchemaError",
    "SYMBOLIC",
    "StatusFlag",
    "SumSide",
    "UnknownIdentityError",
    "Variables",
    "closed_form",
    "fixed_vars",
    "guarded_power",
    "index_range",
    "indexed",
    "sign",
]
