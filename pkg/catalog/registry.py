"""The identity catalog: lookup, parameter validation and side construction."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from fractions import Fraction
from itertools import pairwise

from catalog.chu import CHU_MULTISUM, CHU_MULTISUM_ALT, GKP_FULL, KS2, MUNARINI, SIMONS, SUN
from catalog.classical import (
    ABEL,
    CHU_VANDERMONDE,
    GKP,
    GOULD_JENSEN,
    GOULD_VARIATION,
    JENSEN,
    JENSEN_ALT,
    ROTHE,
    SHIFT_IDENTITY,
    STIRLING_SUM,
)
from catalog.multinomial import (
    CHU89,
    CHU89_ALT,
    COMPOSITIONS_LEMMA,
    CV_MULTI,
    MOHANTY_HANDA,
    MULTI_MUNARINI,
    MULTI_SIMONS,
    NEWMULTI,
    SCALAR_UPPER_COMPOSITION,
    STIRLING_MULTI,
)
from catalog.qanalogues import HOU_ZENG_Q, MUNARINI_Q
from catalog.schema import (
    SYMBOLIC,
    IdentityDescriptor,
    Index,
    IndexDomainError,
    SchemaError,
    SumSide,
    UnknownIdentityError,
    Variables,
)
from config.settings import settings
from kernel.polynomial import ZERO, Polynomial, Scalar
from models.data import Mutation, ParamValue, Side, StructuralParams
from utils.helpers import get_logger

log = get_logger(__name__)


class TermBudgetExceeded(RuntimeError):
    """A side grew past the configured monomial budget."""

    def __init__(self, identity: str, side: Side, size: int, budget: int) -> None:
        super().__init__(
            f"{identity} {side.value}: {size} monomials exceeds the budget of {budget}"
        )
        self.identity = identity
        self.side = side
        self.size = size
        self.budget = budget


CATALOG: tuple[IdentityDescriptor, ...] = (
    CHU_VANDERMONDE,
    ABEL,
    ROTHE,
    JENSEN,
    GOULD_JENSEN,
    GOULD_VARIATION,
    STIRLING_SUM,
    CHU_MULTISUM,
    JENSEN_ALT,
    SHIFT_IDENTITY,
    GKP,
    CHU_MULTISUM_ALT,
    KS2,
    GKP_FULL,
    SUN,
    MUNARINI,
    SIMONS,
    CV_MULTI,
    STIRLING_MULTI,
    SCALAR_UPPER_COMPOSITION,
    COMPOSITIONS_LEMMA,
    MOHANTY_HANDA,
    CHU89,
    CHU89_ALT,
    NEWMULTI,
    MULTI_MUNARINI,
    MULTI_SIMONS,
    HOU_ZENG_Q,
    MUNARINI_Q,
)

_BY_NAME = {descriptor.name: descriptor for descriptor in CATALOG}


def list_identities() -> list[IdentityDescriptor]:
    return list(CATALOG)


def get_identity(name: str) -> IdentityDescriptor:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise UnknownIdentityError(name) from None


# ── Parameters ───────────────────────────────────────────────────────────────


def validate_params(
    descriptor: IdentityDescriptor,
    params: StructuralParams | Mapping[str, ParamValue],
) -> StructuralParams:
    """Check *params* against the schema and return them in schema order."""
    values = params.as_dict() if isinstance(params, StructuralParams) else dict(params)
    declared = [spec.name for spec in descriptor.schema]

    missing = [name for name in declared if name not in values]
    if missing:
        raise SchemaError(f"{descriptor.name}: missing parameter(s) {', '.join(missing)}")
    extra = sorted(set(values) - set(declared))
    if extra:
        raise SchemaError(f"{descriptor.name}: unknown parameter(s) {', '.join(extra)}")

    ordered = StructuralParams(
        tuple((spec.name, spec.check(values[spec.name])) for spec in descriptor.schema)
    )
    if descriptor.constraint is not None:
        problem = descriptor.constraint(ordered)
        if problem:
            raise SchemaError(f"{descriptor.name}: {problem} ({ordered.render()})")
    return ordered


def _side(descriptor: IdentityDescriptor, side: Side) -> SumSide:
    return descriptor.lhs if side is Side.LHS else descriptor.rhs


def iter_indices(
    descriptor: IdentityDescriptor, params: StructuralParams, side: Side
) -> Iterator[Index]:
    """Lazy walk over the summation domain of *side*, in the side's own order."""
    params = validate_params(descriptor, params)
    return iter(_side(descriptor, side).indices(params))


def side_indices(
    descriptor: IdentityDescriptor, params: StructuralParams, side: Side
) -> list[Index]:
    return list(iter_indices(descriptor, params, side))


def _summation(
    sum_side: SumSide, params: StructuralParams, side: Side, mutation: Mutation | None
) -> tuple[Iterator[Index], int]:
    """Indices to visit and the upper-argument shift, after applying *mutation*."""
    indices = iter(sum_side.indices(params))
    if side is not Side.LHS or mutation is None:
        return indices, 0
    if mutation is Mutation.SHIFT_UPPER:
        return indices, 1
    # hold back one index so the last is never visited
    return (current for current, _ in pairwise(indices)), 0


# ── Construction ─────────────────────────────────────────────────────────────


def term(
    descriptor: IdentityDescriptor,
    params: StructuralParams,
    index: tuple | int,
    side: Side,
) -> Polynomial:
    """The single summand of *side* at *index*; a bare int stands for ``(k,)``."""
    params = validate_params(descriptor, params)
    if isinstance(index, int):
        index = (index,)
    sum_side = _side(descriptor, side)
    if not any(candidate == index for candidate in sum_side.indices(params)):
        raise IndexDomainError(
            f"{descriptor.name} {side.value}: index {index} outside the summation domain"
        )
    return sum_side.summand(params, index, 0, SYMBOLIC)


def build_side(
    descriptor: IdentityDescriptor,
    params: StructuralParams,
    side: Side,
    *,
    budget: int | None = None,
    mutation: Mutation | None = None,
) -> Polynomial:
    """Expand one side exactly.

    *mutation* only affects the left side. The running sum is checked against *budget*
    (default ``settings.term_budget``) after every summand.
    """
    params = validate_params(descriptor, params)
    limit = settings.term_budget if budget is None else budget
    sum_side = _side(descriptor, side)
    indices, shift = _summation(sum_side, params, side, mutation)

    total, count = ZERO, 0
    for index in indices:
        total = total + sum_side.summand(params, index, shift, SYMBOLIC)
        count += 1
        if len(total) > limit:
            raise TermBudgetExceeded(descriptor.name, side, len(total), limit)
    log.debug(
        "%s %s [%s]: %d summands, %d monomials",
        descriptor.name, side.value, params.render(), count, len(total),
    )
    return total


def evaluate_side(
    descriptor: IdentityDescriptor,
    params: StructuralParams,
    side: Side,
    point: Mapping[str, Scalar],
    *,
    mutation: Mutation | None = None,
) -> Fraction:
    """Exact value of one side at *point*, accumulated summand by summand.

    Summands are built from constants, so no polynomial is expanded and the term budget
    does not apply.
    """
    params = validate_params(descriptor, params)
    sum_side = _side(descriptor, side)
    indices, shift = _summation(sum_side, params, side, mutation)
    at = Variables(point)
    total = Fraction(0)
    for index in indices:
        total += sum_side.summand(params, index, shift, at).constant_value()
    return total
