"""Symbolic and randomized exact verification of one (identity, params) cell."""

from __future__ import annotations

import hashlib
import time
from fractions import Fraction
from itertools import islice

import numpy as np

from catalog.registry import (
    TermBudgetExceeded,
    build_side,
    evaluate_side,
    iter_indices,
    validate_params,
)
from catalog.schema import IdentityDescriptor, StatusFlag
from config.settings import settings
from kernel.polynomial import LAURENT_VARIABLE, ZERO, Polynomial, poly_eval
from models.data import Mode, Mutation, Side, Status, StructuralParams, VerificationResult
from utils.helpers import get_logger

log = get_logger(__name__)

NUMERATOR_BOUND = 9
DENOMINATOR_BOUND = 9
_NONZERO_NUMERATORS = np.array(
    [v for v in range(-NUMERATOR_BOUND, NUMERATOR_BOUND + 1) if v != 0], dtype=np.int64
)


class DegenerateParamsError(ValueError):
    """drop_last_term requested on a left side with a single summand."""


# ── Random points ────────────────────────────────────────────────────────────


def cell_rng(identity: str, params: StructuralParams, seed: int) -> np.random.Generator:
    """Generator seeded by (seed, identity, params) only."""
    digest = hashlib.sha256(f"{identity}|{params.render()}".encode()).digest()
    return np.random.default_rng([seed, int.from_bytes(digest[:8], "big")])


def draw_point(rng: np.random.Generator, variables: tuple[str, ...]) -> dict[str, Fraction]:
    point: dict[str, Fraction] = {}
    for name in variables:
        if name == LAURENT_VARIABLE:
            numerator = int(rng.choice(_NONZERO_NUMERATORS))
        else:
            numerator = int(rng.integers(-NUMERATOR_BOUND, NUMERATOR_BOUND + 1))
        denominator = int(rng.integers(1, DENOMINATOR_BOUND + 1))
        point[name] = Fraction(numerator, denominator)
    return point


# ── Verdicts ─────────────────────────────────────────────────────────────────


def _expected(descriptor: IdentityDescriptor, params: StructuralParams) -> Polynomial | None:
    """The difference LHS - RHS the cell should show, or None when any is acceptable."""
    if descriptor.flag is StatusFlag.KNOWN_DISCREPANT:
        return descriptor.expected_difference(params)
    return ZERO


def _status(
    descriptor: IdentityDescriptor,
    expected: Polynomial | None,
    agrees: bool,
    is_zero: bool,
    mutation: Mutation | None,
) -> Status:
    if mutation is not None:
        return Status.MUTATION_INCONCLUSIVE if agrees else Status.FAIL
    if descriptor.flag is StatusFlag.KNOWN_DISCREPANT:
        if expected is None:
            return Status.PASS if is_zero else Status.KNOWN_DISCREPANT_CONFIRMED
        return Status.KNOWN_DISCREPANT_CONFIRMED if agrees else Status.FAIL
    return Status.PASS if agrees else Status.FAIL


def _verify(
    descriptor: IdentityDescriptor,
    params: StructuralParams,
    mode: Mode,
    *,
    seed: int,
    trials: int,
    budget: int | None,
    mutation: Mutation | None,
) -> VerificationResult:
    params = validate_params(descriptor, params)
    result = VerificationResult(
        identity=descriptor.name, params=params, mode=mode, status=Status.PASS,
        seed=seed, mutation=mutation,
    )
    started = time.perf_counter()
    expected = _expected(descriptor, params)
    reference = expected if expected is not None else ZERO

    if mode is Mode.SYMBOLIC:
        try:
            lhs = build_side(descriptor, params, Side.LHS, budget=budget, mutation=mutation)
            rhs = build_side(descriptor, params, Side.RHS, budget=budget)
        except TermBudgetExceeded as exc:
            log.warning("Aborted %s [%s]: %s", descriptor.name, params.render(), exc)
            result.status = Status.ABORTED
            result.notes.append(str(exc))
            result.elapsed_ms = (time.perf_counter() - started) * 1000
            return result
        result.lhs_monomials, result.rhs_monomials = len(lhs), len(rhs)
        difference = lhs - rhs
        is_zero = not difference
        agrees = difference == reference
        if difference:
            result.difference = difference
    else:
        agrees, is_zero = _screen(descriptor, params, reference, seed, trials, mutation, result)

    result.status = _status(descriptor, expected, agrees, is_zero, mutation)
    if result.status is Status.PASS:
        result.witness = None
    result.elapsed_ms = (time.perf_counter() - started) * 1000
    log.debug("%s [%s] %s: %s", descriptor.name, params.render(), mode.value, result.status.value)
    return result


def _screen(
    descriptor: IdentityDescriptor,
    params: StructuralParams,
    reference: Polynomial,
    seed: int,
    trials: int,
    mutation: Mutation | None,
    result: VerificationResult,
) -> tuple[bool, bool]:
    """Evaluate both sums at random points; returns (agrees, every gap was zero).

    Each side is accumulated from summand values, never from an expanded polynomial.
    """
    rng = cell_rng(descriptor.name, params, seed)
    variables = descriptor.variables(params)
    is_zero = True
    for _ in range(trials):
        point = draw_point(rng, variables)
        gap = evaluate_side(
            descriptor, params, Side.LHS, point, mutation=mutation
        ) - evaluate_side(descriptor, params, Side.RHS, point)
        is_zero = is_zero and not gap
        if gap != poly_eval(reference, point):
            result.witness = point
            return False, is_zero
    return True, is_zero


# ── Public operations ────────────────────────────────────────────────────────


def verify_symbolic(
    descriptor: IdentityDescriptor,
    params: StructuralParams,
    *,
    budget: int | None = None,
) -> VerificationResult:
    """Compare the canonical expansions of both sides."""
    return _verify(
        descriptor, params, Mode.SYMBOLIC, seed=0, trials=0, budget=budget, mutation=None
    )


def verify_numeric(
    descriptor: IdentityDescriptor,
    params: StructuralParams,
    seed: int | None = None,
    trials: int | None = None,
) -> VerificationResult:
    """Compare the two sums at ``trials`` seeded random rational points.

    No side is expanded, so the term budget never aborts a numeric cell.
    """
    trials = settings.default_trials if trials is None else trials
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    seed = settings.default_seed if seed is None else seed
    return _verify(
        descriptor, params, Mode.NUMERIC, seed=seed, trials=trials, budget=None, mutation=None
    )


def is_degenerate(
    descriptor: IdentityDescriptor, params: StructuralParams, mutation: Mutation
) -> bool:
    if mutation is not Mutation.DROP_LAST_TERM:
        return False
    return len(list(islice(iter_indices(descriptor, params, Side.LHS), 2))) <= 1


def negative_control(
    descriptor: IdentityDescriptor,
    params: StructuralParams,
    mutation: Mutation,
    *,
    mode: Mode = Mode.SYMBOLIC,
    seed: int | None = None,
    trials: int | None = None,
    budget: int | None = None,
) -> VerificationResult:
    """Verify with a mutated left side; ``fail`` is the expected outcome.

    *budget* only bounds symbolic expansion.
    """
    params = validate_params(descriptor, params)
    if is_degenerate(descriptor, params, mutation):
        raise DegenerateParamsError(
            f"{descriptor.name} [{params.render()}]: "
            "drop_last_term needs at least two summands"
        )
    trials = settings.default_trials if trials is None else trials
    seed = settings.default_seed if seed is None else seed
    if mode is Mode.NUMERIC and trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    return _verify(
        descriptor, params, mode, seed=seed, trials=trials, budget=budget, mutation=mutation
    )
