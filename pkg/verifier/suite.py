"""Grid expansion and suite execution."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Mapping, Sequence
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field

from catalog.registry import get_identity, validate_params
from catalog.schema import SchemaError, UnknownIdentityError
from config.grids import ControlCell
from config.settings import settings
from models.data import Mode, Mutation, ParamValue, Status, StructuralParams, VerificationResult
from utils.helpers import get_logger
from verifier.engine import (
    DegenerateParamsError,
    is_degenerate,
    negative_control,
    verify_numeric,
    verify_symbolic,
)

log = get_logger(__name__)

Cell = tuple[str, StructuralParams]


class GridError(ValueError):
    """The grid names an unknown identity or a range outside a schema."""


@dataclass(frozen=True)
class GridSpec:
    identities: tuple[str, ...]
    ranges: Mapping[str, Mapping[str, Sequence[ParamValue]]] = field(default_factory=dict)
    mode: Mode = Mode.SYMBOLIC
    trials: int = 20
    seed: int = 0
    jobs: int = 1
    mutation: Mutation | None = None
    fail_fast: bool = False
    budget: int | None = None


# ── Cells ────────────────────────────────────────────────────────────────────


def expand_cells(grid: GridSpec) -> list[Cell]:
    """Every schema-valid (identity, params) cell, sorted by name then parameters."""
    cells: list[Cell] = []
    for name in grid.identities:
        try:
            descriptor = get_identity(name)
        except UnknownIdentityError:
            raise GridError(f"unknown identity {name!r}") from None

        ranges = dict(grid.ranges.get(name, {}))
        declared = [spec.name for spec in descriptor.schema]
        missing = [p for p in declared if p not in ranges]
        if missing:
            raise GridError(f"{name}: no range for {', '.join(missing)}")
        extra = sorted(set(ranges) - set(declared))
        if extra:
            raise GridError(f"{name}: unknown parameter(s) {', '.join(extra)}")

        value_lists = []
        for spec in descriptor.schema:
            try:
                value_lists.append([spec.check(v) for v in ranges[spec.name]])
            except SchemaError as exc:
                raise GridError(f"{name}: {exc}") from None

        for combo in itertools.product(*value_lists):
            params = StructuralParams(tuple(zip(declared, combo)))
            if descriptor.constraint is not None and descriptor.constraint(params):
                continue
            cells.append((name, params))

    cells.sort(key=lambda cell: (cell[0], cell[1].sort_key()))
    return cells


# ── Execution ────────────────────────────────────────────────────────────────


def run_cell(
    name: str,
    params: StructuralParams,
    mode: Mode,
    seed: int,
    trials: int,
    mutation: Mutation | None,
    budget: int,
) -> VerificationResult:
    descriptor = get_identity(name)
    if mutation is not None:
        result = negative_control(
            descriptor, params, mutation, mode=mode, seed=seed, trials=trials, budget=budget
        )
    elif mode is Mode.SYMBOLIC:
        result = verify_symbolic(descriptor, params, budget=budget)
    else:
        result = verify_numeric(descriptor, params, seed, trials)
    result.seed = seed
    return result


def _runnable(cells: Iterable[Cell], mutation: Mutation | None) -> list[Cell]:
    if mutation is None:
        return list(cells)
    kept = []
    for name, params in cells:
        if is_degenerate(get_identity(name), params, mutation):
            log.warning("Skipping %s [%s]: single summand under %s",
                        name, params.render(), mutation.value)
            continue
        kept.append((name, params))
    return kept


def run_suite(grid: GridSpec) -> list[VerificationResult]:
    """Run every cell of *grid*; results come back in sorted cell order."""
    cells = _runnable(expand_cells(grid), grid.mutation)
    budget = settings.term_budget if grid.budget is None else grid.budget
    args = [
        (name, params, grid.mode, grid.seed, grid.trials, grid.mutation, budget)
        for name, params in cells
    ]
    log.info("Running %d cells (%s, jobs=%d)", len(cells), grid.mode.value, grid.jobs)

    results: list[VerificationResult | None] = [None] * len(args)
    if grid.jobs <= 1 or len(args) <= 1:
        for position, cell_args in enumerate(args):
            results[position] = run_cell(*cell_args)
            if grid.fail_fast and not results[position].ok:
                break
    else:
        with ProcessPoolExecutor(max_workers=grid.jobs) as pool:
            pending = {pool.submit(run_cell, *cell_args): i for i, cell_args in enumerate(args)}
            stop = False
            while pending and not stop:
                done, _ = wait(pending, return_when=FIRST_COMPLETED)
                for future in done:
                    position = pending.pop(future)
                    results[position] = future.result()
                    if grid.fail_fast and not results[position].ok:
                        stop = True
            for future in pending:
                future.cancel()

    finished = [r for r in results if r is not None]
    failures = sum(1 for r in finished if not r.ok)
    log.info("Finished %d/%d cells, %d not passing", len(finished), len(args), failures)
    return finished


def suite_passed(results: Iterable[VerificationResult]) -> bool:
    return all(result.ok for result in results)


def run_controls(
    controls: Iterable[ControlCell],
    *,
    mode: Mode = Mode.SYMBOLIC,
    seed: int = 0,
    trials: int = 20,
    budget: int | None = None,
) -> list[VerificationResult]:
    """Run the designated negative-control cells; each is expected to fail."""
    results = []
    for control in sorted(controls, key=lambda c: (c.identity, c.params.sort_key())):
        descriptor = get_identity(control.identity)
        params = validate_params(descriptor, control.params)
        try:
            result = negative_control(
                descriptor, params, control.mutation,
                mode=mode, seed=seed, trials=trials, budget=budget,
            )
        except DegenerateParamsError as exc:
            log.warning("Control %s skipped: %s", control.identity, exc)
            continue
        if result.status is not Status.FAIL:
            log.warning("Control %s [%s] returned %s",
                        control.identity, params.render(), result.status.value)
        results.append(result)
    return results
