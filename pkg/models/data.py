"""Shared data models used across catalog, verifier and CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Union

from kernel.polynomial import Polynomial

ParamValue = Union[int, tuple[int, ...]]


# ── Enums ────────────────────────────────────────────────────────────────────


class Side(str, Enum):
    LHS = "lhs"
    RHS = "rhs"


class Mode(str, Enum):
    SYMBOLIC = "symbolic"
    NUMERIC = "numeric"


class Mutation(str, Enum):
    SHIFT_UPPER = "shift_upper"
    DROP_LAST_TERM = "drop_last_term"


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    KNOWN_DISCREPANT_CONFIRMED = "known_discrepant_confirmed"
    MUTATION_INCONCLUSIVE = "mutation_inconclusive"
    ABORTED = "aborted"


# ── Structural parameters ────────────────────────────────────────────────────


def format_value(value: ParamValue) -> str:
    if isinstance(value, tuple):
        return "(" + ",".join(str(c) for c in value) + ")"
    return str(value)


@dataclass(frozen=True)
class StructuralParams:
    """Integer parameters fixing the shape of a sum, e.g. n=2, s=3, nvec=(1,1)."""

    items: tuple[tuple[str, ParamValue], ...] = ()

    @classmethod
    def of(cls, **values: ParamValue) -> StructuralParams:
        return cls(
            tuple((k, tuple(v) if isinstance(v, (list, tuple)) else v) for k, v in values.items())
        )

    def __getitem__(self, name: str) -> ParamValue:
        for key, value in self.items:
            if key == name:
                return value
        raise KeyError(name)

    def __contains__(self, name: object) -> bool:
        return any(key == name for key, _ in self.items)

    def get(self, name: str, default: ParamValue | None = None) -> ParamValue | None:
        return self[name] if name in self else default

    def names(self) -> tuple[str, ...]:
        return tuple(key for key, _ in self.items)

    def as_dict(self) -> dict[str, ParamValue]:
        return dict(self.items)

    def replace(self, **values: ParamValue) -> StructuralParams:
        merged = self.as_dict()
        merged.update(values)
        return StructuralParams.of(**merged)

    def sort_key(self) -> tuple:
        return tuple(value for _, value in self.items)

    def render(self) -> str:
        return ", ".join(f"{key}={format_value(value)}" for key, value in self.items)

    def __str__(self) -> str:
        return self.render()


# ── Verification ─────────────────────────────────────────────────────────────


@dataclass
class VerificationResult:
    """Verdict for one (identity, params) cell."""

    identity: str
    params: StructuralParams
    mode: Mode
    status: Status
    lhs_monomials: int | None = None
    rhs_monomials: int | None = None
    witness: dict[str, Fraction] | None = None
    elapsed_ms: float = 0.0
    seed: int = 0
    difference: Polynomial | None = None
    mutation: Mutation | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status in (Status.PASS, Status.KNOWN_DISCREPANT_CONFIRMED)
