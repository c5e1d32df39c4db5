"""Report schemas and their JSON / TSV / text renderings."""

from __future__ import annotations

from collections.abc import Sequence
from enum import Enum

from pydantic import BaseModel, Field

from models.data import VerificationResult

TOOL_VERSION = "0.1.0"

TSV_COLUMNS = (
    "identity",
    "params",
    "mode",
    "status",
    "lhs_monomials",
    "rhs_monomials",
    "elapsed_ms",
)


class ReportFormat(str, Enum):
    JSON = "json"
    TSV = "tsv"
    TEXT = "text"


# ── Schemas ──────────────────────────────────────────────────────────────────


class CellReport(BaseModel):
    """One verified cell."""

    identity: str
    params: str = Field(..., description="Structural parameters, e.g. 'n=2, s=3'")
    mode: str
    status: str
    lhs_monomials: int | None = None
    rhs_monomials: int | None = None
    witness: dict[str, str] | None = Field(
        None, description="Assignment with unequal side values, rationals as 'p' or 'p/q'"
    )
    elapsed_ms: float | None = None


class SuiteReport(BaseModel):
    """A full verification run; cells are in sorted cell order."""

    tool_version: str = TOOL_VERSION
    seed: int
    cells: list[CellReport] = []


def cell_report(result: VerificationResult, *, timing: bool = True) -> CellReport:
    witness = None
    if result.witness is not None:
        witness = {name: str(value) for name, value in result.witness.items()}
    return CellReport(
        identity=result.identity,
        params=result.params.render(),
        mode=result.mode.value,
        status=result.status.value,
        lhs_monomials=result.lhs_monomials,
        rhs_monomials=result.rhs_monomials,
        witness=witness,
        elapsed_ms=round(result.elapsed_ms, 3) if timing else None,
    )


def build_report(
    results: Sequence[VerificationResult], seed: int, *, timing: bool = True
) -> SuiteReport:
    return SuiteReport(seed=seed, cells=[cell_report(r, timing=timing) for r in results])


# ── Renderings ───────────────────────────────────────────────────────────────


def render_json(report: SuiteReport) -> str:
    return report.model_dump_json(indent=2) + "\n"


def _tsv_field(value: object) -> str:
    return "" if value is None else str(value)


def render_tsv(report: SuiteReport) -> str:
    lines = ["\t".join(TSV_COLUMNS)]
    for cell in report.cells:
        row = cell.model_dump()
        lines.append("\t".join(_tsv_field(row[column]) for column in TSV_COLUMNS))
    return "\n".join(lines) + "\n"


def render_text(results: Sequence[VerificationResult], *, timing: bool = True) -> str:
    lines = []
    for result in results:
        line = (
            f"{result.identity} [{result.params.render()}] {result.mode.value}: "
            f"{result.status.value}"
        )
        if result.lhs_monomials is not None:
            line += f" (lhs {result.lhs_monomials}, rhs {result.rhs_monomials} monomials)"
        if timing:
            line += f" {result.elapsed_ms:.1f} ms"
        lines.append(line)
        if result.difference is not None:
            lines.append(f"  lhs - rhs = {result.difference}")
        if result.witness is not None:
            point = ", ".join(f"{k}={v}" for k, v in result.witness.items())
            lines.append(f"  witness: {point or '(no variables)'}")
        lines.extend(f"  note: {note}" for note in result.notes)
    passed = sum(1 for r in results if r.ok)
    lines.append(f"{passed}/{len(results)} cells passed")
    return "\n".join(lines) + "\n"


def render(
    results: Sequence[VerificationResult],
    seed: int,
    fmt: ReportFormat,
    *,
    timing: bool = True,
) -> str:
    if fmt is ReportFormat.TEXT:
        return render_text(results, timing=timing)
    report = build_report(results, seed, timing=timing)
    if fmt is ReportFormat.TSV:
        return render_tsv(report)
    return render_json(report)
