"""Acceptance grid and negative-control cells loaded from root config.toml.

Parameter values share one grammar with the command line:
``"0..4"`` (inclusive range), ``"3"``, ``"(2,1)"`` and ``"(2,1),(1,1)"``.
In TOML a parameter may also be an integer, an array of integers or an array of
integer arrays (vectors).
"""

from __future__ import annotations

import re

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from pathlib import Path

from config.settings import settings
from models.data import Mutation, ParamValue, StructuralParams
from utils.helpers import read_text


class GrammarError(ValueError):
    """Malformed parameter value or rational literal."""


# ── Grammar ──────────────────────────────────────────────────────────────────

_INT = r"-?\d+"
_RANGE_RE = re.compile(rf"^\s*({_INT})\s*\.\.\s*({_INT})\s*$")
_SCALAR_RE = re.compile(rf"^\s*({_INT})\s*$")
_VECTOR = rf"\(\s*{_INT}(?:\s*,\s*{_INT})*\s*\)"
_VECTOR_LIST_RE = re.compile(rf"^\s*{_VECTOR}(?:\s*,\s*{_VECTOR})*\s*$")
_RATIONAL_RE = re.compile(rf"^\s*({_INT})(?:\s*/\s*(\d+))?\s*$")


def parse_values(text: str) -> list[ParamValue]:
    """Parse a range, a single integer or a list of vectors."""
    if match := _RANGE_RE.match(text):
        lo, hi = int(match.group(1)), int(match.group(2))
        if lo > hi:
            raise GrammarError(f"empty range {text.strip()!r}")
        return list(range(lo, hi + 1))
    if match := _SCALAR_RE.match(text):
        return [int(match.group(1))]
    if _VECTOR_LIST_RE.match(text):
        return [
            tuple(int(c) for c in body.split(","))
            for body in re.findall(r"\(([^()]*)\)", text)
        ]
    raise GrammarError(f"malformed value {text.strip()!r}")


def parse_rational(text: str) -> Fraction:
    """``"p"`` or ``"p/q"`` as an exact rational."""
    match = _RATIONAL_RE.match(text)
    if not match:
        raise GrammarError(f"malformed rational {text.strip()!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise GrammarError(f"zero denominator in {text.strip()!r}")
    return Fraction(numerator, denominator)


def resolve_values(raw: object) -> list[ParamValue]:
    """Value list from a TOML entry or a grammar string."""
    if isinstance(raw, bool):
        raise GrammarError(f"boolean is not a parameter value: {raw!r}")
    if isinstance(raw, int):
        return [raw]
    if isinstance(raw, str):
        return parse_values(raw)
    if isinstance(raw, list) and raw:
        if all(isinstance(v, int) and not isinstance(v, bool) for v in raw):
            return list(raw)
        if all(isinstance(v, list) and v and all(isinstance(c, int) for c in v) for v in raw):
            return [tuple(v) for v in raw]
    raise GrammarError(f"unsupported parameter value {raw!r}")


# ── Defaults ─────────────────────────────────────────────────────────────────


def _small_vectors(max_dim: int, max_size: int) -> list[list[int]]:
    """Every vector of dimension 1..max_dim with nonnegative entries summing to <= max_size."""
    return [
        list(v)
        for m in range(1, max_dim + 1)
        for v in product(range(max_size + 1), repeat=m)
        if sum(v) <= max_size
    ]


_VECTORS = _small_vectors(3, 4)

_DEFAULTS: dict[str, dict[str, dict[str, object]]] = {
    "grid": {
        "chu_vandermonde": {"n": "0..5"},
        "abel": {"n": "0..5"},
        "rothe": {"n": "0..5"},
        "jensen": {"n": "0..5"},
        "gould_jensen": {"n": "0..5"},
        "gould_variation": {"n": "0..2"},
        "stirling_sum": {"n": "0..8", "r": "0..8"},
        "chu_multisum": {"n": "0..4", "s": "1..4"},
        "jensen_alt": {"n": "0..5"},
        "shift_identity": {"n": "0..5"},
        "gkp": {"m": "0..4"},
        "chu_multisum_alt": {"n": "0..4", "s": "1..4"},
        "ks2": {"n": "0..4", "s": "0..3"},
        "gkp_full": {"m": "0..4", "n": "0..4"},
        "sun": {"m": "0..3", "n": "0..3", "a": "0..3"},
        "munarini": {"n": "0..4"},
        "simons": {"n": "0..6"},
        "cv_multi": {"nvec": _VECTORS},
        "stirling_multi": {"nvec": _VECTORS, "rvec": _VECTORS},
        "scalar_upper_composition": {"nvec": _VECTORS, "avec": _VECTORS},
        "compositions_lemma": {"nvec": _VECTORS, "s": "1..3"},
        "mohanty_handa": {"nvec": _VECTORS},
        "chu89": {"nvec": _VECTORS, "s": "1..3"},
        "chu89_alt": {"nvec": _VECTORS, "s": "1..3"},
        "newmulti": {"nvec": _VECTORS, "s": "1..3"},
        "multi_munarini": {"nvec": _VECTORS, "alpha": "0..4", "beta": "0..4"},
        "multi_simons": {"nvec": _VECTORS},
        "hou_zeng_q": {"m": "0..3", "n": "0..3", "a": "0..3"},
        "munarini_q": {"n": "0..3", "alpha": "0..3", "beta": "0..3"},
    },
    "controls": {
        "chu_vandermonde": {"n": 2},
        "abel": {"n": 2},
        "rothe": {"n": 2},
        "jensen": {"n": 2},
        "gould_jensen": {"n": 2},
        "stirling_sum": {"n": 2, "r": 1},
        "chu_multisum": {"n": 2, "s": 2},
        "jensen_alt": {"n": 2},
        "shift_identity": {"n": 2},
        "gkp": {"m": 2},
        "chu_multisum_alt": {"n": 2, "s": 2},
        "ks2": {"n": 2, "s": 1},
        "gkp_full": {"m": 3, "n": 1},
        "sun": {"m": 2, "n": 1, "a": 1},
        "munarini": {"n": 2},
        "simons": {"n": 2},
        "cv_multi": {"nvec": [1, 1]},
        "stirling_multi": {"nvec": [1, 1], "rvec": [0, 1]},
        "scalar_upper_composition": {"nvec": [1, 1], "avec": [0, 2]},
        "compositions_lemma": {"nvec": [1, 1], "s": 2},
        "mohanty_handa": {"nvec": [1, 1]},
        "chu89": {"nvec": [1, 1], "s": 2},
        "chu89_alt": {"nvec": [1, 1], "s": 2},
        "newmulti": {"nvec": [1, 1], "s": 1},
        "multi_munarini": {"nvec": [1, 1], "alpha": 1, "beta": 2},
        "multi_simons": {"nvec": [1, 1]},
        "hou_zeng_q": {"m": 2, "n": 1, "a": 1},
        "munarini_q": {"n": 2, "alpha": 1, "beta": 1},
    },
}


# ── Loaded configuration ─────────────────────────────────────────────────────


@dataclass(frozen=True)
class ControlCell:
    identity: str
    params: StructuralParams
    mutation: Mutation = Mutation.DROP_LAST_TERM


@dataclass(frozen=True)
class GridConfig:
    grids: dict[str, dict[str, tuple[ParamValue, ...]]] = field(default_factory=dict)
    controls: tuple[ControlCell, ...] = ()


def _load_config_toml(path: Path) -> dict[str, object]:
    if not path.exists():
        return {}

    try:
        data = tomllib.loads(read_text(path))
        return data if isinstance(data, dict) else {}
    except tomllib.TOMLDecodeError:
        # Fall back to defaults if the file is malformed.
        return {}


def _section_dict(raw: dict[str, object], section_name: str) -> dict[str, dict[str, object]]:
    section = raw.get(section_name, {})
    if not isinstance(section, dict):
        return {}
    return {str(key): dict(value) for key, value in section.items() if isinstance(value, dict)}


def _merge_section(
    defaults: dict[str, dict[str, object]], values: dict[str, dict[str, object]]
) -> dict[str, dict[str, object]]:
    merged = {name: dict(table) for name, table in defaults.items()}
    for name, table in values.items():
        merged.setdefault(name, {}).update(table)
    return merged


def _control_value(raw: object) -> ParamValue:
    if isinstance(raw, list):
        return tuple(raw)
    values = resolve_values(raw)
    if len(values) != 1:
        raise GrammarError(f"control cells take single values, got {raw!r}")
    return values[0]


def load_grid_config(path: Path | str | None = None) -> GridConfig:
    raw = _load_config_toml(Path(path) if path is not None else settings.grid_path)

    grid_data = _merge_section(_DEFAULTS["grid"], _section_dict(raw, "grid"))
    control_data = _merge_section(_DEFAULTS["controls"], _section_dict(raw, "controls"))

    grids = {
        name: {param: tuple(resolve_values(value)) for param, value in table.items()}
        for name, table in grid_data.items()
    }
    controls = []
    for name, table in control_data.items():
        table = dict(table)
        mutation = Mutation(table.pop("mutation", Mutation.DROP_LAST_TERM.value))
        params = StructuralParams.of(**{k: _control_value(v) for k, v in table.items()})
        controls.append(ControlCell(name, params, mutation))
    return GridConfig(grids=grids, controls=tuple(controls))
