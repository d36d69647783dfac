"""Study configuration: validation, presets and the flat key = value file format."""

from __future__ import annotations

import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Optional

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .benchmark import Problem, get_problem
from .element import ElementDef, get_element
from .errors import ConfigurationError
from .quadrature import MAX_DEGREE
from .system import check_admissible

EXAMPLES = ("example1", "example2", "example3", "manufactured")
MODES = ("uniform", "adaptive")
SOLUTIONS = ("sin2", "zero")


@dataclass(frozen=True)
class StudyConfig:
    """Parameters of one convergence study.

    ``epsilon`` and ``alpha`` left as ``None`` take the example preset.
    ``max_level`` is the maximal number of levels (solves) in the history.
    ``solution`` only matters for ``example="manufactured"``.
    """

    example: str = "manufactured"
    element: str = "ntw"
    epsilon: Optional[float] = None
    alpha: Optional[int] = None
    mode: str = "adaptive"
    theta: float = 0.5
    max_ndof: int = 200_000
    max_level: int = 100
    quadrature_degree: int = 8
    seed: int = 0
    output: Optional[str] = None
    initial_n: int = 2
    solution: str = "sin2"
    full_residual: bool = False

    def __post_init__(self) -> None:
        if self.example not in EXAMPLES:
            raise ConfigurationError(f"example must be one of {EXAMPLES}, got {self.example!r}")
        if self.mode not in MODES:
            raise ConfigurationError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.solution not in SOLUTIONS:
            raise ConfigurationError(f"solution must be one of {SOLUTIONS}, got {self.solution!r}")
        try:
            get_element(self.element)
        except ValueError as exc:
            raise ConfigurationError(str(exc)) from None
        if not (0.0 < self.theta <= 1.0):
            raise ConfigurationError(f"theta must lie in (0, 1], got {self.theta}")
        if self.max_ndof < 1:
            raise ConfigurationError("max_ndof must be positive")
        if self.max_level < 1:
            raise ConfigurationError("max_level must be at least 1")
        if not (2 <= self.quadrature_degree <= MAX_DEGREE):
            raise ConfigurationError(f"quadrature_degree must lie in [2, {MAX_DEGREE}]")
        if self.initial_n < 1:
            raise ConfigurationError("initial_n must be positive")
        # resolves presets and runs the admissibility rules
        self.problem()

    @property
    def elem(self) -> ElementDef:
        return get_element(self.element)

    def problem(self) -> Problem:
        pb = get_problem(self.example, self.epsilon, self.alpha, self.solution)
        check_admissible(self.elem, pb.eps, pb.alpha)
        return pb

    def with_overrides(self, **kw: Any) -> StudyConfig:
        return replace(self, **{k: v for k, v in kw.items() if v is not None})


KEYS = tuple(f.name for f in fields(StudyConfig))
_INT_KEYS = {"alpha", "max_ndof", "max_level", "quadrature_degree", "seed", "initial_n"}
_FLOAT_KEYS = {"epsilon", "theta"}
_BOOL_KEYS = {"full_residual"}
_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def coerce(key: str, value: Any) -> Any:
    """Convert a raw file or command-line value to the field's type."""
    if key not in KEYS:
        raise ConfigurationError(f"unknown config key {key!r}")
    try:
        if key in _INT_KEYS:
            if isinstance(value, float) and not value.is_integer():
                raise ValueError(value)
            return int(value)
        if key in _FLOAT_KEYS:
            return float(value)
        if key in _BOOL_KEYS:
            if isinstance(value, bool):
                return value
            text = str(value).strip().lower()
            if text in _TRUE | _FALSE:
                return text in _TRUE
            raise ValueError(value)
        return str(value)
    except (TypeError, ValueError):
        raise ConfigurationError(f"bad value {value!r} for {key}") from None


def load_config_file(path: str | Path) -> dict[str, Any]:
    """Read a flat ``key = value`` file (a TOML subset; tables are rejected)."""
    try:
        with open(path, "rb") as fh:
            raw = tomllib.load(fh)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigurationError(f"{path}: {exc}") from None
    out = {}
    for key, value in raw.items():
        if isinstance(value, (dict, list)):
            raise ConfigurationError(f"{path}: key {key!r} must be a scalar")
        out[key] = coerce(key, value)
    return out


def build_config(path: str | Path | None = None, **overrides: Any) -> StudyConfig:
    """File values first, then non-None keyword overrides."""
    values: dict[str, Any] = {}
    if path is not None:
        values.update(load_config_file(path))
    values.update({k: coerce(k, v) for k, v in overrides.items() if v is not None})
    return StudyConfig(**values)
