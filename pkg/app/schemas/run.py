"""Validated command configuration."""

from fractions import Fraction
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.combinatorics.patterns import BoundaryKind
from app.core.config import settings
from app.engine.sampling import Parity

OutputFormat = Literal["txt", "json", "csv", "svg"]


def parse_rational(value: object) -> Fraction:
    """
    Exact rational from "p/q", an integer or a decimal string.

    Decimals get a power-of-ten denominator; binary floats are refused.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"pass rationals as strings, not {type(value).__name__}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational {value!r}") from exc
    raise ValueError(f"cannot read a rational from {value!r}")


class RunConfig(BaseModel):
    """Command-line flags merged over the settings."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    command: str
    kind: BoundaryKind | None = None
    size: int | None = Field(default=None, ge=1)
    n_min: int | None = Field(default=None, ge=1)
    n_max: int | None = Field(default=None, ge=1)
    x: Fraction | None = None
    grid: list[Fraction] = Field(default_factory=list)
    bits: int = Field(default_factory=lambda: settings.precision_bits, ge=53, le=1 << 20)
    parity: Parity | None = None
    basis: str | None = None
    window: int | None = Field(default=None, ge=2)
    output: Path | None = None
    cache_dir: Path = Field(default_factory=lambda: settings.cache_dir)
    use_cache: bool = Field(default_factory=lambda: settings.cache_enabled)
    jobs: int = Field(default_factory=lambda: settings.workers, ge=1)
    max_sites: int = Field(default_factory=lambda: settings.max_sites, ge=2, le=24)
    format: OutputFormat = "txt"
    strict_conjectures: bool = False
    special_forms: bool = False
    scope: Literal["tables", "identities", "lemma", "ode", "all"] = "all"
    name: str | None = None
    action: Literal["stats", "clear"] | None = None

    @field_validator("x", mode="before")
    @classmethod
    def validate_x(cls, v: object) -> Fraction | None:
        return None if v is None else parse_rational(v)

    @field_validator("grid", mode="before")
    @classmethod
    def validate_grid(cls, v: object) -> list[Fraction]:
        if v is None:
            return []
        if isinstance(v, str):
            v = [part for part in v.split(",") if part.strip()]
        return [parse_rational(item) for item in v]

    @field_validator("basis")
    @classmethod
    def validate_basis(cls, v: str | None) -> str | None:
        if v is not None and not v.strip():
            raise ValueError("basis must not be empty")
        return v

    @model_validator(mode="after")
    def validate_range(self) -> "RunConfig":
        if self.n_min is not None and self.n_max is not None and self.n_min > self.n_max:
            raise ValueError(f"n-min {self.n_min} exceeds n-max {self.n_max}")
        return self
