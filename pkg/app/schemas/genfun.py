"""Generating function payloads."""

from datetime import datetime
from typing import Literal

from pydantic import BaseModel, Field, field_validator

from app.combinatorics.patterns import BoundaryKind
from app.exact.genfun import GenFun


def _check_integer(text: str) -> str:
    if not text.lstrip("-").isdigit():
        raise ValueError(f"not a decimal integer: {text!r}")
    return text


class GenFunPayload(BaseModel):
    """Coefficients (ascending powers) and Z as decimal strings."""

    kind: BoundaryKind
    size: int = Field(..., ge=1)
    coefficients: list[str]
    z: str

    @field_validator("coefficients")
    @classmethod
    def validate_coefficients(cls, v: list[str]) -> list[str]:
        return [_check_integer(c) for c in v]

    @field_validator("z")
    @classmethod
    def validate_z(cls, v: str) -> str:
        return _check_integer(v)

    @classmethod
    def from_genfun(cls, genfun: GenFun) -> "GenFunPayload":
        return cls(
            kind=genfun.kind,
            size=genfun.size,
            coefficients=[str(a) for a in genfun.coeffs],
            z=str(genfun.z),
        )

    def to_genfun(self) -> GenFun:
        return GenFun(
            kind=self.kind,
            size=self.size,
            coeffs=tuple(int(a) for a in self.coefficients),
            z=int(self.z),
        )


class CachedGenFun(BaseModel):
    """One cache entry per (kind, L)."""

    key: str
    payload: GenFunPayload
    tool_version: str
    created_at: datetime = Field(default_factory=datetime.now)


class GenFunResponse(BaseModel):
    """Output of the genfun and oracle commands."""

    kind: BoundaryKind
    size: int
    z: str
    coefficients: list[str]
    polynomial: str
    source: Literal["closed-form", "oracle"]


class GroundStateSummary(BaseModel):
    """Statistics of an exact ground state."""

    kind: BoundaryKind
    size: int
    dimension: int
    z: str
    min_component: str
    max_component: str
    genfun: GenFunResponse
