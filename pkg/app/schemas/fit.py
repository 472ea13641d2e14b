"""Fit result rows."""

from pydantic import BaseModel, Field

from app.engine.sampling import Parity


class FitRow(BaseModel):
    """One fitted coefficient at one x; the CSV columns follow field order."""

    x: str
    r: str
    branch: str
    coeff_name: str
    fitted: str
    target_low: str | None = None
    target_high: str | None = None
    deviation: str | None = None
    stability: str
    n_min: int = Field(..., ge=1)
    n_max: int = Field(..., ge=1)
    parity: Parity


CSV_COLUMNS: list[str] = list(FitRow.model_fields)


class FitSummary(BaseModel):
    """JSON output of the fit command."""

    geometry: str
    x: str
    window: int
    basis: list[str]
    excluded: list[int] = Field(default_factory=list)
    rows: list[FitRow]


class CurveRow(BaseModel):
    """Exact F~_L(x) at one point of a curve."""

    x: str
    n: int = Field(..., ge=1)
    value: str


CURVE_COLUMNS: list[str] = list(CurveRow.model_fields)
