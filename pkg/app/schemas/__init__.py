"""Pydantic schemas for command input and output."""

from app.schemas.check import CheckOutcome, CheckSummary
from app.schemas.common import ErrorResponse
from app.schemas.fit import CSV_COLUMNS, CURVE_COLUMNS, CurveRow, FitRow, FitSummary
from app.schemas.genfun import CachedGenFun, GenFunPayload, GenFunResponse, GroundStateSummary
from app.schemas.run import RunConfig, parse_rational
from app.schemas.table import Table

__all__ = [
    "CheckOutcome",
    "CheckSummary",
    "ErrorResponse",
    "CSV_COLUMNS",
    "CURVE_COLUMNS",
    "CurveRow",
    "FitRow",
    "FitSummary",
    "CachedGenFun",
    "GenFunPayload",
    "GenFunResponse",
    "GroundStateSummary",
    "RunConfig",
    "parse_rational",
    "Table",
]
