"""Services package."""

from app.services.checks import run_checks
from app.services.figures import FIGURE_IDS, reproduce_figure, write_csv
from app.services.generating import GenFunService
from app.services.tables import TABLE_NAMES, build_table
from app.services.validation import (
    check_initial_data,
    check_special_point_constants,
    check_tail_coefficients,
)

__all__ = [
    "FIGURE_IDS",
    "GenFunService",
    "TABLE_NAMES",
    "build_table",
    "check_initial_data",
    "check_special_point_constants",
    "check_tail_coefficients",
    "reproduce_figure",
    "run_checks",
    "write_csv",
]
