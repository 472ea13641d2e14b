"""Core configuration and infrastructure."""

from app.core.config import Settings, get_settings, settings
from app.core.errors import (
    BudgetExceededError,
    CheckFailure,
    DomainError,
    FitError,
    KernelDimensionError,
    NotDyckPresentableError,
    ParityMismatchError,
    ToolkitError,
    UsageError,
)
from app.core.logging import setup_logging

__all__ = [
    "Settings",
    "get_settings",
    "settings",
    "setup_logging",
    "ToolkitError",
    "UsageError",
    "ParityMismatchError",
    "DomainError",
    "NotDyckPresentableError",
    "BudgetExceededError",
    "KernelDimensionError",
    "FitError",
    "CheckFailure",
]
