"""
Application Configuration

Centralized settings management using Pydantic Settings.
Supports environment variables and .env file configuration.
"""

import os
from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings with environment variable support."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = "boundary-entropy"
    app_version: str = "1.0.0"
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"

    # Cache
    cache_dir: Path = Path(".cache/boundary-entropy")
    cache_enabled: bool = True

    # Exact layer budgets
    max_sites: int = Field(default=14, ge=2)  # Largest L for the oracle
    factorial_bound: int = Field(default=1200, ge=10)

    # High precision
    precision_bits: int = Field(default=512, ge=53)

    # Worker pool
    workers: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1)

    # Fit protocol
    crossover_window: float = 0.05  # Half-width around x = -1
    periodic_n_min: int = 101
    periodic_n_max: int = 200
    periodic_basis_terms: int = 6
    reflecting_n_min: int = 50
    reflecting_n_max: int = 100
    reflecting_basis_terms: int = 5


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


settings = get_settings()
