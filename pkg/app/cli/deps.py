"""Command dependencies."""

import argparse
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from typing import TextIO

from app.combinatorics.patterns import BoundaryKind
from app.core.errors import UsageError
from app.memory.genfun_cache import GenFunCache
from app.schemas.run import RunConfig
from app.services.generating import GenFunService

KIND_CHOICES = [kind.value for kind in BoundaryKind]

# argparse destinations that are not RunConfig fields
_PARSER_ONLY = {"handler", "log_level", "no_cache"}


def build_config(args: argparse.Namespace) -> RunConfig:
    """Validate the parsed flags; unset flags keep the settings defaults."""
    values = {key: value for key, value in vars(args).items() if key not in _PARSER_ONLY and value is not None}
    if getattr(args, "no_cache", False):
        values["use_cache"] = False
    return RunConfig(**values)


def get_cache(config: RunConfig) -> GenFunCache | None:
    return GenFunCache(config.cache_dir) if config.use_cache else None


def get_service(config: RunConfig) -> GenFunService:
    return GenFunService(cache=get_cache(config), max_sites=config.max_sites)


def require(config: RunConfig, *fields: str) -> None:
    """Raise a usage error naming the first missing flag."""
    for field in fields:
        if getattr(config, field) is None:
            raise UsageError(f"{config.command} needs --{field.replace('_', '-')}")


@contextmanager
def open_sink(config: RunConfig) -> Iterator[TextIO]:
    """The --out file, or stdout when none is given."""
    if config.output is None:
        yield sys.stdout
        return
    config.output.parent.mkdir(parents=True, exist_ok=True)
    with config.output.open("w", encoding="utf-8", newline="") as handle:
        yield handle
