"""constants: closed-form strip constants at the special points."""

import argparse

import mpmath

from app.asymptotics.constants import SPECIAL_POINTS, special_point_constants
from app.cli.commands.table import write_table
from app.cli.deps import KIND_CHOICES
from app.combinatorics.patterns import BoundaryKind
from app.core.errors import UsageError
from app.schemas.run import RunConfig
from app.schemas.table import Table

NAME = "constants"
HELP = "print (g_0, g_1, g_2) at x in {-1, 0, 1/2, 2}"

DIGITS = 30


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kind", choices=KIND_CHOICES, help="reflecting-even or reflecting-odd; both when omitted")
    parser.add_argument("--x")


def handle(config: RunConfig) -> int:
    if config.kind is not None and config.kind.periodic:
        raise UsageError(f"constants exist for the strip only, got {config.kind.value}")
    kinds = [config.kind] if config.kind else [BoundaryKind.REFLECTING_EVEN, BoundaryKind.REFLECTING_ODD]
    points = [config.x] if config.x is not None else list(SPECIAL_POINTS)

    table = Table(name="constants", columns=["kind", "x", "g0", "g1", "g2"])
    for kind in kinds:
        for x in points:
            triple = special_point_constants(kind, x, config.bits)
            table.rows.append([kind.value, str(x), *(mpmath.nstr(v, DIGITS) for v in triple)])
    write_table(table, config)
    return 0
