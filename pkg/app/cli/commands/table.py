"""table: regenerate a reference table."""

import argparse
import csv
import logging

from app.cli.deps import get_service, open_sink
from app.core.errors import UsageError
from app.schemas.run import RunConfig
from app.schemas.table import Table
from app.services.tables import TABLE_NAMES, build_table

logger = logging.getLogger(__name__)

NAME = "table"
HELP = "regenerate a table next to its reference values"


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("name", choices=TABLE_NAMES)


def write_table(table: Table, config: RunConfig) -> None:
    with open_sink(config) as sink:
        match config.format:
            case "json":
                sink.write(table.model_dump_json(indent=2) + "\n")
            case "csv":
                writer = csv.writer(sink, lineterminator="\n")
                writer.writerow(table.columns)
                writer.writerows(table.rows)
            case "svg":
                raise UsageError(f"{config.command} has no svg output")
            case _:
                sink.write(table.as_text() + "\n")


def handle(config: RunConfig) -> int:
    table = build_table(config.name, get_service(config), config.bits, config.jobs)
    if not table.all_match:
        logger.warning("table %s differs from its reference values", table.name)
    write_table(table, config)
    return 0
