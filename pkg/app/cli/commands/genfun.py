"""genfun: exact Z_L F_L(x) of one system."""

import argparse
import csv

from app.cli.deps import KIND_CHOICES, get_service, open_sink, require
from app.schemas.run import RunConfig

NAME = "genfun"
HELP = "print Z_L F_L(x) with exact integer coefficients"


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kind", choices=KIND_CHOICES, required=True)
    parser.add_argument("--size", "-L", type=int, required=True)


def handle(config: RunConfig) -> int:
    require(config, "kind", "size")
    response = get_service(config).genfun_response(config.kind, config.size)
    with open_sink(config) as sink:
        match config.format:
            case "json":
                sink.write(response.model_dump_json(indent=2) + "\n")
            case "csv":
                writer = csv.writer(sink, lineterminator="\n")
                writer.writerow(["k", "coefficient"])
                writer.writerows(enumerate(response.coefficients))
            case _:
                sink.write(f"{config.kind.value} L={config.size}\n")
                sink.write(f"Z_L F_L(x) = {response.polynomial}\n")
                sink.write(f"Z_L = {response.z}\n")
                sink.write(f"source: {response.source}\n")
    return 0
