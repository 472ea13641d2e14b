"""oracle: ground state of the loop-model Hamiltonian."""

import argparse

from app.cli.deps import KIND_CHOICES, get_service, open_sink, require
from app.schemas.run import RunConfig

NAME = "oracle"
HELP = "solve the ground state exactly and report its statistics"


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kind", choices=KIND_CHOICES, required=True)
    parser.add_argument("--size", "-L", type=int, required=True)


def handle(config: RunConfig) -> int:
    require(config, "kind", "size")
    summary = get_service(config).oracle_summary(config.kind, config.size)
    with open_sink(config) as sink:
        if config.format == "json":
            sink.write(summary.model_dump_json(indent=2) + "\n")
            return 0
        sink.write(f"{summary.kind.value} L={summary.size}\n")
        sink.write(f"dimension: {summary.dimension}\n")
        sink.write(f"Z_L = {summary.z}\n")
        sink.write(f"components: min {summary.min_component}, max {summary.max_component}\n")
        sink.write(f"Z_L F_L(x) = {summary.genfun.polynomial}\n")
    return 0
