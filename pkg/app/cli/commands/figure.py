"""figure: data and plots behind the coefficient figures."""

import argparse
import json

from app.cli.deps import open_sink
from app.core.errors import UsageError
from app.schemas.fit import CSV_COLUMNS, CURVE_COLUMNS
from app.schemas.run import RunConfig
from app.services.figures import CURVES, FIGURE_IDS, FIGURES, reproduce_figure, write_csv

NAME = "figure"
HELP = "reproduce the fitted-coefficient figures as CSV or SVG"


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("name", choices=FIGURE_IDS)
    parser.add_argument("--grid", help="comma separated x values, e.g. --grid=-2,-9/10,0,1/2")


def handle(config: RunConfig) -> int:
    if config.format == "svg" and config.output is None:
        raise UsageError("--format svg needs --out")
    rows = reproduce_figure(config.name, config.grid, bits=config.bits, workers=config.jobs)
    curves = config.name == CURVES

    if config.format == "svg":
        from app.services.plotting import plot_curves, plot_fit_rows

        if curves:
            plot_curves(rows, config.output)
        else:
            plot_fit_rows(rows, FIGURES[config.name][0], config.output)
        return 0

    with open_sink(config) as sink:
        if config.format == "json":
            sink.write(json.dumps([row.model_dump(mode="json") for row in rows], indent=2) + "\n")
        else:
            write_csv(rows, sink, CURVE_COLUMNS if curves else CSV_COLUMNS)
    return 0
