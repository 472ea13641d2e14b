"""fit: expansion coefficients extracted from exact data."""

import argparse

from app.cli.deps import KIND_CHOICES, open_sink, require
from app.core.errors import UsageError
from app.engine.fitter import BasisSpec, FitProtocol, coefficient_name
from app.schemas.fit import CSV_COLUMNS, FitSummary
from app.schemas.run import RunConfig
from app.services.figures import fit_with_rows, write_csv

NAME = "fit"
HELP = "fit the large-n expansion of log|F~| at one x"


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kind", choices=KIND_CHOICES, required=True)
    parser.add_argument("--x", required=True, help="exact rational, e.g. 1/2 or --x=-9/10")
    parser.add_argument("--n-min", type=int)
    parser.add_argument("--n-max", type=int)
    parser.add_argument("--parity", choices=("all", "even", "odd"))
    parser.add_argument("--basis", help='term count, or terms such as "n,log n,1,n^-1"')
    parser.add_argument("--window", type=int)
    parser.add_argument("--special-forms", action="store_true", default=None)


def resolve_basis(config: RunConfig) -> BasisSpec:
    if config.basis is None:
        return BasisSpec.default(config.kind, FitProtocol.default(config.kind).basis_terms)
    if config.basis.strip().isdigit():
        return BasisSpec.default(config.kind, int(config.basis))
    return BasisSpec.parse(config.basis)


def handle(config: RunConfig) -> int:
    require(config, "kind", "x")
    if config.format == "svg" and config.output is None:
        raise UsageError("--format svg needs --out")

    basis = resolve_basis(config)
    names = [coefficient_name(config.kind, term) for term in basis.terms]
    report, rows = fit_with_rows(
        config.kind,
        names,
        config.x,
        n_min=config.n_min,
        n_max=config.n_max,
        basis=basis,
        window=config.window,
        parity=config.parity,
        bits=config.bits,
        workers=config.jobs,
        use_special_forms=config.special_forms,
    )

    if config.format == "svg":
        from app.services.plotting import plot_fit_rows

        plot_fit_rows(rows, config.kind, config.output)
        config = config.model_copy(update={"output": None, "format": "txt"})

    with open_sink(config) as sink:
        match config.format:
            case "csv":
                write_csv(rows, sink, CSV_COLUMNS)
            case "json":
                summary = FitSummary(
                    geometry=config.kind.value,
                    x=str(config.x),
                    window=report.window,
                    basis=list(basis.terms),
                    excluded=report.excluded,
                    rows=rows,
                )
                sink.write(summary.model_dump_json(indent=2) + "\n")
            case _:
                sink.write(f"{config.kind.value} x={config.x} r={rows[0].r} branch={rows[0].branch}\n")
                sink.write(f"windows: {', '.join(f'{a}..{b}' for a, b in report.windows)}\n")
                for row in rows:
                    line = f"{row.coeff_name:>4} = {row.fitted}  (stability {row.stability})"
                    if row.deviation is not None:
                        line += f"  deviation {row.deviation}"
                    sink.write(line + "\n")
    return 0
