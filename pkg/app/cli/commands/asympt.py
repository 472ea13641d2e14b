"""asympt: closed-form expansion coefficients at one x."""

import argparse
import json

import mpmath

from app.asymptotics.coefficients import AsymptoticModel, affleck_ludwig_g, epsilon_sign
from app.asymptotics.params import crossover_side, r_of_x
from app.cli.deps import KIND_CHOICES, open_sink, require
from app.schemas.run import RunConfig

NAME = "asympt"
HELP = "print the closed-form coefficients f_0, f_1, f_2 or g_0, g_1"

DIGITS = 30


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kind", choices=KIND_CHOICES, required=True)
    parser.add_argument("--x", required=True)
    parser.add_argument("--size", "-L", type=int, help="also report the sign at this size")


def _sign_text(config: RunConfig) -> str:
    if config.size is not None:
        n = config.kind.half_size(config.size)
        return str(epsilon_sign(config.kind, n, config.x))
    if config.kind.periodic:
        return "(-1)^(n+1)" if crossover_side(config.x) < 0 else "+1"
    return "sign of the exact value; pass --size"


def handle(config: RunConfig) -> int:
    require(config, "kind", "x")
    model = AsymptoticModel(config.kind, config.bits)
    point = r_of_x(config.x, config.bits)
    count = 3 if config.kind.periodic else 2
    values = {name: mpmath.nstr(model.coefficient(j, config.x), DIGITS) for j, name in enumerate(model.names[:count])}
    record = {
        "kind": config.kind.value,
        "x": str(config.x),
        "r": mpmath.nstr(point.r, DIGITS),
        "branch": point.branch.value,
        "epsilon": _sign_text(config),
        **values,
    }
    if crossover_side(config.x) > 0:
        record["g_AL"] = mpmath.nstr(affleck_ludwig_g(config.x, config.bits), DIGITS)

    with open_sink(config) as sink:
        if config.format == "json":
            sink.write(json.dumps(record, indent=2) + "\n")
        else:
            for key, value in record.items():
                sink.write(f"{key}: {value}\n")
    return 0
