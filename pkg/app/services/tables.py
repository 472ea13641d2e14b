"""
Table Regeneration

Rebuilds the small-size generating-function tables, the strip constants at
the special points and the cylinder tail from scratch, next to the
reference values.
"""

import logging
from fractions import Fraction

import mpmath

from app.asymptotics.constants import SPECIAL_POINTS
from app.asymptotics.params import r_of_x
from app.asymptotics.precision import context
from app.combinatorics.patterns import BoundaryKind
from app.core.errors import UsageError
from app.reference.small_sizes import SMALL_SIZES
from app.schemas.table import Table
from app.services.generating import GenFunService
from app.services.validation import CONSTANTS_TOLERANCE, check_special_point_constants, check_tail_coefficients

logger = logging.getLogger(__name__)

SMALL_SIZE_TABLES: dict[str, BoundaryKind] = {
    "cylinder-even": BoundaryKind.PERIODIC_EVEN,
    "cylinder-odd": BoundaryKind.PERIODIC_ODD,
    "strip-even": BoundaryKind.REFLECTING_EVEN,
    "strip-odd": BoundaryKind.REFLECTING_ODD,
}
CONSTANT_TABLES: dict[str, BoundaryKind] = {
    "strip-even-constants": BoundaryKind.REFLECTING_EVEN,
    "strip-odd-constants": BoundaryKind.REFLECTING_ODD,
}
TAIL_TABLE = "cylinder-tail"
TABLE_NAMES = (*SMALL_SIZE_TABLES, *CONSTANT_TABLES, TAIL_TABLE)

# r = 1/2, 1, 3/2, 2
TAIL_GRID = (Fraction(2), Fraction(1), Fraction(1, 2), Fraction(0))
TAIL_TOLERANCE = 1e-3
TAIL_CHECKED = 4  # f_5 and beyond are listed without a verdict

DIGITS = 20


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def small_size_table(name: str, service: GenFunService) -> Table:
    """Z_L F_L(x), Z_L, Z_L F_L(-1) and Z_L F_L(2) for every reference size."""
    kind = SMALL_SIZE_TABLES[name]
    table = Table(name=name, columns=["L", "Z F(x)", "Z", "Z F(-1)", "Z F(2)", "source", "match"])
    for row in SMALL_SIZES[kind]:
        if kind is BoundaryKind.PERIODIC_ODD and row.size > service.max_sites:
            logger.info("row skipped table=%s L=%d cap=%d", name, row.size, service.max_sites)
            continue
        genfun, source = service.genfun(kind, row.size)
        at_minus_one, at_two = genfun.weighted(-1), genfun.weighted(2)
        match = (
            genfun.coeffs == row.coeffs
            and genfun.z == row.z
            and at_minus_one == row.at_minus_one
            and at_two == row.at_two
        )
        table.rows.append(
            [
                str(row.size),
                genfun.format_polynomial(),
                str(genfun.z),
                str(at_minus_one),
                str(at_two),
                source,
                _yes(match),
            ]
        )
    return table


def constants_table(name: str, bits: int | None = None, workers: int | None = None) -> Table:
    """(g_0, g_1, g_2) at the special points, closed form against fit."""
    geometry = CONSTANT_TABLES[name]
    table = Table(name=name, columns=["x", "coeff", "closed_form", "fitted", "deviation", "tolerance", "match"])
    for x in SPECIAL_POINTS:
        report = check_special_point_constants(geometry, x, bits=bits, workers=workers)
        for coeff, tolerance in CONSTANTS_TOLERANCE.items():
            fitted = report.coefficient(coeff)
            table.rows.append(
                [
                    str(x),
                    coeff,
                    mpmath.nstr(fitted.target, DIGITS),
                    mpmath.nstr(fitted.value, DIGITS),
                    mpmath.nstr(fitted.deviation, 5),
                    f"{tolerance:g}",
                    _yes(fitted.deviation <= tolerance),
                ]
            )
    return table


def tail_table(bits: int | None = None, workers: int | None = None) -> Table:
    """f_2..f_7 = -S_{-1}..-S_{-6} against fits on a grid of r."""
    ctx = context(bits)
    table = Table(
        name=TAIL_TABLE,
        columns=["x", "r", "coeff", "closed_form", "fitted", "deviation", "stability", "match"],
    )
    for x in TAIL_GRID:
        report = check_tail_coefficients(x, terms=6, bits=bits, workers=workers)
        r = r_of_x(x, ctx.prec).r
        for j in range(2, 8):
            fitted = report.coefficient(f"f{j}")
            table.rows.append(
                [
                    str(x),
                    mpmath.nstr(r, 10),
                    f"f{j}",
                    mpmath.nstr(fitted.target, DIGITS),
                    mpmath.nstr(fitted.value, DIGITS),
                    mpmath.nstr(fitted.deviation, 5),
                    mpmath.nstr(fitted.stability, 5),
                    _yes(fitted.deviation <= TAIL_TOLERANCE) if j <= TAIL_CHECKED else "",
                ]
            )
    return table


def build_table(
    name: str,
    service: GenFunService | None = None,
    bits: int | None = None,
    workers: int | None = None,
) -> Table:
    """
    Regenerate a table by name.

    Raises:
        UsageError: Unknown table name.
    """
    if name in SMALL_SIZE_TABLES:
        return small_size_table(name, service or GenFunService())
    if name in CONSTANT_TABLES:
        return constants_table(name, bits, workers)
    if name == TAIL_TABLE:
        return tail_table(bits, workers)
    raise UsageError(f"unknown table {name!r}; choose from {', '.join(TABLE_NAMES)}")
