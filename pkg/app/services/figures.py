"""
Figure Reproduction

Fitted expansion coefficients across a grid of x, side by side with the
closed forms of both branches, and the exact finite-size curves of the
cylinder.
"""

import csv
import logging
from collections.abc import Iterable, Sequence
from fractions import Fraction
from pathlib import Path
from typing import TextIO

import mpmath
from pydantic import BaseModel

from app.asymptotics.coefficients import MAX_F_INDEX, f_coeff, g_coeff
from app.asymptotics.params import Branch, crossover_side, r_of_x
from app.asymptotics.precision import context, to_mpf
from app.combinatorics.patterns import BoundaryKind
from app.core.config import settings
from app.core.errors import UsageError
from app.engine.fitter import BasisSpec, FitProtocol, FitReport, fit_expansion
from app.engine.sampling import Parity, collect_series
from app.exact.evaluate import reduced_value
from app.schemas.fit import CurveRow, FitRow

logger = logging.getLogger(__name__)

DIGITS = 20

FIGURES: dict[str, tuple[BoundaryKind, str]] = {
    "cylinder-f0": (BoundaryKind.PERIODIC_EVEN, "f0"),
    "cylinder-f1": (BoundaryKind.PERIODIC_EVEN, "f1"),
    "cylinder-f2": (BoundaryKind.PERIODIC_EVEN, "f2"),
    "strip-even-g1": (BoundaryKind.REFLECTING_EVEN, "g1"),
    "strip-odd-g1": (BoundaryKind.REFLECTING_ODD, "g1"),
}
CURVES = "cylinder-curves"
FIGURE_IDS = (*FIGURES, CURVES)

CURVE_SIZES = (10, 11)

_CYLINDER_GRID = ("-3", "-2", "-1", "-1/2", "1/4", "1/2", "1", "2", "5")
_STRIP_GRID = ("-2", "-9/10", "0", "1/2", "1", "2")


def default_grid(figure_id: str) -> list[Fraction]:
    if figure_id == CURVES:
        return [Fraction(k, 10) for k in range(-30, 11)]
    grid = _CYLINDER_GRID if figure_id.startswith("cylinder") else _STRIP_GRID
    return [Fraction(x) for x in grid]


def closed_form(
    geometry: BoundaryKind, name: str, x: Fraction, branch: Branch, bits: int | None = None
) -> mpmath.mpf | None:
    """Closed form of a coefficient on one branch, None where it is not real."""
    j = int(name[1:])
    ctx = context(bits)
    try:
        if geometry.periodic:
            value = f_coeff(j, x, bits, branch)
        else:
            value = g_coeff(geometry, j, x, bits, branch)
    except ZeroDivisionError:
        return None
    if isinstance(value, ctx.mpc) or not ctx.isfinite(value):
        return None
    return value


def has_closed_form(geometry: BoundaryKind, name: str) -> bool:
    if geometry.periodic:
        return name[0] == "f" and int(name[1:]) <= MAX_F_INDEX
    return name in ("g0", "g1")


def _deviation(fitted: mpmath.mpf, low: mpmath.mpf | None, high: mpmath.mpf | None, x: Fraction) -> mpmath.mpf | None:
    """Distance to the branch x lies on; the nearer branch at the crossover itself."""
    side = crossover_side(x)
    candidates = [low] if side > 0 else [high] if side < 0 else [low, high]
    distances = [abs(fitted - value) for value in candidates if value is not None]
    return min(distances) if distances else None


def _text(value: mpmath.mpf | None) -> str | None:
    return None if value is None else mpmath.nstr(value, DIGITS)


def fit_with_rows(
    geometry: BoundaryKind,
    names: Sequence[str],
    x: Fraction,
    n_min: int | None = None,
    n_max: int | None = None,
    basis: BasisSpec | None = None,
    window: int | None = None,
    parity: Parity | None = None,
    bits: int | None = None,
    workers: int | None = None,
    use_special_forms: bool = False,
) -> tuple[FitReport, list[FitRow]]:
    """
    One fit at x, with rows for the requested coefficients.

    Unset arguments fall back to the default protocol of the geometry.
    """
    bits = settings.precision_bits if bits is None else bits
    protocol = FitProtocol.default(geometry)
    n_min = protocol.n_min if n_min is None else n_min
    n_max = protocol.n_max if n_max is None else n_max
    parity = protocol.parity if parity is None else parity
    basis = BasisSpec.default(geometry, protocol.basis_terms) if basis is None else basis

    series = collect_series(
        geometry, x, n_min, n_max, parity=parity, bits=bits, workers=workers, use_special_forms=use_special_forms
    )
    report = fit_expansion(series, basis, window)
    point = r_of_x(x, bits)

    rows = []
    for name in names:
        coefficient = report.coefficient(name)
        closed = has_closed_form(geometry, name)
        low = closed_form(geometry, name, x, Branch.LOW, bits) if closed else None
        high = closed_form(geometry, name, x, Branch.HIGH, bits) if closed else None
        rows.append(
            FitRow(
                x=str(x),
                r=mpmath.nstr(point.r, DIGITS),
                branch=point.branch.value,
                coeff_name=name,
                fitted=mpmath.nstr(coefficient.value, DIGITS),
                target_low=_text(low),
                target_high=_text(high),
                deviation=_text(_deviation(coefficient.value, low, high, x)),
                stability=mpmath.nstr(coefficient.stability, 5),
                n_min=n_min,
                n_max=n_max,
                parity=parity,
            )
        )
    return report, rows


def fit_rows(geometry: BoundaryKind, names: Sequence[str], x: Fraction, **options) -> list[FitRow]:
    return fit_with_rows(geometry, names, x, **options)[1]


def cylinder_curves(grid: Iterable[Fraction], sizes: Sequence[int] = CURVE_SIZES) -> list[CurveRow]:
    """Exact F~_{2n}(x) for each n, in grid order."""
    ctx = context(128)
    rows = []
    for n in sizes:
        for x in grid:
            value = reduced_value(BoundaryKind.PERIODIC_EVEN, n, x)
            rows.append(CurveRow(x=str(x), n=n, value=mpmath.nstr(to_mpf(ctx, value), DIGITS)))
    return rows


def reproduce_figure(
    figure_id: str,
    grid: Sequence[Fraction] | None = None,
    bits: int | None = None,
    workers: int | None = None,
) -> list[FitRow] | list[CurveRow]:
    """
    Rows behind one figure.

    Raises:
        UsageError: Unknown figure id.
    """
    if figure_id not in FIGURE_IDS:
        raise UsageError(f"unknown figure {figure_id!r}; choose from {', '.join(FIGURE_IDS)}")
    grid = list(grid) if grid else default_grid(figure_id)
    if figure_id == CURVES:
        return cylinder_curves(grid)

    geometry, name = FIGURES[figure_id]
    rows: list[FitRow] = []
    for x in grid:
        rows.extend(fit_rows(geometry, [name], x, bits=bits, workers=workers))
        logger.info("figure=%s x=%s done", figure_id, x)
    return rows


def write_csv(rows: Sequence[BaseModel], sink: Path | TextIO, columns: Sequence[str]) -> None:
    """Rows as CSV in the given column order; empty cells for missing values."""
    if isinstance(sink, Path):
        sink.parent.mkdir(parents=True, exist_ok=True)
        with sink.open("w", newline="", encoding="utf-8") as handle:
            write_csv(rows, handle, columns)
        return
    writer = csv.DictWriter(sink, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: "" if value is None else value for key, value in row.model_dump(mode="json").items()})
