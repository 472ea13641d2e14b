"""
Expansion Fitter

Extracts the coefficients of

    log|F~| = c_1 b_1(n) + c_2 b_2(n) + ...

from exact data by solving the system on sliding windows of consecutive n,
at the precision of the series. Square windows are solved by LU; longer
windows by least squares through QR. The spread of each coefficient over
the last three windows is reported as its stability radius.
"""

import logging
import re
from dataclasses import dataclass, field, replace

import mpmath

from app.asymptotics.precision import context
from app.combinatorics.patterns import BoundaryKind
from app.core.config import settings
from app.core.errors import FitError, UsageError
from app.engine.sampling import Parity, SampleSeries

logger = logging.getLogger(__name__)

STABILITY_WINDOWS = 3

_INVERSE_POWER = re.compile(r"^n\^-(\d+)$")


def _term_order(term: str) -> int:
    """Position of a term in the expansion: n, log n, 1, n^-1, n^-2, ..."""
    if term == "n":
        return 0
    if term == "log n":
        return 1
    if term == "1":
        return 2
    match = _INVERSE_POWER.match(term)
    if match is None or int(match.group(1)) < 1:
        raise UsageError(f"unknown basis term {term!r}; use n, log n, 1 or n^-k")
    return 2 + int(match.group(1))


@dataclass(frozen=True)
class BasisSpec:
    """Ordered basis functions of n."""

    terms: tuple[str, ...]

    def __post_init__(self) -> None:
        for term in self.terms:
            _term_order(term)
        if len(set(self.terms)) != len(self.terms):
            raise UsageError(f"basis terms must be distinct: {self.terms}")
        if "n" not in self.terms or "1" not in self.terms:
            raise UsageError("basis must contain n and 1")

    @classmethod
    def default(cls, geometry: BoundaryKind, size: int | None = None) -> "BasisSpec":
        """n, 1, n^-1, ... on the cylinder; n, log n, 1, n^-1, ... on the strip."""
        if geometry.periodic:
            size = settings.periodic_basis_terms if size is None else size
            head = ["n", "1"]
        else:
            size = settings.reflecting_basis_terms if size is None else size
            head = ["n", "log n", "1"]
        if size < len(head):
            raise UsageError(f"basis needs at least {len(head)} terms, got {size}")
        return cls(tuple(head + [f"n^-{k}" for k in range(1, size - len(head) + 1)]))

    @classmethod
    def parse(cls, text: str) -> "BasisSpec":
        return cls(tuple(part.strip() for part in text.split(",") if part.strip()))

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def has_log(self) -> bool:
        return "log n" in self.terms

    def row(self, ctx: mpmath.MPContext, n: int) -> list[mpmath.mpf]:
        values = []
        for term in self.terms:
            if term == "n":
                values.append(ctx.mpf(n))
            elif term == "log n":
                values.append(ctx.log(n))
            elif term == "1":
                values.append(ctx.mpf(1))
            else:
                values.append(ctx.mpf(n) ** -(_term_order(term) - 2))
        return values


def coefficient_name(geometry: BoundaryKind, term: str) -> str:
    """f_j on the cylinder, g_j on the strip, indexed by the term's place in the expansion."""
    order = _term_order(term)
    if geometry.periodic:
        return f"f{order if order == 0 else order - 1}"
    return f"g{order}"


@dataclass(frozen=True)
class FittedCoefficient:
    name: str
    term: str
    value: mpmath.mpf
    stability: mpmath.mpf
    target: mpmath.mpf | None = None

    @property
    def deviation(self) -> mpmath.mpf | None:
        if self.target is None:
            return None
        return abs(self.value - self.target)


@dataclass
class FitReport:
    """Final-window coefficients with their spread over the last windows."""

    geometry: BoundaryKind
    x: object
    parity: Parity
    basis: BasisSpec
    window: int
    windows: list[tuple[int, int]]
    coefficients: list[FittedCoefficient] = field(default_factory=list)
    excluded: list[int] = field(default_factory=list)

    @property
    def n_min(self) -> int:
        return self.windows[-1][0]

    @property
    def n_max(self) -> int:
        return self.windows[-1][1]

    def coefficient(self, name: str) -> FittedCoefficient:
        for coefficient in self.coefficients:
            if coefficient.name == name or coefficient.term == name:
                return coefficient
        raise KeyError(name)

    def with_targets(self, targets: dict[str, mpmath.mpf]) -> "FitReport":
        """Copy with closed-form targets attached by coefficient name."""
        coefficients = [replace(c, target=targets.get(c.name, c.target)) for c in self.coefficients]
        return replace(self, coefficients=coefficients)


def _solve_window(
    ctx: mpmath.MPContext, basis: BasisSpec, ns: list[int], values: list[mpmath.mpf]
) -> list[mpmath.mpf]:
    matrix = ctx.matrix([basis.row(ctx, n) for n in ns])
    rhs = ctx.matrix(values)
    try:
        if len(ns) == len(basis):
            solution = ctx.lu_solve(matrix, rhs)
        else:
            solution, _residual = ctx.qr_solve(matrix, rhs)
    except ZeroDivisionError as exc:
        raise FitError(f"singular fit system for n = {ns[0]}..{ns[-1]}") from exc
    return [solution[i] for i in range(len(basis))]


def fit_expansion(
    series: SampleSeries, basis: BasisSpec, window: int | None = None
) -> FitReport:
    """
    Fit the basis to the series on its last three windows.

    Args:
        series: Signed log-magnitudes ordered by n.
        basis: Basis functions.
        window: Consecutive samples per window; defaults to the basis size,
            larger values switch to least squares.

    Returns:
        Coefficients of the last window and their stability radii.

    Raises:
        UsageError: Window smaller than the basis.
        FitError: Too few samples, duplicate n or a singular system.
    """
    window = len(basis) if window is None else window
    if len(basis) < 2:
        raise UsageError("basis needs at least two terms")
    if window < len(basis):
        raise UsageError(f"window {window} is smaller than the basis ({len(basis)} terms)")
    if basis.has_log == series.geometry.periodic:
        raise UsageError("the log n term belongs to strip fits and only there")
    if len(series) == 0:
        raise FitError(f"no usable samples at x={series.x} (excluded: {series.excluded})")
    if len(set(series.ns)) != len(series):
        raise FitError("series has duplicate n values")
    if len(series) < window + STABILITY_WINDOWS - 1:
        raise FitError(
            f"{len(series)} samples give fewer than {STABILITY_WINDOWS} windows of size {window}"
        )

    ctx = context(series.bits)
    ns, values = series.ns, series.values
    starts = range(len(series) - window - STABILITY_WINDOWS + 1, len(series) - window + 1)
    solutions = []
    windows = []
    for start in starts:
        stop = start + window
        solutions.append(_solve_window(ctx, basis, ns[start:stop], values[start:stop]))
        windows.append((ns[start], ns[stop - 1]))

    final = solutions[-1]
    coefficients = []
    for i, term in enumerate(basis.terms):
        column = [solution[i] for solution in solutions]
        coefficients.append(
            FittedCoefficient(
                name=coefficient_name(series.geometry, term),
                term=term,
                value=final[i],
                stability=max(column) - min(column),
            )
        )

    logger.debug("fit kind=%s x=%s windows=%s", series.geometry.value, series.x, windows)
    return FitReport(
        geometry=series.geometry,
        x=series.x,
        parity=series.parity,
        basis=basis,
        window=window,
        windows=windows,
        coefficients=coefficients,
        excluded=list(series.excluded),
    )


@dataclass(frozen=True)
class FitProtocol:
    """Default n range, parity and basis size of a geometry."""

    n_min: int
    n_max: int
    parity: Parity
    basis_terms: int

    @classmethod
    def default(cls, geometry: BoundaryKind) -> "FitProtocol":
        if geometry.periodic:
            return cls(
                n_min=settings.periodic_n_min,
                n_max=settings.periodic_n_max,
                parity=Parity.ODD,
                basis_terms=settings.periodic_basis_terms,
            )
        return cls(
            n_min=settings.reflecting_n_min,
            n_max=settings.reflecting_n_max,
            parity=Parity.EVEN,
            basis_terms=settings.reflecting_basis_terms,
        )
