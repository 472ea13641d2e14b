"""
Closed-Form Validation

Fits against exact data at the points where closed forms are known in full:
the strip constants at x in {-1, 0, 1/2, 2}, the cylinder tail f_2..f_6 and
the initial data at x = 0 and x = -1.
"""

import logging
from fractions import Fraction

import mpmath

from app.asymptotics.coefficients import f_coeff
from app.asymptotics.constants import special_point_constants
from app.asymptotics.precision import context
from app.combinatorics.patterns import BoundaryKind
from app.core.config import settings
from app.core.errors import UsageError
from app.engine.fitter import BasisSpec, FitProtocol, FitReport, fit_expansion
from app.engine.sampling import Parity, collect_series

logger = logging.getLogger(__name__)

CONSTANTS_BASIS = BasisSpec(("n", "log n", "1", "n^-1"))
CONSTANTS_TOLERANCE = {"g0": 1e-6, "g1": 1e-3, "g2": 1e-2}

TAIL_TERMS = 5
TAIL_N_MIN = 201
TAIL_N_MAX = 400


def check_special_point_constants(
    geometry: BoundaryKind,
    x: Fraction | int | str,
    n_min: int | None = None,
    n_max: int | None = None,
    bits: int | None = None,
    workers: int | None = None,
) -> FitReport:
    """
    Fit (g_0, g_1, g_2) on the strip at a special point.

    Uses even n only, which keeps the odd strip away from its zeros at
    x = -1, and the product forms for the exact values.

    Raises:
        UsageError: Periodic geometry or an unsupported x.
    """
    x = Fraction(x)
    bits = settings.precision_bits if bits is None else bits
    targets = dict(zip(("g0", "g1", "g2"), special_point_constants(geometry, x, bits)))
    protocol = FitProtocol.default(geometry)
    series = collect_series(
        geometry,
        x,
        protocol.n_min if n_min is None else n_min,
        protocol.n_max if n_max is None else n_max,
        parity=Parity.EVEN,
        bits=bits,
        workers=workers,
        use_special_forms=True,
    )
    report = fit_expansion(series, CONSTANTS_BASIS).with_targets(targets)
    for name, tolerance in CONSTANTS_TOLERANCE.items():
        deviation = report.coefficient(name).deviation
        if deviation > tolerance:
            logger.warning("constant off kind=%s x=%s %s deviation=%s", geometry.value, x, name, mpmath.nstr(deviation, 5))
    return report


def check_tail_coefficients(
    x: Fraction | int | str = 2,
    n_min: int = TAIL_N_MIN,
    n_max: int = TAIL_N_MAX,
    terms: int = TAIL_TERMS,
    bits: int | None = None,
    workers: int | None = None,
) -> FitReport:
    """
    Fit the n^-1..n^-terms coefficients of the cylinder at elevated precision.

    The targets are f_2..f_{terms+1} = -S_{-1}..-S_{-terms}.
    """
    if not 1 <= terms <= 6:
        raise UsageError(f"tail terms must be 1..6, got {terms}")
    x = Fraction(x)
    bits = 2 * settings.precision_bits if bits is None else bits
    basis = BasisSpec.default(BoundaryKind.PERIODIC_EVEN, terms + 2)
    series = collect_series(
        BoundaryKind.PERIODIC_EVEN, x, n_min, n_max, parity=Parity.ODD, bits=bits, workers=workers
    )
    targets = {f"f{j}": f_coeff(j, x, bits) for j in range(terms + 2)}
    return fit_expansion(series, basis).with_targets(targets)


def initial_data_targets(bits: int | None = None) -> dict[Fraction, dict[str, mpmath.mpf]]:
    """
    Expansions of log(A_{n-1}/A_n) and log(AV_n^2/A_n):

        n log(16/27) + log(3 sqrt3/4) + 5/(36n) + ...
        n log(2/(3 sqrt3)) + log sqrt6 + 5/(72n) + ...
    """
    ctx = context(bits)
    root3 = ctx.sqrt(3)
    return {
        Fraction(0): {
            "f0": ctx.log(ctx.mpf(16) / 27),
            "f1": ctx.log(3 * root3 / 4),
            "f2": ctx.mpf(5) / 36,
        },
        Fraction(-1): {
            "f0": ctx.log(2 / (3 * root3)),
            "f1": ctx.log(ctx.sqrt(6)),
            "f2": ctx.mpf(5) / 72,
        },
    }


def check_initial_data(
    n_min: int | None = None,
    n_max: int | None = None,
    bits: int | None = None,
    workers: int | None = None,
) -> dict[Fraction, FitReport]:
    """Cylinder fits at x = 0 and x = -1 (odd n) against the known expansions."""
    bits = settings.precision_bits if bits is None else bits
    protocol = FitProtocol.default(BoundaryKind.PERIODIC_EVEN)
    basis = BasisSpec.default(BoundaryKind.PERIODIC_EVEN, protocol.basis_terms)
    reports = {}
    for x, targets in initial_data_targets(bits).items():
        series = collect_series(
            BoundaryKind.PERIODIC_EVEN,
            x,
            protocol.n_min if n_min is None else n_min,
            protocol.n_max if n_max is None else n_max,
            parity=Parity.ODD,
            bits=bits,
            workers=workers,
            use_special_forms=True,
        )
        reports[x] = fit_expansion(series, basis).with_targets(targets)
    return reports
