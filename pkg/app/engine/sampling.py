"""
Sample Series

Exact finite-size values of F~_L(x) over a range of n, turned into signs and
high-precision logarithms for the extrapolation fits. Evaluations at
different n are independent and run on a process pool.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import mpmath

from app.asymptotics.coefficients import epsilon_sign
from app.asymptotics.precision import context, log_abs
from app.combinatorics.patterns import BoundaryKind
from app.core.config import settings
from app.core.errors import UsageError
from app.exact.evaluate import reduced_value

logger = logging.getLogger(__name__)


class Parity(str, Enum):
    ALL = "all"
    EVEN = "even"
    ODD = "odd"

    def accepts(self, n: int) -> bool:
        if self is Parity.ALL:
            return True
        return (n % 2 == 0) == (self is Parity.EVEN)


@dataclass(frozen=True)
class Sample:
    n: int
    sign: int
    log_abs: mpmath.mpf


@dataclass
class SampleSeries:
    """Signed log-magnitudes of F~ at one x, ordered by n."""

    geometry: BoundaryKind
    x: Fraction
    parity: Parity
    bits: int
    samples: list[Sample] = field(default_factory=list)
    excluded: list[int] = field(default_factory=list)

    @property
    def ns(self) -> list[int]:
        return [s.n for s in self.samples]

    @property
    def values(self) -> list[mpmath.mpf]:
        return [s.log_abs for s in self.samples]

    @property
    def signs(self) -> list[int]:
        return [s.sign for s in self.samples]

    def __len__(self) -> int:
        return len(self.samples)


def _evaluate(task: tuple[BoundaryKind, int, Fraction, bool]) -> Fraction:
    kind, n, x, use_special_forms = task
    return reduced_value(kind, n, x, use_special_forms)


def _exact_values(tasks: list[tuple[BoundaryKind, int, Fraction, bool]], workers: int) -> list[Fraction]:
    if workers <= 1 or len(tasks) <= 1:
        return [_evaluate(task) for task in tasks]
    logger.info("worker pool size=%d tasks=%d", workers, len(tasks))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_evaluate, tasks))


def _log_at(value: Fraction, bits: int) -> mpmath.mpf:
    """log|value| at max(bits, 4 * decimal digits) bits, rounded to the series precision."""
    digits = len(str(max(abs(value.numerator), value.denominator)))
    work = context(max(bits, 4 * digits))
    return context(bits).mpf(log_abs(work, value))


def collect_series(
    geometry: BoundaryKind,
    x: Fraction | int | str,
    n_min: int,
    n_max: int,
    parity: Parity = Parity.ALL,
    bits: int | None = None,
    workers: int | None = None,
    use_special_forms: bool = False,
) -> SampleSeries:
    """
    Evaluate F~ exactly for n in [n_min, n_max] and take logarithms.

    Args:
        geometry: Boundary kind.
        x: Exact rational loop weight.
        n_min: Smallest half size.
        n_max: Largest half size.
        parity: Restrict n to one parity.
        bits: Series precision.
        workers: Process count, defaults to the configured one.
        use_special_forms: Use product forms at special points.

    Returns:
        The series with exact zeros excluded and recorded.

    Raises:
        UsageError: Empty range, or mixed parity too close to x = -1.
    """
    x = Fraction(x)
    bits = settings.precision_bits if bits is None else bits
    workers = settings.workers if workers is None else workers
    parity = Parity(parity)

    if n_min < 1 or n_max < n_min:
        raise UsageError(f"invalid n range [{n_min}, {n_max}]")
    if parity is Parity.ALL and abs(x + 1) <= Fraction(settings.crossover_window):
        raise UsageError(
            f"x={x} lies within {settings.crossover_window} of the crossover; pick --parity even or odd"
        )

    ns = [n for n in range(n_min, n_max + 1) if parity.accepts(n)]
    values = _exact_values([(geometry, n, x, use_special_forms) for n in ns], workers)

    series = SampleSeries(geometry=geometry, x=x, parity=parity, bits=bits)
    for n, value in zip(ns, values):
        if value == 0:
            series.excluded.append(n)
            logger.info("excluded zero sample kind=%s n=%d x=%s", geometry.value, n, x)
            continue
        sign = 1 if value > 0 else -1
        if geometry is BoundaryKind.PERIODIC_EVEN and sign != epsilon_sign(geometry, n, x):
            logger.warning("sign rule mismatch n=%d x=%s sign=%d", n, x, sign)
        series.samples.append(Sample(n=n, sign=sign, log_abs=_log_at(value, bits)))

    logger.debug(
        "series kind=%s x=%s samples=%d excluded=%d", geometry.value, x, len(series), len(series.excluded)
    )
    return series
