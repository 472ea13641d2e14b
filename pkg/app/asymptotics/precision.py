"""
Working Precision

One mpmath context per precision, so callers pass the precision explicitly
instead of mutating a global one.
"""

from fractions import Fraction
from functools import lru_cache

import mpmath

from app.core.config import settings

Real = int | float | str | Fraction | mpmath.mpf


@lru_cache(maxsize=None)
def context(bits: int | None = None) -> mpmath.MPContext:
    """Private mpmath context at the given binary precision."""
    ctx = mpmath.MPContext()
    ctx.prec = settings.precision_bits if bits is None else bits
    return ctx


def to_mpf(ctx: mpmath.MPContext, value: Real) -> mpmath.mpf:
    """Convert exactly where possible; rationals are divided at the context precision."""
    if isinstance(value, Fraction):
        return ctx.mpf(value.numerator) / value.denominator
    return ctx.mpf(value)


def log_abs(ctx: mpmath.MPContext, value: Fraction) -> mpmath.mpf:
    """log|p/q| as log|p| - log q, which keeps full relative accuracy for huge integers."""
    if value == 0:
        raise ValueError("log of zero")
    return ctx.log(abs(value.numerator)) - ctx.log(value.denominator)

