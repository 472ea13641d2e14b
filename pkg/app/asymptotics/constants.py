"""
Strip Constants at Special Points

Closed forms of (g_0, g_1, g_2) at x = -1, 0, 1/2, 2, where the strip
values are products of symmetry-class counts and their asymptotics follow
from the Barnes G-function. A denotes the Glaisher constant.
"""

from collections.abc import Callable
from fractions import Fraction

import mpmath

from app.asymptotics.precision import context
from app.combinatorics.patterns import BoundaryKind
from app.core.errors import UsageError

SPECIAL_POINTS: tuple[Fraction, ...] = (Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(2))

Triple = tuple[mpmath.mpf, mpmath.mpf, mpmath.mpf]


def _even(ctx: mpmath.MPContext, x: Fraction) -> Triple:
    pi, a, mpf = ctx.pi, ctx.glaisher, ctx.mpf
    g13, g16 = ctx.gamma(mpf(1) / 3), ctx.gamma(mpf(1) / 6)
    root3 = ctx.sqrt(3)
    if x == -1:
        return (
            ctx.log(2 / (3 * root3)),
            mpf(1) / 8,
            mpf(1) / 24 + ctx.log(3 ** (mpf(11) / 24) * g13 / (2 ** (mpf(1) / 18) * ctx.sqrt(pi * a))),
        )
    if x == 0:
        return (ctx.log(mpf(16) / 27), -mpf(1) / 2, ctx.log(3 / ctx.sqrt(2 * pi)))
    if x == 2:
        return (
            ctx.log(8 / (3 * root3)),
            mpf(1) / 8,
            -mpf(3) / 8 + ctx.log(g13 / (3 ** (mpf(1) / 24) * 2 ** (mpf(1) / 18) * ctx.sqrt(pi * a))),
        )
    return (
        ctx.log(4 / (3 * root3)),
        -mpf(5) / 24,
        mpf(1) / 24
        + ctx.log(2 ** (mpf(7) / 9) * pi ** (mpf(1) / 4) / (3 ** (mpf(7) / 24) * ctx.sqrt(a * g16))),
    )


def _odd(ctx: mpmath.MPContext, x: Fraction) -> Triple:
    pi, a, mpf = ctx.pi, ctx.glaisher, ctx.mpf
    g13 = ctx.gamma(mpf(1) / 3)
    root3 = ctx.sqrt(3)
    tail = mpf(1) / 24 + ctx.log(2 ** (mpf(16) / 9) / (3 ** (mpf(25) / 24) * ctx.sqrt(a)))
    if x == -1:
        return (
            ctx.log(2 / (3 * root3)),
            -mpf(3) / 8,
            mpf(1) / 24 + ctx.log(2 ** (mpf(25) / 9) * pi / (3 ** (mpf(25) / 24) * g13**2 * ctx.sqrt(a))),
        )
    if x == 0:
        return (
            ctx.log(mpf(16) / 27),
            -mpf(1) / 6,
            ctx.log(2 ** (mpf(17) / 6) * ctx.sqrt(pi) / (3 ** (mpf(3) / 2) * g13)),
        )
    if x == 2:
        return (ctx.log(8 / (3 * root3)), -mpf(1) / 24, tail)
    return (ctx.log(4 / (3 * root3)), -mpf(1) / 24, tail)


_TABLES: dict[BoundaryKind, Callable[[mpmath.MPContext, Fraction], Triple]] = {
    BoundaryKind.REFLECTING_EVEN: _even,
    BoundaryKind.REFLECTING_ODD: _odd,
}


def special_point_constants(
    geometry: BoundaryKind, x: Fraction | int | str, bits: int | None = None
) -> Triple:
    """
    (g_0, g_1, g_2) on the strip at one of the special points.

    Raises:
        UsageError: Periodic geometry or x outside {-1, 0, 1/2, 2}.
    """
    if geometry not in _TABLES:
        raise UsageError(f"special-point constants exist for the strip only, got {geometry.value}")
    x = Fraction(x)
    if x not in SPECIAL_POINTS:
        raise UsageError(f"x must be one of -1, 0, 1/2, 2, got {x}")
    return _TABLES[geometry](context(bits), x)
