"""
Asymptotic Coefficients

Closed forms for the large-n expansion of the reduced generating function.

Cylinder, L = 2n:
    F~ = eps * exp(n f_0 + f_1 + n^-1 f_2 + ...),  f_{j+1} = -S_{-j}.

Strip:
    F~ = eps * exp(n g_0 + log(n) g_1 + g_2 + ...),  g_0 = f_0.

Every function takes the working precision in bits; nothing here touches a
global mpmath state.
"""

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from app.asymptotics.params import Branch, RParam, crossover_side, r_of_x
from app.asymptotics.precision import Real, context, to_mpf
from app.combinatorics.patterns import BoundaryKind
from app.core.errors import DomainError, UsageError

MAX_F_INDEX = 7

# S_{-j}/S_{-1} = (c_0 + c_1 cos(pi r) + c_2 cos(2 pi r) + ...) / denominator
TAIL_RATIOS: dict[int, tuple[int, tuple[int, ...]]] = {
    1: (1, (1,)),
    2: (2, (0, 1)),
    3: (864, (-15, -10, 221)),
    4: (576, (-5, -51, -5, 113)),
    5: (248832, (225, -1826, -37952, -1758, 49695)),
    6: (497664, (1605, 22102, -1760, -135990, -3365, 125920)),
}


def _point(x: Real, bits: int | None, branch: Branch | None) -> RParam:
    point = r_of_x(x, bits)
    if branch is not None and branch is not point.branch:
        point = RParam(r=point.r, branch=branch)
    return point


def _exp_f0(ctx: mpmath.MPContext, s: mpmath.mpf) -> mpmath.mpf:
    return (
        4
        / (3 * ctx.sqrt(3))
        / ctx.tan(ctx.pi * s / 6)
        * ctx.sinpi((s + 1) / 6) ** 2
        / ctx.sinpi((s + 2) / 6) ** 2
    )


def _exp_f1(ctx: mpmath.MPContext, s: mpmath.mpf) -> mpmath.mpf:
    # sin(pi s/2) / sin(pi (s+1)/3), written around s = 2 (x = 0) where both vanish
    d = s - 2
    if d == 0:
        return 3 * ctx.sqrt(3) / 4
    return ctx.sqrt(3) / 2 * ctx.sinpi(d / 2) / ctx.sinpi(d / 3)


def s_minus(j: int, r: Real, bits: int | None = None) -> mpmath.mpf:
    """
    Tail function S_{-j}(r) for j = 1..6.

    The argument is used as given; callers on the high branch pass r - 3.
    """
    if j not in TAIL_RATIOS:
        raise UsageError(f"S_-j is known for j = 1..6, got j={j}")
    ctx = context(bits)
    r = to_mpf(ctx, r)
    leading = -ctx.mpf(5) / 36 * ctx.cospi(r / 2) ** 2
    denominator, coeffs = TAIL_RATIOS[j]
    ratio = ctx.fsum(c * ctx.cospi(k * r) for k, c in enumerate(coeffs)) / denominator
    return leading * ratio


def f_coeff(j: int, x: Real, bits: int | None = None, branch: Branch | None = None) -> mpmath.mpf:
    """
    Cylinder coefficient f_j(x) for j = 0..7.

    Args:
        j: Order of the coefficient.
        x: Loop weight.
        bits: Working precision.
        branch: Force a branch instead of the one x lies on.

    Returns:
        f_j(x); the high branch negates exp(f_0) and exp(f_1) and shifts r by 3.
    """
    if not 0 <= j <= MAX_F_INDEX:
        raise UsageError(f"f_j is available for j = 0..{MAX_F_INDEX}, got j={j}")
    ctx = context(bits)
    point = _point(x, bits, branch)
    s = point.shifted
    sign = 1 if point.branch is Branch.LOW else -1
    if j == 0:
        return ctx.log(sign * _exp_f0(ctx, s))
    if j == 1:
        return ctx.log(sign * _exp_f1(ctx, s))
    return -s_minus(j - 1, s, bits)


def f_derivative(j: int, x: Real, bits: int | None = None) -> mpmath.mpf:
    """
    d f_j/dx for j = 0, 1, 2.

    f_0' is the root of x(1-x) f'^2 - 2f' + 1 = 0 selected by the branch;
    f_1' and f_2' follow from the first-order equations

        f_1' = ((1-x)(2f_0' + x f_0'') - 1) / (2D),
        f_2' = (1-x)(2f_1' + x f_1'^2 + x f_1'') / (2D),

    with D = 1 - x(1-x) f_0'.
    """
    ctx = context(bits)
    point = r_of_x(x, bits)
    t = to_mpf(ctx, x)
    root3 = ctx.sqrt(3)
    sine = 2 * ctx.sinpi(point.r / 3)
    f0p = sine / (sine + root3) if point.branch is Branch.LOW else sine / (sine - root3)
    if j == 0:
        return f0p

    denom = 1 - t * (1 - t) * f0p
    f0pp = (1 - 2 * t) * f0p**2 / (2 * denom)
    f1p = ((1 - t) * (2 * f0p + t * f0pp) - 1) / (2 * denom)
    if j == 1:
        return f1p
    if j == 2:
        f1pp = ctx.diff(lambda u: f_derivative(1, u, ctx.prec), t)
        return (1 - t) * (2 * f1p + t * f1p**2 + t * f1pp) / (2 * denom)
    raise UsageError(f"f_j' is available for j = 0, 1, 2, got j={j}")


def g_coeff(
    geometry: BoundaryKind,
    j: int,
    x: Real,
    bits: int | None = None,
    branch: Branch | None = None,
) -> mpmath.mpf:
    """
    Strip coefficient g_0 or g_1.

    g_0 = f_0 for both parities. g_1 is (1 - r^2)/6 on the even strip and
    -(1 - r)^2/6 on the odd one, with r replaced by r - 3 for x <= -1. The
    even strip takes its high-branch value at x = -1 itself.
    """
    if geometry.periodic:
        raise UsageError(f"g_j is defined for the strip, got {geometry.value}")
    if j == 0:
        return f_coeff(0, x, bits, branch)
    if j != 1:
        raise UsageError(f"g_j has a closed form for j = 0, 1 only, got j={j}")

    point = r_of_x(x, bits)
    if branch is None:
        branch = Branch.HIGH if crossover_side(x) == 0 else point.branch
    s = point.r if branch is Branch.LOW else point.r - 3
    if geometry is BoundaryKind.REFLECTING_EVEN:
        return (1 - s**2) / 6
    return -((1 - s) ** 2) / 6


def epsilon_sign(
    geometry: BoundaryKind, n: int, x: Real, exact_value: Fraction | None = None
) -> int:
    """
    Overall sign of F~ at size n.

    The cylinder follows (-1)^(n+1) below x = -1. On the strip the sign is
    the sign of the exact value, computed when not supplied.
    """
    if geometry is BoundaryKind.PERIODIC_EVEN:
        return (-1) ** (n + 1) if crossover_side(x) < 0 else 1
    if exact_value is None:
        from app.exact.evaluate import reduced_value

        exact_value = reduced_value(geometry, n, Fraction(x))
    if exact_value == 0:
        return 0
    return 1 if exact_value > 0 else -1


def affleck_ludwig_g(x: Real, bits: int | None = None) -> mpmath.mpf:
    """
    g = (sqrt 3/2) sin(pi r/2)/sin(pi r/3), equal to x exp(f_1(x)).

    Raises:
        DomainError: x <= -1, i.e. r outside (0, 5/2).
    """
    if crossover_side(x) <= 0:
        raise DomainError(f"g-factor needs x > -1 (r in (0, 5/2)), got {x}")
    ctx = context(bits)
    r = r_of_x(x, bits).r
    return ctx.sqrt(3) / 2 * ctx.sinpi(r / 2) / ctx.sinpi(r / 3)


def negative_infinity_limits(bits: int | None = None) -> tuple[mpmath.mpf, mpmath.mpf, mpmath.mpf]:
    """Limits of f_0 - log|x|, f_1 + log|x| and f_2 as x -> -infinity."""
    ctx = context(bits)
    return (
        ctx.log(ctx.mpf(16) / 27),
        ctx.log(3 * ctx.sqrt(3) / 4),
        ctx.mpf(5) / 36,
    )


@dataclass(frozen=True)
class AsymptoticModel:
    """Closed-form expansion of one geometry at a fixed precision."""

    geometry: BoundaryKind
    bits: int | None = None

    def __post_init__(self) -> None:
        if self.geometry is BoundaryKind.PERIODIC_ODD:
            raise UsageError("no asymptotic closed forms for the odd cylinder")

    @property
    def names(self) -> tuple[str, ...]:
        if self.geometry.periodic:
            return tuple(f"f{j}" for j in range(MAX_F_INDEX + 1))
        return ("g0", "g1")

    def coefficient(self, j: int, x: Real, branch: Branch | None = None) -> mpmath.mpf:
        if self.geometry.periodic:
            return f_coeff(j, x, self.bits, branch)
        return g_coeff(self.geometry, j, x, self.bits, branch)

    def sign(self, n: int, x: Real, exact_value: Fraction | None = None) -> int:
        return epsilon_sign(self.geometry, n, x, exact_value)

    def log_magnitude(self, n: int, x: Real, order: int = 2) -> mpmath.mpf:
        """
        Truncated expansion of log|F~| at size n.

        The strip sum stops at the log n term, the last one with a closed form
        for general x.
        """
        ctx = context(self.bits)
        if self.geometry.periodic:
            return ctx.fsum(
                ctx.mpf(n) ** (1 - j) * f_coeff(j, x, self.bits) for j in range(order + 1)
            )
        return n * self.coefficient(0, x) + ctx.log(n) * self.coefficient(1, x)
