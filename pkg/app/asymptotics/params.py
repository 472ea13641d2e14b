"""
Loop-Weight Parametrisation

x = sin(pi(r+1)/3) / sin(pi r/3) maps r in (0, 3) onto the real line,
decreasing, with the crossover x = -1 at r = 5/2. Closed forms on the
low branch (x >= -1) are written in r, those on the high branch (x <= -1)
in r - 3.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import mpmath

from app.asymptotics.precision import Real, context, to_mpf
from app.core.errors import DomainError

CROSSOVER_R = Fraction(5, 2)
CROSSOVER_X = Fraction(-1)


class Branch(str, Enum):
    LOW = "low"
    HIGH = "high"


@dataclass(frozen=True)
class RParam:
    """A point of the parametrisation with the branch its closed forms use."""

    r: mpmath.mpf
    branch: Branch

    @property
    def shifted(self) -> mpmath.mpf:
        """Argument of the closed forms: r on the low branch, r - 3 on the high one."""
        return self.r if self.branch is Branch.LOW else self.r - 3


def crossover_side(x: Real) -> int:
    """Sign of x + 1; integers, rationals and strings are compared exactly."""
    value = Fraction(x) - CROSSOVER_X if isinstance(x, int | str | Fraction) else x + 1
    return (value > 0) - (value < 0)


def branch_of(x: Real) -> Branch:
    """Low iff x >= -1."""
    return Branch.LOW if crossover_side(x) >= 0 else Branch.HIGH


def x_of_r(r: Real, bits: int | None = None) -> mpmath.mpf:
    """
    Loop weight at parameter r.

    Raises:
        DomainError: r outside (0, 3).
    """
    ctx = context(bits)
    r = to_mpf(ctx, r)
    if not 0 < r < 3:
        raise DomainError(f"r must lie in (0, 3), got {ctx.nstr(r, 15)}")
    return ctx.sinpi((r + 1) / 3) / ctx.sinpi(r / 3)


def r_of_x(x: Real, bits: int | None = None) -> RParam:
    """Inverse parametrisation r = (3/pi) atan2(sqrt 3, 2x - 1)."""
    ctx = context(bits)
    value = to_mpf(ctx, x)
    r = 3 * ctx.atan2(ctx.sqrt(3), 2 * value - 1) / ctx.pi
    return RParam(r=r, branch=branch_of(x))
