"""
Reduced Values

Exact F~_L(x): F_L(x)/x on even systems, F_L(x) on odd ones. Each kind uses
its cheapest exact evaluator; product forms at special points can replace
the evaluator when asked for.
"""

from fractions import Fraction

from app.combinatorics.patterns import BoundaryKind
from app.exact.closedform import eval_det_at, genfun_per_even
from app.exact.identities import special_form, strip_even_linear_coefficient
from app.exact.numbers import asm
from app.exact.polynomial import Scalar


def _reduced_at_zero(kind: BoundaryKind, n: int) -> Fraction:
    """Coefficient of x in F for even systems, where F~(0) is not F(0)/0."""
    if kind is BoundaryKind.PERIODIC_EVEN:
        return Fraction(asm(n - 1), asm(n))
    return strip_even_linear_coefficient(n)


def full_value(kind: BoundaryKind, n: int, x: Fraction) -> Fraction:
    """F_L(x) from the exact evaluator of the kind."""
    match kind:
        case BoundaryKind.PERIODIC_EVEN:
            return genfun_per_even(n).polynomial()(x)
        case BoundaryKind.PERIODIC_ODD:
            from app.engine.groundstate import genfun_oracle
            from app.exact.genfun import eval_genfun

            return eval_genfun(genfun_oracle(kind, kind.size_for(n)), x)
    return eval_det_at(kind, n, x)


def reduced_value(
    kind: BoundaryKind, n: int, x: Scalar, use_special_forms: bool = False
) -> Fraction:
    """
    Exact F~_L(x) at L = kind.size_for(n).

    Args:
        kind: Boundary kind.
        n: Half size.
        x: Exact rational point.
        use_special_forms: Take product forms at -1, 0, 1/2 and 2 where known.

    Returns:
        The reduced value.
    """
    x = Fraction(x)
    if x == 0 and not kind.odd:
        return _reduced_at_zero(kind, n)

    value = special_form(kind, n, x) if use_special_forms else None
    if value is None:
        value = full_value(kind, n, x)
    return value if kind.odd else value / x
