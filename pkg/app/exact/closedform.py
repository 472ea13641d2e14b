"""
Closed Forms

Exact generating functions for the periodic even system (binomial sum) and
both strip parities (determinants), plus the truncating hypergeometric form
of the cylinder function and the differential equation it satisfies.
"""

from fractions import Fraction

from app.combinatorics.patterns import BoundaryKind
from app.core.errors import UsageError
from app.exact.factorials import binomial
from app.exact.factorials import factorial as f
from app.exact.genfun import GenFun
from app.exact.linalg import bareiss_determinant
from app.exact.numbers import asm, cyclically_symmetric, vertically_symmetric
from app.exact.polynomial import Polynomial, Scalar, interpolate


def _check_n(n: int) -> None:
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")


def genfun_per_even(n: int) -> GenFun:
    """
    Cylinder with L = 2n sites.

    a_k = binom(n+k-2, k-1) (2n-1)! (2n-k-1)! / ((3n-2)! (n-k)!) * A_n,
    for k = 1..n, with Z = A_n.
    """
    _check_n(n)
    z = asm(n)
    coeffs = [0]
    for k in range(1, n + 1):
        value = Fraction(
            binomial(n + k - 2, k - 1) * f(2 * n - 1) * f(2 * n - k - 1) * z,
            f(3 * n - 2) * f(n - k),
        )
        if value.denominator != 1:
            raise ArithmeticError(f"coefficient {k} for n={n} is not an integer")
        coeffs.append(value.numerator)
    return GenFun(kind=BoundaryKind.PERIODIC_EVEN, size=2 * n, coeffs=tuple(coeffs), z=z)


def strip_matrix(kind: BoundaryKind, n: int, x: Fraction) -> tuple[list[list[int]], int]:
    """
    Integer matrix q*M(x) for x = p/q and the scale q.

    M_ij = binom(i+j-s, 2j-i) + x binom(i+j-s, 2j-i-1), with s = 2 for the
    even strip and s = 1 for the odd one.
    """
    if kind.periodic:
        raise UsageError(f"no strip determinant for {kind.value}")
    shift = 1 if kind.odd else 2
    p, q = x.numerator, x.denominator
    matrix = [
        [
            q * binomial(i + j - shift, 2 * j - i) + p * binomial(i + j - shift, 2 * j - i - 1)
            for j in range(1, n + 1)
        ]
        for i in range(1, n + 1)
    ]
    return matrix, q


def strip_determinant(kind: BoundaryKind, n: int, x: Scalar) -> Fraction:
    """Z_L F_L(x) on the strip, as the determinant at a rational point."""
    _check_n(n)
    x = Fraction(x)
    matrix, q = strip_matrix(kind, n, x)
    return Fraction(bareiss_determinant(matrix), q**n)


def strip_normalization(kind: BoundaryKind, n: int) -> int:
    return vertically_symmetric(2 * n + 1) if not kind.odd else cyclically_symmetric(2 * n + 2)


def eval_det_at(kind: BoundaryKind, n: int, x: Scalar) -> Fraction:
    """
    F_L(x) on the strip by one fraction-free determinant.

    Args:
        kind: REFLECTING_EVEN (L = 2n) or REFLECTING_ODD (L = 2n + 1).
        n: Half size.
        x: Exact rational point.

    Returns:
        The normalized value.
    """
    return strip_determinant(kind, n, x) / strip_normalization(kind, n)


def _strip_genfun(kind: BoundaryKind, n: int) -> GenFun:
    _check_n(n)
    points = list(range(n + 1))
    values = [strip_determinant(kind, n, t) for t in points]
    poly = interpolate(points, values)
    coeffs = []
    for c in poly.coeffs:
        if c.denominator != 1:
            raise ArithmeticError(f"interpolated coefficient {c} is not an integer")
        coeffs.append(c.numerator)
    return GenFun(
        kind=kind,
        size=kind.size_for(n),
        coeffs=tuple(coeffs),
        z=strip_normalization(kind, n),
    )


def genfun_refl_even(n: int) -> GenFun:
    """Even strip, L = 2n: interpolated determinant polynomial, Z = AV_{2n+1}."""
    return _strip_genfun(BoundaryKind.REFLECTING_EVEN, n)


def genfun_refl_odd(n: int) -> GenFun:
    """Odd strip, L = 2n + 1: interpolated determinant polynomial, Z = C_{2n+2}."""
    return _strip_genfun(BoundaryKind.REFLECTING_ODD, n)


def closed_form_genfun(kind: BoundaryKind, size: int) -> GenFun:
    """Dispatch to the closed form of a kind; the periodic odd system has none."""
    n = kind.half_size(size)
    match kind:
        case BoundaryKind.PERIODIC_EVEN:
            return genfun_per_even(n)
        case BoundaryKind.REFLECTING_EVEN:
            return genfun_refl_even(n)
        case BoundaryKind.REFLECTING_ODD:
            return genfun_refl_odd(n)
    raise UsageError(f"no closed form for {kind.value}")


def hypergeometric_prefactor(n: int) -> Fraction:
    """(2n-1)!(2n-2)!/((n-1)!(3n-2)!), equal to A_{n-1}/A_n."""
    _check_n(n)
    return Fraction(f(2 * n - 1) * f(2 * n - 2), f(n - 1) * f(3 * n - 2))


def hypergeometric_series(n: int) -> Polynomial:
    """
    Reduced cylinder function as prefactor * 2F1(1-n, n; 2-2n; x).

    The series terminates after n terms; the lower parameter stays negative
    and nonzero over that range.
    """
    prefactor = hypergeometric_prefactor(n)
    term = Fraction(1)
    coeffs = [term]
    for k in range(n - 1):
        term = term * (1 - n + k) * (n + k) / ((2 - 2 * n + k) * (k + 1))
        coeffs.append(term)
    return Polynomial.of([prefactor * c for c in coeffs])


def hypergeom_form(n: int, x: Scalar) -> Fraction:
    """F~_{2n}(x) = F_{2n}(x)/x through the hypergeometric series."""
    return hypergeometric_series(n)(Fraction(x))


def ode_residual(n: int) -> Polynomial:
    """x(x-1)F~'' + 2(n-1+x)F~' - n(n-1)F~ for the exact reduced polynomial."""
    reduced = genfun_per_even(n).reduced()
    first = reduced.derivative()
    second = first.derivative()
    x = Polynomial.x()
    return x * (x - 1) * second + (x + (n - 1)) * 2 * first - reduced * (n * (n - 1))
