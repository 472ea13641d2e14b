"""
Symmetry-Class Counts

Product formulas for alternating sign matrices and their symmetry classes:
A_n, the refined A_{n,k}, AV, C, AVH and AHT. Products are taken over
rationals and checked to be integers.
"""

from enum import Enum
from fractions import Fraction
from functools import lru_cache

from app.core.errors import UsageError
from app.exact.factorials import factorial as f


class CombinatorialFamily(str, Enum):
    """Families indexed as in the sum rules; AV, C, AVH, AHT take the matrix size."""

    A = "A"
    A_REFINED = "A_refined"
    AV = "AV"
    C = "C"
    AVH = "AVH"
    AHT = "AHT"


def _integer(value: Fraction, label: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{label} is not an integer: {value}")
    return value.numerator


@lru_cache(maxsize=None)
def asm(n: int) -> int:
    """A_n = prod_{j<n} (3j+1)!/(n+j)!."""
    if n < 0:
        raise UsageError(f"A_n needs n >= 0, got {n}")
    value = Fraction(1)
    for j in range(n):
        value *= Fraction(f(3 * j + 1), f(n + j))
    return _integer(value, f"A_{n}")


@lru_cache(maxsize=None)
def refined_asm(n: int, k: int) -> int:
    """A_{n,k}: ASMs of size n whose first row has its 1 in column k."""
    if not 1 <= k <= n:
        raise UsageError(f"A_(n,k) needs 1 <= k <= n, got n={n}, k={k}")
    value = (
        Fraction(f(n + k - 2), f(k - 1) * f(n - 1))
        * Fraction(f(2 * n - k - 1), f(n - k))
        * Fraction(f(n - 1), f(2 * n - 2))
        * asm(n - 1)
    )
    return _integer(value, f"A_({n},{k})")


@lru_cache(maxsize=None)
def vertically_symmetric(size: int) -> int:
    """AV_{2n+1} = prod_{j<n} (3j+2)(6j+3)!(2j+1)!/((4j+3)!(4j+2)!)."""
    if size < 1 or size % 2 == 0:
        raise UsageError(f"AV is defined for odd sizes, got {size}")
    n = size // 2
    value = Fraction(1)
    for j in range(n):
        value *= Fraction((3 * j + 2) * f(6 * j + 3) * f(2 * j + 1), f(4 * j + 3) * f(4 * j + 2))
    return _integer(value, f"AV_{size}")


@lru_cache(maxsize=None)
def cyclically_symmetric(size: int) -> int:
    """C_{2n} = prod_{j<n} (3j+1)(6j)!(2j)!/((4j)!(4j+1)!)."""
    if size < 0 or size % 2:
        raise UsageError(f"C is defined for even sizes, got {size}")
    n = size // 2
    value = Fraction(1)
    for j in range(n):
        value *= Fraction((3 * j + 1) * f(6 * j) * f(2 * j), f(4 * j) * f(4 * j + 1))
    return _integer(value, f"C_{size}")


@lru_cache(maxsize=None)
def doubly_symmetric(size: int) -> int:
    """AVH_{2n+1} = AV_{2[n/2]+1} * C_{2[(n+1)/2]}."""
    if size < 1 or size % 2 == 0:
        raise UsageError(f"AVH is defined for odd sizes, got {size}")
    n = size // 2
    return vertically_symmetric(2 * (n // 2) + 1) * cyclically_symmetric(2 * ((n + 1) // 2))


@lru_cache(maxsize=None)
def half_turn_symmetric(size: int) -> int:
    """AHT_{2n} and AHT_{2n+1}."""
    if size < 0:
        raise UsageError(f"AHT needs a nonnegative size, got {size}")
    n = size // 2
    if size % 2 == 0:
        value = Fraction(1)
        for j in range(n):
            value *= Fraction(f(3 * j) * f(3 * j + 2), f(n + j) ** 2)
        return _integer(value, f"AHT_{size}")

    value = Fraction(f(n), f(3 * n + 2))
    for j in range(n + 1):
        value *= Fraction(f(3 * j) * f(3 * j + 2), f(n + j) ** 2)
    return _integer(value, f"AHT_{size}")


def comb_number(family: CombinatorialFamily | str, *index: int) -> int:
    """
    Evaluate a family at its index.

    Args:
        family: Family tag.
        index: n for A; (n, k) for A_refined; the matrix size otherwise.

    Returns:
        The exact count.
    """
    family = CombinatorialFamily(family)
    arity = 2 if family is CombinatorialFamily.A_REFINED else 1
    if len(index) != arity:
        raise UsageError(f"{family.value} takes {arity} index, got {len(index)}")

    match family:
        case CombinatorialFamily.A:
            return asm(*index)
        case CombinatorialFamily.A_REFINED:
            return refined_asm(*index)
        case CombinatorialFamily.AV:
            return vertically_symmetric(*index)
        case CombinatorialFamily.C:
            return cyclically_symmetric(*index)
        case CombinatorialFamily.AVH:
            return doubly_symmetric(*index)
        case CombinatorialFamily.AHT:
            return half_turn_symmetric(*index)
