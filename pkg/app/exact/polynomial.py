"""
Exact Polynomials

Dense univariate polynomials over the rationals, with the handful of
operations the closed forms need: Horner evaluation, arithmetic, derivatives
and interpolation through exact sample points.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Polynomial:
    """Coefficients in ascending powers; the zero polynomial has none."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def of(cls, coeffs: list[Scalar] | tuple[Scalar, ...]) -> "Polynomial":
        return cls(_trim([Fraction(c) for c in coeffs]))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls.of([0, 1])

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def __add__(self, other: "Polynomial | Scalar") -> "Polynomial":
        other = _lift(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(_trim([self.coefficient(k) + other.coefficient(k) for k in range(size)]))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        return self + (-_lift(other))

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return Polynomial(())
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return Polynomial(_trim(product))

    __rmul__ = __mul__

    def derivative(self) -> "Polynomial":
        return Polynomial(_trim([k * c for k, c in enumerate(self.coeffs)][1:]))

    def divide_by_x(self) -> "Polynomial":
        """Exact division by x; the constant term must vanish."""
        if self.coefficient(0) != 0:
            raise ArithmeticError("polynomial has a nonzero constant term")
        return Polynomial(self.coeffs[1:])


def _lift(value: "Polynomial | Scalar") -> Polynomial:
    return value if isinstance(value, Polynomial) else Polynomial.of([value])


def interpolate(xs: list[Scalar], ys: list[Scalar]) -> Polynomial:
    """
    Polynomial of degree < len(xs) through the points (xs[i], ys[i]).

    Uses Newton divided differences and expands the Newton form.

    Args:
        xs: Distinct sample abscissae.
        ys: Sample values.

    Returns:
        The interpolating polynomial.
    """
    if len(xs) != len(ys) or not xs:
        raise ValueError("need equally many nonempty abscissae and values")
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissae must be distinct")

    xs = [Fraction(x) for x in xs]
    table = [Fraction(y) for y in ys]
    count = len(xs)
    for level in range(1, count):
        for i in range(count - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])

    result = Polynomial.of([table[-1]])
    for i in range(count - 2, -1, -1):
        result = result * Polynomial.of([-xs[i], 1]) + table[i]
    return result
