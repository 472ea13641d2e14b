"""
Generating Functions

Exact finite-size generating function Z_L F_L(x) = sum_k a_k x^k with its
normalization Z_L.
"""

from dataclasses import dataclass
from fractions import Fraction

from app.combinatorics.patterns import BoundaryKind
from app.exact.polynomial import Polynomial, Scalar


@dataclass(frozen=True)
class GenFun:
    """Unnormalized coefficients a_k (index = power of x) and normalization Z."""

    kind: BoundaryKind
    size: int
    coeffs: tuple[int, ...]
    z: int

    @property
    def n(self) -> int:
        return self.size // 2

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_normalized(self) -> bool:
        """Coefficients sum to Z, i.e. F(1) = 1."""
        return sum(self.coeffs) == self.z

    def polynomial(self) -> Polynomial:
        """The normalized polynomial F_L(x)."""
        return Polynomial.of([Fraction(a, self.z) for a in self.coeffs])

    def weighted(self, x: Scalar) -> Fraction:
        """Z_L F_L(x), evaluated by Horner's rule."""
        value = Fraction(0)
        for a in reversed(self.coeffs):
            value = value * x + a
        return value

    def reduced(self) -> Polynomial:
        """F with the overall factor x removed on even systems."""
        poly = self.polynomial()
        return poly if self.kind.odd else poly.divide_by_x()

    def format_polynomial(self) -> str:
        """Highest power first, e.g. "2x^3 + 3x^2 + 2x"."""
        terms = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            if k == 0:
                monomial = str(a)
            else:
                power = "x" if k == 1 else f"x^{k}"
                monomial = power if a == 1 else f"{a}{power}"
            terms.append(monomial)
        return " + ".join(terms) if terms else "0"


def eval_genfun(genfun: GenFun, x: Scalar) -> Fraction:
    """Exact F_L(x) = sum_k a_k x^k / Z_L."""
    return genfun.weighted(Fraction(x)) / genfun.z
