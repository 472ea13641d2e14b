"""
Exact Linear Algebra

Fraction-free determinants of integer matrices and one-dimensional integer
kernels of large sparse matrices.

Kernels are computed modulo word-size primes with numpy, combined by Chinese
remaindering and lifted to rationals by rational reconstruction. The lifted
vector is verified exactly against the integer matrix, so the result never
depends on a lucky choice of primes.
"""

import logging
from collections.abc import Callable, Iterator
from fractions import Fraction
from math import gcd, isqrt, lcm

import numpy as np
from numpy.typing import NDArray

logger = logging.getLogger(__name__)

PRIME_CEILING = 2**31


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """
    Determinant of a square integer matrix by fraction-free elimination.

    Every intermediate entry is a minor of the input, so all divisions are
    exact.

    Args:
        matrix: Square matrix of Python integers (not modified).

    Returns:
        The determinant.
    """
    a = [list(row) for row in matrix]
    size = len(a)
    if size == 0:
        return 1
    if any(len(row) != size for row in a):
        raise ValueError("matrix must be square")

    sign = 1
    previous = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, size):
            row_i = a[i]
            factor = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // previous
            row_i[k] = 0
        previous = pivot
    return sign * a[-1][-1]


def primes_below(ceiling: int) -> Iterator[int]:
    """Primes below ceiling in decreasing order, by trial division."""
    candidate = ceiling - 1 if ceiling % 2 == 0 else ceiling - 2
    while candidate > 2:
        limit = isqrt(candidate)
        if all(candidate % d for d in range(3, limit + 1, 2)):
            yield candidate
        candidate -= 2


def _kernel_mod_p(dense: NDArray[np.int64], p: int) -> NDArray[np.int64] | None:
    """
    Kernel vector of a matrix modulo p when its rank there is dim - 1.

    Returns None when the rank modulo p differs from dim - 1.
    """
    a = dense % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = np.flatnonzero(a[r:, c])
        if candidates.size == 0:
            continue
        pivot_row = r + int(candidates[0])
        if pivot_row != r:
            a[[r, pivot_row]] = a[[pivot_row, r]]
        inverse = pow(int(a[r, c]), -1, p)
        a[r, c:] = (a[r, c:] * inverse) % p
        below = r + 1 + np.flatnonzero(a[r + 1 :, c])
        if below.size:
            factors = a[below, c][:, None]
            a[below, c:] = (a[below, c:] - factors * a[r, c:]) % p
        pivots.append(c)
        r += 1

    if r != cols - 1:
        return None

    pivot_set = set(pivots)
    free = next(c for c in range(cols) if c not in pivot_set)
    x = np.zeros(cols, dtype=object)
    x[free] = 1
    for row in range(r - 1, -1, -1):
        c = pivots[row]
        tail = a[row, c + 1 :].astype(object)
        x[c] = (-int(tail.dot(x[c + 1 :]))) % p
    return x


def rational_reconstruct(residue: int, modulus: int) -> Fraction | None:
    """
    Smallest fraction a/b with a = b * residue (mod modulus).

    Both |a| and b are bounded by sqrt(modulus / 2); returns None when no such
    fraction exists.
    """
    bound = isqrt(modulus // 2)
    r0, r1 = modulus, residue % modulus
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def integer_kernel(
    dense: NDArray[np.int64],
    verify: Callable[[list[int]], bool],
    max_primes: int = 64,
) -> list[int] | None:
    """
    Primitive integer vector spanning a one-dimensional kernel.

    Args:
        dense: Square integer matrix with entries well inside int64.
        verify: Exact check that a candidate vector lies in the kernel.
        max_primes: Number of primes to try before giving up.

    Returns:
        The kernel vector with gcd 1 and nonnegative first component, or None
        when the kernel is not one-dimensional.
    """
    residues: NDArray | None = None
    modulus = 1
    failures = 0
    for used, p in enumerate(primes_below(PRIME_CEILING)):
        if used >= max_primes:
            break
        x = _kernel_mod_p(dense, p)
        if x is None or x[0] % p == 0:
            failures += 1
            logger.debug("prime=%d rejected (rank drop or vanishing reference)", p)
            if failures > 3 and residues is None:
                return None
            continue

        # Normalize so the reference component is 1.
        scaled = (x * pow(int(x[0]), -1, p)) % p
        if residues is None:
            residues, modulus = scaled, p
        else:
            inverse = pow(modulus, -1, p)
            step = ((scaled - residues) * inverse) % p
            residues = residues + modulus * step
            modulus *= p

        ratios = [rational_reconstruct(int(v), modulus) for v in residues]
        if any(q is None for q in ratios):
            continue
        common = lcm(*(q.denominator for q in ratios))
        vector = [q.numerator * (common // q.denominator) for q in ratios]
        divisor = gcd(*vector)
        vector = [v // divisor for v in vector]
        if verify(vector):
            logger.debug("kernel lifted with %d primes", used + 1 - failures)
            return vector
    return None
