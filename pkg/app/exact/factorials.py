"""
Factorial Tables

Memoized factorials and binomials of arbitrary-precision integers up to a
configurable bound.
"""

import threading

from app.core.config import settings
from app.core.errors import BudgetExceededError


class FactorialTable:
    """Grow-only factorial table guarded by a single-writer lock."""

    def __init__(self, bound: int):
        self.bound = bound
        self._values = [1]
        self._lock = threading.Lock()

    def _extend(self, m: int) -> None:
        with self._lock:
            values = self._values
            for k in range(len(values), m + 1):
                values.append(values[-1] * k)

    def factorial(self, m: int) -> int:
        if m < 0:
            raise ValueError(f"factorial of negative number {m}")
        if m > self.bound:
            raise BudgetExceededError(f"factorial {m}! exceeds the table bound {self.bound}")
        if m >= len(self._values):
            self._extend(m)
        return self._values[m]

    def binomial(self, top: int, bottom: int) -> int:
        """Binomial coefficient, zero outside 0 <= bottom <= top."""
        if bottom < 0 or top < 0 or bottom > top:
            return 0
        return self.factorial(top) // (self.factorial(bottom) * self.factorial(top - bottom))


table = FactorialTable(settings.factorial_bound)


def factorial(m: int) -> int:
    return table.factorial(m)


def binomial(top: int, bottom: int) -> int:
    return table.binomial(top, bottom)
