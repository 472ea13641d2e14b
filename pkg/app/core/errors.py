"""
Toolkit Errors

Exception hierarchy shared by every layer. Each error carries the process
exit code the command line maps it to.
"""


class ToolkitError(Exception):
    """Base error with an exit code and a human readable detail."""

    exit_code: int = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class UsageError(ToolkitError, ValueError):
    """Arguments violate a precondition."""

    exit_code = 2


class ParityMismatchError(UsageError):
    """Boundary kind and system size disagree in parity."""


class DomainError(UsageError):
    """Argument lies outside the domain of a closed form."""


class NotDyckPresentableError(UsageError):
    """Link pattern has no Dyck path (defect enclosed by a chord)."""


class BudgetExceededError(ToolkitError):
    """Requested size exceeds a configured budget."""

    exit_code = 3


class KernelDimensionError(ToolkitError, ArithmeticError):
    """Hamiltonian kernel is not one-dimensional."""


class FitError(ToolkitError, ArithmeticError):
    """Extrapolation fit cannot be carried out."""


class CheckFailure(ToolkitError):
    """At least one required check failed."""
