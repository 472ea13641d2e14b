"""
Generating Function Service

Chooses the exact source of Z_L F_L(x) for a kind and size, and keeps the
results in the on-disk cache.
"""

import logging

from app.combinatorics.patterns import BoundaryKind
from app.core.config import settings
from app.engine.groundstate import build_hamiltonian, genfun_from_ground_state, solve_ground_state
from app.exact.closedform import closed_form_genfun
from app.exact.genfun import GenFun
from app.memory.genfun_cache import GenFunCache
from app.schemas.genfun import GenFunResponse, GroundStateSummary

logger = logging.getLogger(__name__)


def _response(genfun: GenFun, source: str) -> GenFunResponse:
    return GenFunResponse(
        kind=genfun.kind,
        size=genfun.size,
        z=str(genfun.z),
        coefficients=[str(a) for a in genfun.coeffs],
        polynomial=genfun.format_polynomial(),
        source=source,
    )


class GenFunService:
    """
    Exact generating functions for the command line.

    Closed forms serve every kind except the odd cylinder, which has none and
    goes through the ground-state solve.
    """

    def __init__(self, cache: GenFunCache | None = None, max_sites: int | None = None):
        self.cache = cache
        self.max_sites = settings.max_sites if max_sites is None else max_sites

    def _oracle(self, kind: BoundaryKind, size: int) -> GenFun:
        state = solve_ground_state(build_hamiltonian(kind, size, self.max_sites))
        return genfun_from_ground_state(state)

    def genfun(self, kind: BoundaryKind, size: int) -> tuple[GenFun, str]:
        """
        Z_L F_L(x) and the name of the source it came from.

        Raises:
            ParityMismatchError: Size parity does not fit the kind.
            BudgetExceededError: The odd cylinder above the state-space cap.
        """
        kind.half_size(size)
        if kind is BoundaryKind.PERIODIC_ODD:
            logger.warning("no closed form for %s, using the ground-state oracle at L=%d", kind.value, size)
            compute, source = self._oracle, "oracle"
        else:
            compute, source = closed_form_genfun, "closed-form"

        if self.cache is None:
            return compute(kind, size), source
        return self.cache.get_or_compute(kind, size, compute), source

    def genfun_response(self, kind: BoundaryKind, size: int) -> GenFunResponse:
        genfun, source = self.genfun(kind, size)
        return _response(genfun, source)

    def oracle_summary(self, kind: BoundaryKind, size: int) -> GroundStateSummary:
        """Ground-state statistics plus the oracle generating function."""
        state = solve_ground_state(build_hamiltonian(kind, size, self.max_sites))
        genfun = genfun_from_ground_state(state)
        logger.info("ground state kind=%s L=%d dim=%d z=%d", kind.value, size, len(state.psi), state.z)
        return GroundStateSummary(
            kind=kind,
            size=size,
            dimension=len(state.psi),
            z=str(state.z),
            min_component=str(state.min_component),
            max_component=str(state.max_component),
            genfun=_response(genfun, "oracle"),
        )
