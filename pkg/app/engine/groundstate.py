"""
Ground State Oracle

Builds the loop-weight-1 Hamiltonian H = sum_i (1 - e_i) on the link-pattern
basis, solves for its integer ground state and assembles the unnormalized
generating function sum_alpha psi_alpha x^{k_alpha}.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from app.combinatorics import (
    BoundaryKind,
    LinkPattern,
    apply_ei,
    boundary_loops,
    count_link_patterns,
    enumerate_link_patterns,
    generator_sites,
)
from app.core.config import settings
from app.core.errors import BudgetExceededError, KernelDimensionError
from app.exact.genfun import GenFun
from app.exact.linalg import integer_kernel

logger = logging.getLogger(__name__)


@dataclass
class Hamiltonian:
    """Sparse integer matrix over the enumerated link-pattern basis."""

    kind: BoundaryKind
    size: int
    basis: list[LinkPattern]
    columns: list[dict[int, int]]
    index: dict[LinkPattern, int] = field(repr=False)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def column_sums(self) -> list[int]:
        return [sum(column.values()) for column in self.columns]

    def apply(self, vector: list[int]) -> list[int]:
        """Exact product H @ vector."""
        result = [0] * self.dimension
        for col, column in enumerate(self.columns):
            v = vector[col]
            if v == 0:
                continue
            for row, value in column.items():
                result[row] += value * v
        return result

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.dimension, self.dimension), dtype=np.int64)
        for col, column in enumerate(self.columns):
            for row, value in column.items():
                dense[row, col] = value
        return dense


@dataclass
class GroundState:
    """Positive coprime integer kernel vector of the Hamiltonian."""

    kind: BoundaryKind
    size: int
    basis: list[LinkPattern]
    psi: list[int]

    @property
    def z(self) -> int:
        return sum(self.psi)

    @property
    def min_component(self) -> int:
        return min(self.psi)

    @property
    def max_component(self) -> int:
        return max(self.psi)

    def component(self, pattern: LinkPattern) -> int:
        return self.psi[self.basis.index(pattern)]


def build_hamiltonian(kind: BoundaryKind, size: int, max_sites: int | None = None) -> Hamiltonian:
    """
    Assemble H = sum_i (1 - e_i) with column alpha holding the images e_i alpha.

    Args:
        kind: Boundary kind.
        size: Number of sites L.
        max_sites: Size cap, defaults to the configured one.

    Returns:
        The sparse Hamiltonian.
    """
    cap = settings.max_sites if max_sites is None else max_sites
    kind.half_size(size)
    if size > cap:
        raise BudgetExceededError(
            f"L={size} exceeds the state-space cap L <= {cap} "
            f"({count_link_patterns(kind, size)} patterns)"
        )

    basis = enumerate_link_patterns(kind, size)
    index = {pattern: i for i, pattern in enumerate(basis)}
    sites = generator_sites(kind, size)

    columns: list[dict[int, int]] = []
    for col, pattern in enumerate(basis):
        column: dict[int, int] = {col: len(sites)}
        for i in sites:
            image, _ = apply_ei(pattern, i)
            row = index[image]
            column[row] = column.get(row, 0) - 1
        columns.append({row: value for row, value in column.items() if value != 0})

    logger.debug("hamiltonian kind=%s L=%d dim=%d", kind.value, size, len(basis))
    return Hamiltonian(kind=kind, size=size, basis=basis, columns=columns, index=index)


def solve_ground_state(hamiltonian: Hamiltonian) -> GroundState:
    """
    Exact ground state normalized to coprime positive integers.

    Raises:
        KernelDimensionError: The kernel is not one-dimensional or the lifted
            vector is not positive.
    """

    def in_kernel(vector: list[int]) -> bool:
        return all(v == 0 for v in hamiltonian.apply(vector))

    psi = integer_kernel(hamiltonian.to_dense(), in_kernel)
    if psi is None:
        raise KernelDimensionError(
            f"kernel of H for {hamiltonian.kind.value} L={hamiltonian.size} is not one-dimensional"
        )
    if any(v <= 0 for v in psi):
        raise KernelDimensionError("ground state has non-positive components")

    return GroundState(
        kind=hamiltonian.kind, size=hamiltonian.size, basis=hamiltonian.basis, psi=psi
    )


def genfun_from_ground_state(state: GroundState) -> GenFun:
    """
    Collect psi_alpha by the number of loops formed against the reference state.

    The loop count is traced directly, so patterns with an enclosed defect are
    handled too. On every other pattern it equals the number of odd sites
    opening to the right (`loops_right_openings`).
    """
    coeffs = [0] * (state.size // 2 + 1)
    for pattern, weight in zip(state.basis, state.psi):
        coeffs[boundary_loops(pattern)] += weight
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return GenFun(kind=state.kind, size=state.size, coeffs=tuple(coeffs), z=state.z)


def genfun_oracle(kind: BoundaryKind, size: int, max_sites: int | None = None) -> GenFun:
    """Brute-force Z_L F_L(x) from the ground state."""
    state = solve_ground_state(build_hamiltonian(kind, size, max_sites))
    return genfun_from_ground_state(state)
