"""Tests for the Hamiltonian, its ground state and exact linear algebra."""

from fractions import Fraction

import numpy as np
import pytest

from app.combinatorics import (
    BoundaryKind,
    LinkPattern,
    boundary_loops,
    is_dyck_presentable,
    loops_right_openings,
    reference_pattern,
    reflect,
    rotate,
)
from app.core.config import Settings
from app.core.errors import BudgetExceededError, ParityMismatchError
from app.engine.groundstate import (
    build_hamiltonian,
    genfun_from_ground_state,
    genfun_oracle,
    solve_ground_state,
)
from app.exact.linalg import bareiss_determinant, integer_kernel, primes_below, rational_reconstruct
from app.exact.numbers import asm
from app.reference.small_sizes import SMALL_SIZES

PE, PO = BoundaryKind.PERIODIC_EVEN, BoundaryKind.PERIODIC_ODD
RE, RO = BoundaryKind.REFLECTING_EVEN, BoundaryKind.REFLECTING_ODD


class TestLinearAlgebra:
    """Test fraction-free determinants and modular kernels."""

    def test_determinant(self):
        """Test a small determinant."""
        assert bareiss_determinant([[2, 1], [1, 3]]) == 5
        assert bareiss_determinant([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3

    def test_determinant_pivot_swap(self):
        """Test that a zero pivot is swapped with a sign change."""
        assert bareiss_determinant([[0, 1], [1, 0]]) == -1

    def test_singular(self):
        """Test that a singular matrix has determinant zero."""
        assert bareiss_determinant([[1, 2], [2, 4]]) == 0

    def test_primes(self):
        """Test that primes are listed downwards from the ceiling."""
        primes = list(primes_below(30))[:3]
        assert primes == [29, 23, 19]

    def test_rational_reconstruct(self):
        """Test that 2/3 is recovered from its residue modulo 101."""
        residue = 2 * pow(3, -1, 101) % 101
        assert rational_reconstruct(residue, 101) == Fraction(2, 3)

    def test_kernel(self):
        """Test a one-dimensional integer kernel."""
        matrix = np.array([[1, -2], [-1, 2]], dtype=np.int64)

        def verify(v):
            return v[0] - 2 * v[1] == 0

        assert integer_kernel(matrix, verify) == [2, 1]

    def test_full_rank_has_no_kernel(self):
        """Test that a regular matrix gives None."""
        matrix = np.array([[1, 0], [0, 1]], dtype=np.int64)
        assert integer_kernel(matrix, lambda v: False) is None


class TestHamiltonian:
    """Test assembly of the Hamiltonian."""

    @pytest.mark.parametrize("kind,size", [(RE, 6), (RO, 7), (PE, 8), (PO, 7)])
    def test_column_sums_vanish(self, kind, size):
        """Test that every column of H sums to zero."""
        hamiltonian = build_hamiltonian(kind, size)
        assert all(s == 0 for s in hamiltonian.column_sums())

    def test_dimension(self):
        """Test that the basis is the full pattern set."""
        assert build_hamiltonian(PO, 5).dimension == 10
        assert build_hamiltonian(RE, 8).dimension == 14

    def test_dense_matches_sparse(self):
        """Test that to_dense and apply agree."""
        hamiltonian = build_hamiltonian(RE, 6)
        vector = list(range(1, hamiltonian.dimension + 1))
        dense = hamiltonian.to_dense() @ np.array(vector)
        assert dense.tolist() == hamiltonian.apply(vector)

    def test_budget(self):
        """Test that sizes above the cap are refused."""
        with pytest.raises(BudgetExceededError):
            build_hamiltonian(PE, 18, max_sites=16)

    def test_default_cap(self):
        """Test that the configured cap stops at L = 14 and refuses the odd cylinder at L = 15."""
        assert Settings.model_fields["max_sites"].default == 14
        with pytest.raises(BudgetExceededError, match="6435 patterns"):
            build_hamiltonian(PO, 15, max_sites=Settings.model_fields["max_sites"].default)

    def test_parity(self):
        """Test that an odd size is refused for an even kind."""
        with pytest.raises(ParityMismatchError):
            build_hamiltonian(PE, 5)


class TestGroundState:
    """Test exact ground states."""

    def test_strip_four_sites(self):
        """Test the ground state of the even strip at L = 4."""
        state = solve_ground_state(build_hamiltonian(RE, 4))
        nested = LinkPattern.from_pairs(RE, 4, [(1, 4), (2, 3)])
        assert state.component(nested) == 1
        assert state.component(reference_pattern(RE, 4)) == 2
        assert state.z == 3

    def test_cylinder_three_sites(self):
        """Test that all components are equal on the odd cylinder at L = 3."""
        state = solve_ground_state(build_hamiltonian(PO, 3))
        assert state.psi == [1, 1, 1]
        assert state.min_component == state.max_component == 1

    @pytest.mark.parametrize("size", [6, 8, 10])
    def test_cylinder_extreme_components(self, size):
        """Test that cylinder components range from 1 to A_{n-1}, the largest on the reference state."""
        state = solve_ground_state(build_hamiltonian(PE, size))
        assert state.min_component == 1
        assert state.max_component == asm(size // 2 - 1)
        assert state.component(reference_pattern(PE, size)) == state.max_component

    @pytest.mark.parametrize("kind,size", [(PE, 8), (PO, 7)])
    def test_rotation_invariance(self, kind, size):
        """Test that the cylinder ground state is invariant under rotation."""
        state = solve_ground_state(build_hamiltonian(kind, size))
        for pattern in state.basis:
            assert state.component(rotate(pattern)) == state.component(pattern)

    @pytest.mark.parametrize("kind,size", [(RE, 8), (RO, 7)])
    def test_reflection_invariance(self, kind, size):
        """Test that the strip ground state is invariant under reflection."""
        state = solve_ground_state(build_hamiltonian(kind, size))
        for pattern in state.basis:
            assert state.component(reflect(pattern)) == state.component(pattern)


class TestOracle:
    """Test the oracle generating functions against the reference tables."""

    @pytest.mark.parametrize("kind", list(BoundaryKind))
    def test_small_sizes(self, kind):
        """Test every reference row up to L = 11."""
        for row in SMALL_SIZES[kind]:
            if row.size > 11:
                continue
            genfun = genfun_oracle(kind, row.size)
            assert genfun.coeffs == row.coeffs
            assert genfun.z == row.z
            assert genfun.is_normalized()

    @pytest.mark.slow
    @pytest.mark.parametrize("kind", list(BoundaryKind))
    def test_large_sizes(self, kind):
        """Test the reference rows at L = 12..14."""
        for row in SMALL_SIZES[kind]:
            if row.size <= 11:
                continue
            genfun = genfun_oracle(kind, row.size)
            assert genfun.coeffs == row.coeffs

    def test_genfun_from_ground_state(self):
        """Test that coefficients are grouped by boundary loops."""
        state = solve_ground_state(build_hamiltonian(RE, 4))
        genfun = genfun_from_ground_state(state)
        assert genfun.coeffs == (0, 1, 2)
        assert genfun.z == 3

    @pytest.mark.parametrize("kind,size", [(RE, 8), (RO, 9), (PE, 10)])
    def test_loops_match_right_openings(self, kind, size):
        """Test that grouping by odd sites opening right gives the same coefficients."""
        state = solve_ground_state(build_hamiltonian(kind, size))
        coeffs = [0] * (size // 2 + 1)
        for pattern, weight in zip(state.basis, state.psi):
            assert is_dyck_presentable(pattern)
            assert boundary_loops(pattern) == loops_right_openings(pattern)
            coeffs[loops_right_openings(pattern)] += weight
        while coeffs[-1] == 0:
            coeffs.pop()
        assert tuple(coeffs) == genfun_from_ground_state(state).coeffs
