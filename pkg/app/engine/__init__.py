"""Ground-state oracle, exact sampling and expansion fitting."""

from app.engine.fitter import (
    BasisSpec,
    FitProtocol,
    FitReport,
    FittedCoefficient,
    coefficient_name,
    fit_expansion,
)
from app.engine.groundstate import (
    GroundState,
    Hamiltonian,
    build_hamiltonian,
    genfun_from_ground_state,
    genfun_oracle,
    solve_ground_state,
)
from app.engine.sampling import Parity, Sample, SampleSeries, collect_series

__all__ = [
    "Hamiltonian",
    "GroundState",
    "build_hamiltonian",
    "solve_ground_state",
    "genfun_from_ground_state",
    "genfun_oracle",
    "Parity",
    "Sample",
    "SampleSeries",
    "collect_series",
    "BasisSpec",
    "FitProtocol",
    "FitReport",
    "FittedCoefficient",
    "coefficient_name",
    "fit_expansion",
]
