"""Exact Dirac bound states for generalized Coulomb potentials."""

from diracoulomb.cases import detect_case, get_spectrum_function
from diracoulomb.config import Settings, load_settings
from diracoulomb.errors import (
    DiracCoulombError,
    DomainError,
    ForbiddenState,
    IntegrationError,
    NonConvergenceError,
    ReasonCode,
)
from diracoulomb.model import PotentialConfig, QuantumNumbers, Sector, SymmetryMode
from diracoulomb.solver import AsyncCoulombSolver, CoulombSolver, SectorResult
from diracoulomb.spectrum import classify_regime, energy_candidates, filter_spurious
from diracoulomb.wavefunction import BoundState, bound_states, build_bound_state

__version__ = "1.0.0"

__all__ = [
    "AsyncCoulombSolver",
    "BoundState",
    "CoulombSolver",
    "DiracCoulombError",
    "DomainError",
    "ForbiddenState",
    "IntegrationError",
    "NonConvergenceError",
    "PotentialConfig",
    "QuantumNumbers",
    "ReasonCode",
    "Sector",
    "SectorResult",
    "Settings",
    "SymmetryMode",
    "__version__",
    "bound_states",
    "build_bound_state",
    "classify_regime",
    "detect_case",
    "energy_candidates",
    "filter_spurious",
    "get_spectrum_function",
    "load_settings",
]
