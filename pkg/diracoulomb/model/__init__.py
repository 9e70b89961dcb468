"""Domain types and transformations."""

from diracoulomb.model.model import (
    charge_conjugate,
    decay_rate,
    effective_kappa,
    gamma_exponent,
    lambda_squared,
    map_to_spherical,
    scale_radius,
    scaled_state,
    spinor_ratios,
)
from diracoulomb.model.types import (
    PotentialConfig,
    QuantumNumbers,
    ScaledState,
    Sector,
    SymmetryMode,
)

__all__ = [
    "PotentialConfig",
    "QuantumNumbers",
    "ScaledState",
    "Sector",
    "SymmetryMode",
    "charge_conjugate",
    "decay_rate",
    "effective_kappa",
    "gamma_exponent",
    "lambda_squared",
    "map_to_spherical",
    "scale_radius",
    "scaled_state",
    "spinor_ratios",
]
