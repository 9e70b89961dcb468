"""Closed-form radial functions and bound-state assembly."""

from diracoulomb.wavefunction.bound_state import BoundState, bound_states, build_bound_state
from diracoulomb.wavefunction.coefficients import (
    RadialCoefficients,
    a_plus_minus,
    boundary_coefficients,
    decoupling_ratio,
    normalization,
    radial_coefficients,
)
from diracoulomb.wavefunction.radial import (
    envelope,
    polynomial_weights,
    radial_f,
    radial_g,
    reduced_derivatives,
    reduced_parts,
)

__all__ = [
    "BoundState",
    "RadialCoefficients",
    "a_plus_minus",
    "bound_states",
    "boundary_coefficients",
    "build_bound_state",
    "decoupling_ratio",
    "envelope",
    "normalization",
    "polynomial_weights",
    "radial_coefficients",
    "radial_f",
    "radial_g",
    "reduced_derivatives",
    "reduced_parts",
]
