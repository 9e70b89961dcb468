"""Numerical cross-checks of the closed-form solutions."""

from diracoulomb.oracle.checks import (
    StateVerification,
    perturb_energy,
    polynomial_check,
    quadrature_norm,
    residual_check,
    residual_grid,
    shooting_bracket,
    verify_state,
)
from diracoulomb.oracle.shooting import (
    ShootingConfig,
    find_eigenvalues,
    integrate_radial,
    shooting_config_for,
)

__all__ = [
    "ShootingConfig",
    "StateVerification",
    "find_eigenvalues",
    "integrate_radial",
    "perturb_energy",
    "polynomial_check",
    "quadrature_norm",
    "residual_check",
    "residual_grid",
    "shooting_bracket",
    "shooting_config_for",
    "verify_state",
]
