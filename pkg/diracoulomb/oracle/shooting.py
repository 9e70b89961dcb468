"""Shooting eigenvalue search for the first-order radial system."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from typing import Any, List, Optional, Tuple

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import bisect

from diracoulomb.errors import DomainError, IntegrationError
from diracoulomb.model.model import gamma_exponent
from diracoulomb.model.types import PotentialConfig

logger = logging.getLogger(__name__)

SHOOTING_RTOL = 1e-12
SHOOTING_ATOL = 1e-14
SHOOTING_GRID_POINTS = 400
SHOOTING_XTOL = 1e-10
SHOOTING_MAX_BISECTIONS = 200


@dataclass(frozen=True)
class ShootingConfig:
    """
    Integration range (in m rho), energy bracket and solver tolerances.

    ``method`` is any embedded-error method accepted by ``solve_ivp``.
    """

    rho_min: float
    rho_max: float
    bracket: Tuple[float, float]
    rtol: float = SHOOTING_RTOL
    atol: float = SHOOTING_ATOL
    grid_points: int = SHOOTING_GRID_POINTS
    xtol: float = SHOOTING_XTOL
    max_bisections: int = SHOOTING_MAX_BISECTIONS
    method: str = "DOP853"

    def __post_init__(self) -> None:
        if not 0.0 < self.rho_min < self.rho_max:
            raise ValueError("rho_min and rho_max must satisfy 0 < rho_min < rho_max.")
        low, high = self.bracket
        if not low < high:
            raise ValueError("bracket must satisfy E_lo < E_hi.")
        if self.grid_points < 2:
            raise ValueError("grid_points must be at least 2.")
        if self.rtol <= 0.0 or self.atol <= 0.0:
            raise ValueError("rtol and atol must be positive.")

    def check_window(self, cfg: PotentialConfig) -> None:
        edge = cfg.continuum_edge
        low, high = self.bracket
        if low <= -edge or high >= edge:
            raise DomainError(
                f"bracket ({low!r}, {high!r}) must lie inside (-{edge!r}, {edge!r})."
            )


def shooting_config_for(
    cfg: PotentialConfig,
    kbar: float,
    bracket: Tuple[float, float],
    *,
    n_f_max: int = 5,
    **overrides: Any,
) -> ShootingConfig:
    """
    Default integration range for a bracket.

    rho_min = 1e-4 / (2 sqrt(1 + bbar^2)) and
    rho_max = (40 + 12 (n_f_max + gamma)) / (2 lambda_min), with lambda_min
    taken at the bracket end nearest the continuum.
    """

    edge = cfg.continuum_edge
    gamma = gamma_exponent(kbar, cfg)
    low, high = bracket
    outer = max(abs(low), abs(high))
    if outer >= edge:
        raise DomainError(f"bracket ({low!r}, {high!r}) must lie inside (-{edge!r}, {edge!r}).")
    lam_min = math.sqrt(edge * edge - outer * outer)
    shoot = ShootingConfig(
        rho_min=1e-4 / (2.0 * edge),
        rho_max=(40.0 + 12.0 * (n_f_max + gamma)) / (2.0 * lam_min),
        bracket=(float(low), float(high)),
    )
    return replace(shoot, **overrides) if overrides else shoot


def _start_angle(cfg: PotentialConfig, kbar: float, gamma: float) -> float:
    # (g, f) ~ rho^gamma (u, v) near the origin; both forms are parallel
    first = (cfg.alpha_delta, kbar - gamma)
    second = (gamma + kbar, cfg.alpha_sigma)
    u, v = first if math.hypot(*first) >= math.hypot(*second) else second
    return math.atan2(v, u)


def _decay_angle(cfg: PotentialConfig, E: float) -> float:
    lam = math.sqrt(1.0 + cfg.bbar**2 - E * E)
    if cfg.bbar >= 0.0:
        return math.atan2(-(1.0 - E), lam + cfg.bbar)
    return math.atan2(cfg.bbar - lam, 1.0 + E)


def integrate_radial(cfg: PotentialConfig, kbar: float, E: float, shoot: ShootingConfig) -> float:
    """
    Signed decay mismatch at energy E.

    Integrates the Pruefer angle theta = atan2(f, g) of the radial system
    from the Frobenius direction at rho_min to rho_max and returns
    sin(theta - theta_decay), theta_decay being the angle of the decaying
    asymptotic solution. The value changes sign once per eigenvalue.

    Raises:
        DomainError: If E lies outside the bound-state window.
        IntegrationError: If the integrator fails.
    """

    edge = cfg.continuum_edge
    if not abs(E) < edge:
        raise DomainError(f"E={E!r} lies outside (-{edge!r}, {edge!r}).")
    gamma = gamma_exponent(kbar, cfg)
    bbar = cfg.bbar
    alpha_sigma = cfg.alpha_sigma
    alpha_delta = cfg.alpha_delta

    def rhs(x: float, theta: np.ndarray) -> np.ndarray:
        c = math.cos(theta[0])
        s = math.sin(theta[0])
        m11 = kbar / x - bbar
        m12 = 1.0 + E - alpha_delta / x
        m21 = 1.0 - E + alpha_sigma / x
        m22 = -kbar / x + bbar
        return np.array([c * c * m21 - s * s * m12 + s * c * (m22 - m11)])

    sol = solve_ivp(
        rhs,
        (shoot.rho_min, shoot.rho_max),
        [_start_angle(cfg, kbar, gamma)],
        method=shoot.method,
        rtol=shoot.rtol,
        atol=shoot.atol,
    )
    if not sol.success:
        raise IntegrationError(sol.status, "IntegrationFailed", str(sol.message))
    return math.sin(float(sol.y[0, -1]) - _decay_angle(cfg, E))


def find_eigenvalues(
    cfg: PotentialConfig,
    kbar: float,
    shoot: ShootingConfig,
    count: int,
) -> List[float]:
    """
    Scan the bracket on ``grid_points`` energies and bisect every sign change.

    Returns:
        Up to ``count`` eigenvalues in ascending order; empty if none is bracketed.
    """

    shoot.check_window(cfg)
    if count <= 0:
        return []

    energies = np.linspace(shoot.bracket[0], shoot.bracket[1], shoot.grid_points)
    values = [integrate_radial(cfg, kbar, float(E), shoot) for E in energies]

    def mismatch(E: float) -> float:
        return integrate_radial(cfg, kbar, E, shoot)

    found: List[float] = []
    previous_root: Optional[float] = None
    for i in range(len(energies) - 1):
        low, high = float(energies[i]), float(energies[i + 1])
        v_low, v_high = values[i], values[i + 1]
        root = None
        if v_low == 0.0:
            root = low
        elif v_low * v_high < 0.0:
            root = bisect(mismatch, low, high, xtol=shoot.xtol, maxiter=shoot.max_bisections)
        if root is None or (previous_root is not None and abs(root - previous_root) <= shoot.xtol):
            continue
        logger.debug("eigenvalue bracketed in [%r, %r] -> %r", low, high, root)
        found.append(float(root))
        previous_root = root
        if len(found) >= count:
            break
    return sorted(found)
