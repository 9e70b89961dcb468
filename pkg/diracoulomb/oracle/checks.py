"""Residual, normalization and shooting cross-checks of closed-form states."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from typing import Any, Dict, Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import roots_genlaguerre

from diracoulomb.errors import ForbiddenState
from diracoulomb.model.model import decay_rate
from diracoulomb.model.types import QuantumNumbers, Sector
from diracoulomb.oracle.shooting import find_eigenvalues, shooting_config_for
from diracoulomb.specfun.gammafn import log_factorial, log_gamma_ratio
from diracoulomb.specfun.kummer import KUMMER_MAX_TERMS, KUMMER_TOLERANCE, kummer_m
from diracoulomb.spectrum.candidates import energy_candidates
from diracoulomb.wavefunction.bound_state import BoundState
from diracoulomb.wavefunction.radial import evaluation_cutoff, reduced_derivatives, reduced_parts

logger = logging.getLogger(__name__)

RESIDUAL_TOLERANCE = 1e-8
NORM_TOLERANCE = 1e-10
EIGENVALUE_TOLERANCE = 1e-7
POLYNOMIAL_TOLERANCE = 1e-10
POLYNOMIAL_POINTS = 9
VERIFY_GRID_POINTS = 16


def residual_grid(state: BoundState, points: int = 400) -> np.ndarray:
    """Log-spaced rho_tilde grid on [1e-3, 40 (n_f + gamma)]."""
    return np.geomspace(1e-3, evaluation_cutoff(state.coefficients), points)


def residual_check(state: BoundState, grid: ArrayLike) -> float:
    """
    Largest relative residual of the radial equations over ``grid`` (rho_tilde).

    Both equations are divided by the envelope rho^gamma e^(-rho/2) and
    each point is measured against its largest individual term.
    """

    rho = np.asarray(grid, dtype=np.float64)
    s = state.state
    cfg = state.config
    qg, qf = (np.asarray(v, dtype=np.float64) for v in reduced_parts(rho, state.coefficients))
    dqg, dqf = (np.asarray(v, dtype=np.float64) for v in reduced_derivatives(rho, state.coefficients))

    half_tensor = s.bbar / (2.0 * s.lam)
    upper_terms = [
        s.gamma * qg / rho,
        -0.5 * qg,
        dqg,
        -s.kbar * qg / rho,
        half_tensor * qg,
        -(1.0 + s.E) / (2.0 * s.lam) * qf,
        cfg.alpha_delta * qf / rho,
    ]
    lower_terms = [
        s.gamma * qf / rho,
        -0.5 * qf,
        dqf,
        s.kbar * qf / rho,
        -half_tensor * qf,
        -(1.0 - s.E) / (2.0 * s.lam) * qg,
        -cfg.alpha_sigma * qg / rho,
    ]

    worst = 0.0
    for terms in (upper_terms, lower_terms):
        stacked = np.vstack(terms)
        scale = np.max(np.abs(stacked), axis=0)
        residual = np.abs(np.sum(stacked, axis=0))
        mask = scale > 0.0
        if np.any(mask):
            worst = max(worst, float(np.max(residual[mask] / scale[mask])))
    return worst


def quadrature_norm(state: BoundState, order: Optional[int] = None) -> float:
    """
    Integral of g^2 + f^2 over rho_tilde by generalized Gauss-Laguerre quadrature
    with weight rho^(2 gamma) e^(-rho). A normalized state gives 2 lambda.
    """

    coeff = state.coefficients
    if order is None:
        order = 2 * coeff.n_f + math.ceil(2.0 * coeff.gamma) + 20
    nodes, weights = roots_genlaguerre(order, 2.0 * coeff.gamma)
    qg, qf = (np.asarray(v, dtype=np.float64) for v in reduced_parts(nodes, coeff))
    return float(np.sum(weights * (qg * qg + qf * qf)))


def polynomial_check(
    state: BoundState,
    points: int = POLYNOMIAL_POINTS,
    *,
    tolerance: float = KUMMER_TOLERANCE,
    max_terms: int = KUMMER_MAX_TERMS,
) -> float:
    """
    Largest gap between M(-n, 2 gamma + 1, x) and its Laguerre form over the
    oscillatory region x in [0, 2 (n + 2 gamma + 1)].

    Each gap is measured against M(-n, 2 gamma + 1, -x), the sum of the
    absolute series terms.
    """

    coeff = state.coefficients
    n = coeff.n_f
    alpha = 2.0 * coeff.gamma
    log_prefactor = log_factorial(n) + log_gamma_ratio(alpha + 1.0, n + alpha + 1.0)
    worst = 0.0
    for x in np.linspace(0.0, 2.0 * (n + alpha + 1.0), points):
        series = kummer_m(-n, alpha + 1.0, float(x), tolerance=tolerance, max_terms=max_terms)
        closed = math.exp(log_prefactor) * coeff.laguerre_params(float(x)).evaluate()
        scale = kummer_m(-n, alpha + 1.0, -float(x), tolerance=tolerance, max_terms=max_terms)
        worst = max(worst, abs(series - closed) / max(1.0, scale))
    return worst


def perturb_energy(state: BoundState, delta: float) -> BoundState:
    """Copy of ``state`` with E shifted by ``delta`` and lambda updated, coefficients kept."""

    if delta == 0.0:
        return state
    energy = state.state.E + delta
    shifted = replace(state.state, E=energy, lam=decay_rate(energy, state.config))
    return replace(state, state=shifted)


@dataclass(frozen=True)
class StateVerification:
    numbers: QuantumNumbers
    sector: str
    energy: float
    residual: float
    norm_error: float
    polynomial_error: float
    eigenvalue_error: Optional[float]
    passed: bool

    def as_dict(self) -> Dict[str, Any]:
        return {
            "k": self.numbers.label,
            "n_f": self.numbers.n_f,
            "sector": self.sector,
            "E": self.energy,
            "residual": self.residual,
            "norm_error": self.norm_error,
            "polynomial_error": self.polynomial_error,
            "eigenvalue_error": self.eigenvalue_error,
            "passed": self.passed,
        }


def _neighbour_energy(state: BoundState, n_f: int) -> Optional[float]:
    q = QuantumNumbers(n_f=n_f, two_k=state.numbers.two_k, mode=state.numbers.mode)
    try:
        candidates = energy_candidates(state.config, q)
    except ForbiddenState:
        return None
    for sector, energy in candidates.roots():
        if sector is state.sector:
            return energy
    return None


def shooting_bracket(state: BoundState) -> Tuple[float, float]:
    """
    Energy bracket holding this level only.

    Its ends sit halfway to the neighbouring roots of the same branch; at
    n_f = 0 the inner end mirrors the outer one.
    """

    energy = state.energy
    edge = state.config.continuum_edge
    towards_edge = edge if state.sector is Sector.PARTICLE else -edge

    outer = _neighbour_energy(state, state.numbers.n_f + 1)
    if outer is None or (outer - energy) * (towards_edge - energy) <= 0.0:
        outer = towards_edge
    outer_mid = 0.5 * (energy + outer)

    inner = _neighbour_energy(state, state.numbers.n_f - 1) if state.numbers.n_f > 0 else None
    if inner is None or (inner - energy) * (outer_mid - energy) >= 0.0:
        inner_mid = energy - (outer_mid - energy)
    else:
        inner_mid = 0.5 * (energy + inner)

    low, high = sorted((inner_mid, outer_mid))
    return max(low, 0.5 * (energy - edge)), min(high, 0.5 * (energy + edge))


def verify_state(
    state: BoundState,
    *,
    energy_shift: float = 0.0,
    grid_points: int = 400,
    shooting_grid_points: int = VERIFY_GRID_POINTS,
    residual_tolerance: float = RESIDUAL_TOLERANCE,
    norm_tolerance: float = NORM_TOLERANCE,
    eigenvalue_tolerance: float = EIGENVALUE_TOLERANCE,
    polynomial_tolerance: float = POLYNOMIAL_TOLERANCE,
    kummer_tolerance: float = KUMMER_TOLERANCE,
    kummer_max_terms: int = KUMMER_MAX_TERMS,
    **shooting_overrides: Any,
) -> StateVerification:
    """
    Run the residual, normalization, Kummer polynomial and (off the E = +-1
    states) shooting checks.

    ``energy_shift`` moves the closed-form energy before checking; it only
    exists to show that the checks fail on a wrong energy.
    """

    bracket = None if state.is_boundary else shooting_bracket(state)
    checked = perturb_energy(state, energy_shift)
    residual = residual_check(checked, residual_grid(checked, grid_points))
    norm_error = abs(quadrature_norm(checked) - 2.0 * checked.state.lam)
    polynomial_error = polynomial_check(
        checked, tolerance=kummer_tolerance, max_terms=kummer_max_terms
    )

    eigenvalue_error: Optional[float] = None
    if bracket is not None:
        shoot = shooting_config_for(
            state.config,
            state.state.kbar,
            bracket,
            n_f_max=state.numbers.n_f + 1,
            grid_points=shooting_grid_points,
            **shooting_overrides,
        )
        found = find_eigenvalues(state.config, state.state.kbar, shoot, count=4)
        eigenvalue_error = min((abs(E - checked.energy) for E in found), default=math.inf)

    passed = (
        residual < residual_tolerance
        and norm_error < norm_tolerance
        and polynomial_error < polynomial_tolerance
        and (eigenvalue_error is None or eigenvalue_error < eigenvalue_tolerance)
    )
    if not passed:
        logger.info(
            "verification failed for k=%s n_f=%d %s: residual=%.3e norm=%.3e eigen=%s",
            state.numbers.label,
            state.numbers.n_f,
            state.sector.value,
            residual,
            norm_error,
            eigenvalue_error,
        )
    return StateVerification(
        numbers=state.numbers,
        sector=state.sector.value,
        energy=checked.energy,
        residual=residual,
        norm_error=norm_error,
        polynomial_error=polynomial_error,
        eigenvalue_error=eigenvalue_error,
        passed=passed,
    )
