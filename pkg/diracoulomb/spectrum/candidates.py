"""Closed-form energy candidates and the spurious-root filter."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from diracoulomb.model.model import (
    decay_rate,
    effective_kappa,
    gamma_exponent,
    lambda_squared,
    spinor_ratios,
)
from diracoulomb.model.types import PotentialConfig, QuantumNumbers, ScaledState, Sector

logger = logging.getLogger(__name__)

FILTER_TOLERANCE = 1e-9
CONTINUUM_TOLERANCE = 1e-12
STRENGTH_EPSILON = 1e-15
POLISH_STEPS = 4
POLISH_WINDOW = 1e-8


@dataclass(frozen=True)
class EnergyCandidates:
    """
    Both roots of the squared energy equation for one (k, n_f).

    ``kbar`` and ``xi`` record the values the roots were computed with so
    that the filter substitutes into the same equation.
    """

    e_plus: Optional[float]
    e_minus: Optional[float]
    discriminant: float
    kbar: float
    xi: float

    def roots(self) -> List[Tuple[Sector, float]]:
        found = []
        if self.e_plus is not None:
            found.append((Sector.PARTICLE, self.e_plus))
        if self.e_minus is not None:
            found.append((Sector.ANTIPARTICLE, self.e_minus))
        return found


def energy_equation_sides(cfg: PotentialConfig, kbar: float, xi: float, E: float) -> Tuple[float, float]:
    """Return (2 xi lambda, 2 kbar bbar + alpha_delta - alpha_sigma - (alpha_delta + alpha_sigma) E)."""

    lam_squared = lambda_squared(E, cfg)
    lhs = 2.0 * xi * math.sqrt(lam_squared) if lam_squared > 0.0 else 0.0
    rhs = 2.0 * kbar * cfg.bbar + cfg.alpha_delta - cfg.alpha_sigma - cfg.strength_sum * E
    return lhs, rhs


def solve_energy_equation(cfg: PotentialConfig, kbar: float, xi: float) -> EnergyCandidates:
    """Roots of the squared energy equation for explicit kbar and xi."""

    s = cfg.strength_sum
    c0 = 2.0 * kbar * cfg.bbar + cfg.alpha_delta - cfg.alpha_sigma
    denominator = s * s + 4.0 * xi * xi
    discriminant = denominator * (1.0 + cfg.bbar**2) - c0 * c0
    if discriminant < 0.0:
        logger.debug("negative discriminant %.3e for kbar=%s xi=%s", discriminant, kbar, xi)
        return EnergyCandidates(None, None, discriminant, kbar, xi)

    root = 2.0 * xi * math.sqrt(discriminant)
    return EnergyCandidates(
        e_plus=(s * c0 + root) / denominator,
        e_minus=(s * c0 - root) / denominator,
        discriminant=discriminant,
        kbar=kbar,
        xi=xi,
    )


def energy_candidates(cfg: PotentialConfig, q: QuantumNumbers) -> EnergyCandidates:
    """
    Return both roots E+ >= E- of the squared energy equation.

    Raises:
        ForbiddenState: GammaTooSmall when the state violates gamma > 1/2.
    """

    kbar = effective_kappa(q, cfg)
    gamma = gamma_exponent(kbar, cfg)
    return solve_energy_equation(cfg, kbar, q.n_f + gamma)


def polish_root(
    E: float,
    cfg: PotentialConfig,
    kbar: float,
    xi: float,
    *,
    window: float = POLISH_WINDOW,
    continuum_tolerance: float = CONTINUUM_TOLERANCE,
) -> float:
    """
    Refine a closed-form root with safeguarded Newton steps on 2 xi lambda - rhs.

    A step is kept only if it lowers |residual| without leaving ``window``
    around the closed-form root or crossing the continuum edge. The best
    value seen so far is returned, starting with E itself.
    """

    edge = cfg.continuum_edge
    s = cfg.strength_sum

    def gap(energy: float) -> Tuple[float, float]:
        lhs, rhs = energy_equation_sides(cfg, kbar, xi, energy)
        return lhs - rhs, math.sqrt(max(lambda_squared(energy, cfg), 0.0))

    best = E
    best_gap, lam = gap(E)
    reach = window * max(1.0, abs(E))
    for _ in range(POLISH_STEPS):
        if best_gap == 0.0 or lam == 0.0:
            break
        slope = s - 2.0 * xi * best / lam
        if slope == 0.0 or not math.isfinite(slope):
            break
        trial = best - best_gap / slope
        if abs(trial - E) > reach or edge - abs(trial) <= continuum_tolerance:
            break
        trial_gap, trial_lam = gap(trial)
        if trial_lam == 0.0 or abs(trial_gap) / trial_lam >= abs(best_gap) / lam:
            break
        best, best_gap, lam = trial, trial_gap, trial_lam
    return best


def filter_spurious(
    candidates: EnergyCandidates,
    cfg: PotentialConfig,
    q: QuantumNumbers,
    *,
    tolerance: float = FILTER_TOLERANCE,
    continuum_tolerance: float = CONTINUUM_TOLERANCE,
) -> List[Tuple[Sector, float]]:
    """
    Keep the roots that solve the unsquared energy equation.

    A root survives when its right-hand side is non-negative and both
    sides agree to ``tolerance``. Roots on the continuum edge are dropped.
    At E = -1 a root needs bbar < 0, at E = +1 it needs bbar > 0.
    Survivors away from E = +-1 are refined with polish_root.

    Args:
        candidates: Output of energy_candidates.
        cfg: Potential strengths.
        q: Quantum numbers the candidates belong to.
        tolerance: Absolute residual tolerance of the unsquared equation.
        continuum_tolerance: Distance to sqrt(1 + bbar^2) treated as the edge.

    Returns:
        (Sector, E) pairs, particle first. Empty when nothing binds.
    """

    edge = cfg.continuum_edge
    survivors = []
    for sector, energy in candidates.roots():
        if edge - abs(energy) <= continuum_tolerance:
            logger.warning(
                "Rejecting %s root E=%r for k=%s n_f=%d: on the continuum edge %r",
                sector.value,
                energy,
                q.label,
                q.n_f,
                edge,
            )
            continue
        lhs, rhs = energy_equation_sides(cfg, candidates.kbar, candidates.xi, energy)
        if rhs < -tolerance or abs(lhs - rhs) > tolerance:
            logger.debug(
                "Discarding spurious %s root E=%r (lhs=%r, rhs=%r)", sector.value, energy, lhs, rhs
            )
            continue
        if abs(energy + 1.0) <= continuum_tolerance and cfg.bbar >= 0.0:
            logger.debug("Discarding E=-1 root with bbar=%r >= 0", cfg.bbar)
            continue
        if abs(energy - 1.0) <= continuum_tolerance and cfg.bbar <= 0.0:
            logger.debug("Discarding E=+1 root with bbar=%r <= 0", cfg.bbar)
            continue
        if abs(abs(energy) - 1.0) > continuum_tolerance:
            energy = polish_root(
                energy, cfg, candidates.kbar, candidates.xi, continuum_tolerance=continuum_tolerance
            )
        survivors.append((sector, energy))
    return survivors


def boundary_state_allowed(cfg: PotentialConfig, q: QuantumNumbers, sign: int) -> bool:
    """
    Whether the isolated state E = sign exists at n_f = 0.

    E = +1 needs bbar > 0, alpha_sigma = 0 and kbar > 1/2.
    E = -1 needs bbar < 0, alpha_delta = 0 and kbar < -1/2.
    """

    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}.")
    if q.n_f != 0:
        return False
    kbar = effective_kappa(q, cfg)
    if sign == 1:
        return cfg.bbar > 0.0 and abs(cfg.alpha_sigma) < STRENGTH_EPSILON and kbar > 0.5
    return cfg.bbar < 0.0 and abs(cfg.alpha_delta) < STRENGTH_EPSILON and kbar < -0.5


def quantization_residual(E: float, cfg: PotentialConfig, q: QuantumNumbers) -> float:
    """gamma - kbar bbar / lambda + [alpha_sigma (E+1) + alpha_delta (E-1)] / (2 lambda) + n_f."""

    kbar = effective_kappa(q, cfg)
    gamma = gamma_exponent(kbar, cfg)
    lam = decay_rate(E, cfg)
    return (
        gamma
        - kbar * cfg.bbar / lam
        + (cfg.alpha_sigma * (E + 1.0) + cfg.alpha_delta * (E - 1.0)) / (2.0 * lam)
        + q.n_f
    )


def kbar_a_plus_degenerate(cfg: PotentialConfig, s: ScaledState, n_f: int) -> bool:
    """
    True when a root belongs to the k + A+ = 0 branch.

    At n_f = 0 the quantization condition factorizes into
    (kbar + A+) * [A+ - kbar + (bbar / lambda)(A- + gamma)], and a root
    whose first factor is the smaller one solves only the k + A+ = 0
    branch, which has no bound state.
    """

    sigma, delta = spinor_ratios(s)
    sigma_term = cfg.alpha_sigma * sigma if cfg.alpha_sigma else 0.0
    delta_term = cfg.alpha_delta * delta if cfg.alpha_delta else 0.0
    a_plus = -0.5 * (sigma_term + delta_term)
    a_minus = -0.5 * (sigma_term - delta_term)
    first = s.kbar + a_plus
    if not math.isfinite(first) or abs(first) < CONTINUUM_TOLERANCE:
        return True
    if n_f != 0:
        return False
    second = a_plus - s.kbar + (s.bbar / s.lam) * (a_minus + s.gamma)
    return abs(first) < abs(second)
