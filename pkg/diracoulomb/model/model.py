"""Scaling, charge conjugation and spherical bookkeeping."""

from __future__ import annotations

import math
from dataclasses import replace
from typing import Tuple

import numpy as np
from numpy.typing import ArrayLike

from diracoulomb.errors import DomainError, ForbiddenState, ReasonCode
from diracoulomb.model.types import PotentialConfig, QuantumNumbers, ScaledState
from diracoulomb.specfun.laguerre import FloatOrArray

GAMMA_FLOOR = 0.5


def effective_kappa(q: QuantumNumbers, cfg: PotentialConfig) -> float:
    """kbar = k - a."""
    return q.k - cfg.a


def gamma_exponent(kbar: float, cfg: PotentialConfig) -> float:
    """
    Near-origin exponent gamma = sqrt(kbar^2 - alpha_sigma * alpha_delta).

    Raises:
        ForbiddenState: GammaTooSmall unless kbar^2 > 1/4 + alpha_sigma * alpha_delta.
    """

    radicand = kbar * kbar - cfg.alpha_sigma * cfg.alpha_delta
    if radicand <= GAMMA_FLOOR**2:
        raise ForbiddenState(
            ReasonCode.GAMMA_TOO_SMALL,
            f"gamma^2 = {radicand:.17g} does not exceed 1/4 for kbar = {kbar:.17g}.",
            {"kbar": kbar, "gamma_squared": radicand},
        )
    return math.sqrt(radicand)


def lambda_squared(E: float, cfg: PotentialConfig) -> float:
    """1 + bbar^2 - E^2, summed as (1 - E)(1 + E) + bbar^2 to limit cancellation near the edge."""
    return (1.0 - E) * (1.0 + E) + cfg.bbar * cfg.bbar


def decay_rate(E: float, cfg: PotentialConfig) -> float:
    """lambda = sqrt(1 + bbar^2 - E^2) for a bound energy."""

    lam_squared = lambda_squared(E, cfg)
    if lam_squared <= 0.0:
        raise DomainError(
            f"E = {E:.17g} lies outside the bound-state window |E| < {cfg.continuum_edge:.17g}."
        )
    return math.sqrt(lam_squared)


def scaled_state(cfg: PotentialConfig, q: QuantumNumbers, E: float) -> ScaledState:
    kbar = effective_kappa(q, cfg)
    gamma = gamma_exponent(kbar, cfg)
    return ScaledState(
        kbar=kbar,
        gamma=gamma,
        xi=q.n_f + gamma,
        E=E,
        lam=decay_rate(E, cfg),
        bbar=cfg.bbar,
    )


def scale_radius(rho: ArrayLike, s: ScaledState) -> FloatOrArray:
    """rho_tilde = 2 lambda (m rho), with rho given as the dimensionless m rho."""

    rho_arr = np.asarray(rho, dtype=np.float64)
    if np.any(rho_arr < 0.0):
        raise DomainError("rho must be non-negative.")
    scaled = 2.0 * s.lam * rho_arr
    return float(scaled) if scaled.ndim == 0 else scaled


def charge_conjugate(
    cfg: PotentialConfig, q: QuantumNumbers
) -> Tuple[PotentialConfig, QuantumNumbers]:
    """
    Map the problem to its charge conjugate.

    k -> -k and U -> -U, while V_Delta -> -V_Sigma and V_Sigma -> -V_Delta.
    A state at E of the original problem appears at -E of the image with
    g and f exchanged.
    """

    conjugate_cfg = PotentialConfig(
        alpha_sigma=-cfg.alpha_delta,
        alpha_delta=-cfg.alpha_sigma,
        a=-cfg.a,
        b=-cfg.b,
        m=cfg.m,
    )
    return conjugate_cfg, replace(q, two_k=-q.two_k)


def map_to_spherical(k_s: int) -> int:
    """
    Return the internal doubled k that solves the spherical problem for k_s.

    The spherical system equals the circular one at k = -k_s.

    Raises:
        DomainError: If k_s is zero or not an integer.
    """

    if isinstance(k_s, bool) or not isinstance(k_s, int):
        raise DomainError(f"k_s must be an integer, got {k_s!r}.")
    if k_s == 0:
        raise DomainError("k_s = 0 is not an eigenvalue of the spherical spin-orbit operator.")
    return -2 * k_s


def spinor_ratios(s: ScaledState) -> Tuple[float, float]:
    """
    Return (sigma, delta) = ((lambda - bbar)/(1 - E), (lambda + bbar)/(1 + E)).

    Each ratio is evaluated in whichever of its two equivalent forms has
    the larger denominator, using (lambda - bbar)(lambda + bbar) = (1 - E)(1 + E),
    so both stay finite at E = +1 (bbar > 0) and E = -1 (bbar < 0). A
    ratio with both denominators zero is returned as infinity.
    """

    return (
        _stable_ratio(s.lam - s.bbar, 1.0 - s.E, 1.0 + s.E, s.lam + s.bbar),
        _stable_ratio(s.lam + s.bbar, 1.0 + s.E, 1.0 - s.E, s.lam - s.bbar),
    )


def _stable_ratio(num: float, den: float, alt_num: float, alt_den: float) -> float:
    # num / den == alt_num / alt_den
    if abs(den) >= abs(alt_den):
        return num / den if den != 0.0 else math.inf
    return alt_num / alt_den
