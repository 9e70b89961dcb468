"""Validated bound states assembled from the closed forms."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List

import numpy as np
from numpy.typing import ArrayLike

from diracoulomb.errors import ForbiddenState, ReasonCode
from diracoulomb.model.model import scale_radius, scaled_state
from diracoulomb.model.types import PotentialConfig, QuantumNumbers, ScaledState, Sector
from diracoulomb.specfun.laguerre import FloatOrArray
from diracoulomb.spectrum.candidates import (
    CONTINUUM_TOLERANCE,
    FILTER_TOLERANCE,
    boundary_state_allowed,
    energy_candidates,
    filter_spurious,
    kbar_a_plus_degenerate,
)
from diracoulomb.wavefunction.coefficients import (
    RadialCoefficients,
    boundary_coefficients,
    radial_coefficients,
)
from diracoulomb.wavefunction.radial import radial_f, radial_g

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundState:
    config: PotentialConfig
    numbers: QuantumNumbers
    sector: Sector
    state: ScaledState
    coefficients: RadialCoefficients

    @property
    def energy(self) -> float:
        return self.state.E

    @property
    def is_boundary(self) -> bool:
        return self.coefficients.boundary_sign != 0

    def g(self, rho_tilde: ArrayLike) -> FloatOrArray:
        return radial_g(rho_tilde, self.coefficients)

    def f(self, rho_tilde: ArrayLike) -> FloatOrArray:
        return radial_f(rho_tilde, self.coefficients)

    def density(self, rho_tilde: ArrayLike) -> FloatOrArray:
        g = np.asarray(self.g(rho_tilde))
        f = np.asarray(self.f(rho_tilde))
        values = g * g + f * f
        return float(values) if values.ndim == 0 else values

    def rho_tilde(self, rho: ArrayLike) -> FloatOrArray:
        """Map the dimensionless m rho onto this state's rho_tilde."""
        return scale_radius(rho, self.state)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "k": self.numbers.label,
            "n_f": self.numbers.n_f,
            "sector": self.sector.value,
            "E": self.state.E,
            "lambda": self.state.lam,
            "gamma": self.state.gamma,
            "xi": self.state.xi,
            "mu_bar": self.coefficients.mu_bar,
            "eta_bar": self.coefficients.eta_bar,
            "a_plus": self.coefficients.a_plus,
            "a_minus": self.coefficients.a_minus,
        }


def build_bound_state(
    cfg: PotentialConfig,
    q: QuantumNumbers,
    sector: Sector,
    *,
    tolerance: float = FILTER_TOLERANCE,
    continuum_tolerance: float = CONTINUUM_TOLERANCE,
) -> BoundState:
    """
    Run the full pipeline for one (k, n_f, sector).

    gamma check, energy candidates, spurious-root filter, the k + A+ = 0
    exclusion and normalization, in that order. The isolated E = +-1
    states at n_f = 0 use their dedicated closed forms.

    Raises:
        ForbiddenState: With the reason of the first failing stage.
    """

    sector = Sector(sector)
    candidates = energy_candidates(cfg, q)
    survivors = dict(
        filter_spurious(
            candidates, cfg, q, tolerance=tolerance, continuum_tolerance=continuum_tolerance
        )
    )
    if sector not in survivors:
        raise ForbiddenState(
            ReasonCode.NO_BINDING_REGIME,
            f"No {sector.value.lower()} state for k={q.label}, n_f={q.n_f}.",
            {"e_plus": candidates.e_plus, "e_minus": candidates.e_minus},
        )
    energy = survivors[sector]

    for sign in (1, -1):
        if abs(energy - sign) <= continuum_tolerance and boundary_state_allowed(cfg, q, sign):
            state, coefficients = boundary_coefficients(cfg, q, sign)
            logger.debug("Built isolated E=%+d state for k=%s", sign, q.label)
            return BoundState(cfg, q, sector, state, coefficients)

    state = scaled_state(cfg, q, energy)
    if kbar_a_plus_degenerate(cfg, state, q.n_f):
        raise ForbiddenState(
            ReasonCode.KBAR_PLUS_A_PLUS_ZERO,
            f"E={energy!r} solves only the kbar + A+ = 0 branch for k={q.label}, n_f={q.n_f}.",
            {"E": energy},
        )
    return BoundState(cfg, q, sector, state, radial_coefficients(cfg, state, q.n_f))


def bound_states(cfg: PotentialConfig, q: QuantumNumbers, **kwargs: Any) -> List[BoundState]:
    """Every validated state of (k, n_f), particle first."""

    found = []
    for sector in (Sector.PARTICLE, Sector.ANTIPARTICLE):
        try:
            found.append(build_bound_state(cfg, q, sector, **kwargs))
        except ForbiddenState as exc:
            logger.debug("Skipping %s for k=%s n_f=%d: %s", sector.value, q.label, q.n_f, exc)
    return found
