"""Coupling constants A+-, decoupling ratio and normalization of the radial functions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

from scipy.special import gammaln

from diracoulomb.errors import DomainError
from diracoulomb.model.model import effective_kappa, spinor_ratios
from diracoulomb.model.types import PotentialConfig, QuantumNumbers, ScaledState
from diracoulomb.specfun.gammafn import log_factorial
from diracoulomb.specfun.laguerre import LaguerreParams

BOUNDARY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class RadialCoefficients:
    """
    Constants of the closed-form g and f for one bound state.

    ``boundary_sign`` is +1 or -1 for the isolated E = +1 / E = -1 states
    built from their dedicated closed forms, and 0 otherwise.
    """

    mu_bar: float
    eta_bar: float
    a_plus: float
    a_minus: float
    gamma: float
    lam: float
    n_f: int
    kbar: float
    boundary_sign: int = 0

    @property
    def kbar_plus_a_plus(self) -> float:
        return self.kbar + self.a_plus

    def laguerre_params(self, x: float) -> LaguerreParams:
        """Degree n_f and order 2 gamma of the leading Laguerre factor, at argument x."""
        return LaguerreParams(self.n_f, 2.0 * self.gamma, x)

    @property
    def upper_weight(self) -> float:
        """n_f + gamma + kbar + A+ - A-, the L_n weight of g."""
        return self.n_f + self.gamma + self.kbar + self.a_plus - self.a_minus

    @property
    def lower_weight(self) -> float:
        """n_f + gamma - kbar - A+ - A-, the L_n weight of f."""
        return self.n_f + self.gamma - self.kbar - self.a_plus - self.a_minus


def a_plus_minus(cfg: PotentialConfig, s: ScaledState) -> Tuple[float, float]:
    """
    A+- = -(1/2) [alpha_sigma (lambda - bbar)/(1 - E) +- alpha_delta (lambda + bbar)/(1 + E)].

    Raises:
        DomainError: If a ratio with non-zero weight diverges, which only
            happens at E = +1 with bbar <= 0 or E = -1 with bbar >= 0.
    """

    sigma, delta = spinor_ratios(s)
    sigma_term = _weighted(cfg.alpha_sigma, sigma, "alpha_sigma", s)
    delta_term = _weighted(cfg.alpha_delta, delta, "alpha_delta", s)
    return -0.5 * (sigma_term + delta_term), -0.5 * (sigma_term - delta_term)


def _weighted(weight: float, ratio: float, name: str, s: ScaledState) -> float:
    if weight == 0.0:
        return 0.0
    if not math.isfinite(ratio):
        raise DomainError(f"A+- diverges at E={s.E!r} with bbar={s.bbar!r} and {name}={weight!r}.")
    return weight * ratio


def decoupling_ratio(s: ScaledState) -> float:
    """
    eta / mu = -(bbar + lambda) / (1 + E).

    Raises:
        DomainError: At E = -1 with bbar >= 0, where the ratio diverges.
    """

    if abs(1.0 + s.E) <= BOUNDARY_TOLERANCE and s.bbar >= 0.0:
        raise DomainError(f"eta/mu diverges at E=-1 for bbar={s.bbar!r} >= 0.")
    _, delta = spinor_ratios(s)
    if not math.isfinite(delta):
        raise DomainError(f"eta/mu diverges at E={s.E!r} for bbar={s.bbar!r}.")
    return -delta


def normalization(coeff: RadialCoefficients, s: ScaledState, cfg: PotentialConfig) -> float:
    """
    Return |mu_bar|^2 fixing the integral of g^2 + f^2 over rho_tilde to 2 lambda.

    |mu_bar|^2 = 2 lambda [(kbar + A+)/Gamma(2 gamma + 1)]^2 Gamma(n + 2 gamma + 1)/n!
        / {c1^2 + n(n + 2 gamma) + r^2 [c2^2 + n(n + 2 gamma)]}

    with r = eta/mu and c1, c2 the L_n weights of g and f.
    """

    n = coeff.n_f
    ratio = decoupling_ratio(s)
    spread = n * (n + 2.0 * coeff.gamma)
    bracket = (
        coeff.upper_weight**2 + spread + ratio * ratio * (coeff.lower_weight**2 + spread)
    )
    log_value = (
        math.log(2.0 * s.lam)
        + 2.0 * math.log(abs(coeff.kbar_plus_a_plus))
        - 2.0 * gammaln(2.0 * coeff.gamma + 1.0)
        + gammaln(n + 2.0 * coeff.gamma + 1.0)
        - log_factorial(n)
        - math.log(bracket)
    )
    return math.exp(log_value)


def radial_coefficients(cfg: PotentialConfig, s: ScaledState, n_f: int) -> RadialCoefficients:
    """Assemble normalized coefficients with mu_bar > 0."""

    a_plus, a_minus = a_plus_minus(cfg, s)
    unnormalized = RadialCoefficients(
        mu_bar=1.0,
        eta_bar=0.0,
        a_plus=a_plus,
        a_minus=a_minus,
        gamma=s.gamma,
        lam=s.lam,
        n_f=n_f,
        kbar=s.kbar,
    )
    mu_bar = math.sqrt(normalization(unnormalized, s, cfg))
    return RadialCoefficients(
        mu_bar=mu_bar,
        eta_bar=mu_bar * decoupling_ratio(s),
        a_plus=a_plus,
        a_minus=a_minus,
        gamma=s.gamma,
        lam=s.lam,
        n_f=n_f,
        kbar=s.kbar,
    )


def boundary_coefficients(
    cfg: PotentialConfig, q: QuantumNumbers, sign: int
) -> Tuple[ScaledState, RadialCoefficients]:
    """
    Closed forms of the isolated n_f = 0 states at E = sign.

    E = +1 (alpha_sigma = 0, bbar > 0): g = 2 mu_bar rho^kbar e^(-rho/2), f = 0.
    E = -1 (alpha_delta = 0, bbar < 0): g = 0, f = 2 eta_bar rho^(-kbar) e^(-rho/2).
    """

    kbar = effective_kappa(q, cfg)
    bbar = cfg.bbar
    lam = abs(bbar)
    gamma = abs(kbar)
    state = ScaledState(kbar=kbar, gamma=gamma, xi=gamma, E=float(sign), lam=lam, bbar=bbar)

    if sign == 1:
        if not (bbar > 0.0 and kbar > 0.5):
            raise DomainError("E=+1 needs bbar > 0 and kbar > 1/2.")
        a_term = cfg.alpha_delta * bbar / 2.0
        mu_bar = math.exp(0.5 * (math.log(lam / 2.0) - gammaln(2.0 * kbar + 1.0)))
        coeff = RadialCoefficients(
            mu_bar=mu_bar,
            eta_bar=-bbar * mu_bar,
            a_plus=-a_term,
            a_minus=a_term,
            gamma=gamma,
            lam=lam,
            n_f=0,
            kbar=kbar,
            boundary_sign=1,
        )
        return state, coeff

    if sign == -1:
        if not (bbar < 0.0 and kbar < -0.5):
            raise DomainError("E=-1 needs bbar < 0 and kbar < -1/2.")
        a_term = cfg.alpha_sigma * bbar / 2.0
        eta_bar = -math.exp(0.5 * (math.log(lam / 2.0) - gammaln(1.0 - 2.0 * kbar)))
        coeff = RadialCoefficients(
            mu_bar=-lam * eta_bar,
            eta_bar=eta_bar,
            a_plus=a_term,
            a_minus=a_term,
            gamma=gamma,
            lam=lam,
            n_f=0,
            kbar=kbar,
            boundary_sign=-1,
        )
        return state, coeff

    raise ValueError(f"sign must be +1 or -1, got {sign!r}.")
