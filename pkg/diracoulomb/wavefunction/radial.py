"""Evaluation of the closed-form radial functions g and f."""

from __future__ import annotations

import math
from typing import Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import gammaln

from diracoulomb.errors import DomainError
from diracoulomb.specfun.gammafn import log_factorial
from diracoulomb.specfun.laguerre import FloatOrArray, laguerre, laguerre_derivative
from diracoulomb.wavefunction.coefficients import RadialCoefficients

CUTOFF_FACTOR = 40.0

Weights = Tuple[float, float]


def _grid(rho_tilde: ArrayLike) -> NDArray[np.float64]:
    grid = np.asarray(rho_tilde, dtype=np.float64)
    if np.any(grid < 0.0) or np.any(np.isnan(grid)):
        raise DomainError("rho_tilde must be non-negative.")
    return grid


def _output(values: NDArray[np.float64]) -> FloatOrArray:
    return float(values) if values.ndim == 0 else values


def _amplitude(numerator: float, coeff: RadialCoefficients) -> float:
    # numerator / (kbar + A+) * n! Gamma(2 gamma + 1) / Gamma(n + 2 gamma + 1)
    if numerator == 0.0:
        return 0.0
    denominator = coeff.kbar_plus_a_plus
    log_magnitude = (
        math.log(abs(numerator))
        - math.log(abs(denominator))
        + log_factorial(coeff.n_f)
        + gammaln(2.0 * coeff.gamma + 1.0)
        - gammaln(coeff.n_f + 2.0 * coeff.gamma + 1.0)
    )
    return math.copysign(1.0, numerator) * math.copysign(1.0, denominator) * math.exp(log_magnitude)


def polynomial_weights(coeff: RadialCoefficients) -> Tuple[Weights, Weights]:
    """
    Return ((w1, w2) for g, (w1, w2) for f) such that the reduced part is
    w1 L_n^(2 gamma) - w2 L_{n-1}^(2 gamma).
    """

    if coeff.boundary_sign == 1:
        return (2.0 * coeff.mu_bar, 0.0), (0.0, 0.0)
    if coeff.boundary_sign == -1:
        return (0.0, 0.0), (2.0 * coeff.eta_bar, 0.0)

    spread = coeff.n_f + 2.0 * coeff.gamma
    amp_g = _amplitude(coeff.mu_bar, coeff)
    amp_f = -_amplitude(coeff.eta_bar, coeff)
    return (
        (amp_g * coeff.upper_weight, amp_g * spread),
        (amp_f * coeff.lower_weight, amp_f * spread),
    )


def envelope(rho_tilde: ArrayLike, gamma: float) -> FloatOrArray:
    """rho_tilde^gamma e^(-rho_tilde / 2), zero at the origin."""

    grid = _grid(rho_tilde)
    with np.errstate(divide="ignore"):
        values = np.where(grid > 0.0, np.exp(gamma * np.log(grid) - 0.5 * grid), 0.0)
    return _output(values)


def _combine(
    weights: Weights, coeff: RadialCoefficients, grid: NDArray[np.float64], derivative: bool
) -> NDArray[np.float64]:
    evaluate = laguerre_derivative if derivative else laguerre
    order = 2.0 * coeff.gamma
    values = np.zeros_like(grid)
    if weights[0] != 0.0:
        values = values + weights[0] * evaluate(coeff.n_f, order, grid)
    if weights[1] != 0.0:
        values = values - weights[1] * evaluate(coeff.n_f - 1, order, grid)
    return values


def reduced_parts(rho_tilde: ArrayLike, coeff: RadialCoefficients) -> Tuple[FloatOrArray, FloatOrArray]:
    """g and f divided by the envelope rho_tilde^gamma e^(-rho_tilde / 2)."""

    grid = _grid(rho_tilde)
    weights_g, weights_f = polynomial_weights(coeff)
    return (
        _output(_combine(weights_g, coeff, grid, derivative=False)),
        _output(_combine(weights_f, coeff, grid, derivative=False)),
    )


def reduced_derivatives(rho_tilde: ArrayLike, coeff: RadialCoefficients) -> Tuple[FloatOrArray, FloatOrArray]:
    """Derivatives in rho_tilde of the reduced parts."""

    grid = _grid(rho_tilde)
    weights_g, weights_f = polynomial_weights(coeff)
    return (
        _output(_combine(weights_g, coeff, grid, derivative=True)),
        _output(_combine(weights_f, coeff, grid, derivative=True)),
    )


def evaluation_cutoff(coeff: RadialCoefficients) -> float:
    return CUTOFF_FACTOR * (coeff.n_f + coeff.gamma)


def _radial(rho_tilde: ArrayLike, coeff: RadialCoefficients, component: int) -> FloatOrArray:
    grid = _grid(rho_tilde)
    weights = polynomial_weights(coeff)[component]
    values = np.asarray(envelope(grid, coeff.gamma)) * _combine(weights, coeff, grid, derivative=False)
    values = np.where(grid > evaluation_cutoff(coeff), 0.0, values)
    return _output(values)


def radial_g(rho_tilde: ArrayLike, coeff: RadialCoefficients) -> FloatOrArray:
    """
    Upper radial function

    g = [mu_bar/(kbar + A+)] n! Gamma(2 gamma + 1)/Gamma(n + 2 gamma + 1)
        rho^gamma e^(-rho/2) [(n + gamma + kbar + A+ - A-) L_n^(2 gamma) - (n + 2 gamma) L_{n-1}^(2 gamma)]

    evaluated at rho_tilde; zero beyond 40 (n_f + gamma).
    """

    return _radial(rho_tilde, coeff, 0)


def radial_f(rho_tilde: ArrayLike, coeff: RadialCoefficients) -> FloatOrArray:
    """
    Lower radial function, the partner of radial_g with prefactor
    -eta_bar/(kbar + A+) and L_n weight n + gamma - kbar - A+ - A-.
    """

    return _radial(rho_tilde, coeff, 1)
