"""Closed-form spectra of the particular potential combinations."""

from __future__ import annotations

import math
from enum import Enum

from diracoulomb.errors import DomainError
from diracoulomb.model.model import effective_kappa, gamma_exponent
from diracoulomb.model.types import PotentialConfig, QuantumNumbers
from diracoulomb.spectrum.candidates import EnergyCandidates

CASE_EPSILON = 1e-15

XI_CONVENTIONS = ("gamma", "abs-kbar")


class CaseKind(str, Enum):
    SCALAR_VECTOR = "ScalarVector"
    PURE_TENSOR = "PureTensor"
    SPIN_BREAKING = "SpinBreaking"
    PSEUDOSPIN_BREAKING = "PseudospinBreaking"
    SCALAR_TENSOR = "ScalarTensor"
    GENERAL = "General"


def _zero(value: float) -> bool:
    return abs(value) < CASE_EPSILON


def detect_case(cfg: PotentialConfig) -> CaseKind:
    """
    Classify a configuration, first match wins.

    PureTensor (alpha_sigma = alpha_delta = 0), ScalarVector (a = b = 0),
    SpinBreaking (alpha_delta = 0), PseudospinBreaking (alpha_sigma = 0),
    ScalarTensor (alpha_sigma = -alpha_delta), otherwise General.
    """

    if _zero(cfg.alpha_sigma) and _zero(cfg.alpha_delta):
        return CaseKind.PURE_TENSOR
    if _zero(cfg.a) and _zero(cfg.bbar):
        return CaseKind.SCALAR_VECTOR
    if _zero(cfg.alpha_delta):
        return CaseKind.SPIN_BREAKING
    if _zero(cfg.alpha_sigma):
        return CaseKind.PSEUDOSPIN_BREAKING
    if _zero(cfg.alpha_sigma + cfg.alpha_delta):
        return CaseKind.SCALAR_TENSOR
    return CaseKind.GENERAL


def _pair(
    e_plus: float, e_minus: float, discriminant: float, kbar: float, xi: float
) -> EnergyCandidates:
    if discriminant < 0.0:
        return EnergyCandidates(None, None, discriminant, kbar, xi)
    return EnergyCandidates(e_plus, e_minus, discriminant, kbar, xi)


def scalar_vector_spectrum(cfg: PotentialConfig, q: QuantumNumbers) -> EnergyCandidates:
    """
    E+- = [alpha_delta^2 - alpha_sigma^2 +- 4 xi sqrt(alpha_delta alpha_sigma + xi^2)]
          / [(alpha_delta + alpha_sigma)^2 + 4 xi^2]

    for a = b = 0. The reported discriminant is 4 (alpha_delta alpha_sigma + xi^2).
    """

    if not (_zero(cfg.a) and _zero(cfg.bbar)):
        raise DomainError("scalar_vector_spectrum needs a = b = 0.")
    kbar = effective_kappa(q, cfg)
    xi = q.n_f + gamma_exponent(kbar, cfg)
    radicand = cfg.alpha_delta * cfg.alpha_sigma + xi * xi
    if radicand < 0.0:
        return EnergyCandidates(None, None, 4.0 * radicand, kbar, xi)
    offset = cfg.alpha_delta**2 - cfg.alpha_sigma**2
    spread = 4.0 * xi * math.sqrt(radicand)
    denominator = cfg.strength_sum**2 + 4.0 * xi * xi
    return _pair(
        (offset + spread) / denominator,
        (offset - spread) / denominator,
        4.0 * radicand,
        kbar,
        xi,
    )


def pure_tensor_spectrum(cfg: PotentialConfig, q: QuantumNumbers) -> EnergyCandidates:
    """E+- = +-sqrt(1 + bbar^2 [1 - (kbar / (n_f + |kbar|))^2]), symmetric about zero."""

    if not (_zero(cfg.alpha_sigma) and _zero(cfg.alpha_delta)):
        raise DomainError("pure_tensor_spectrum needs alpha_sigma = alpha_delta = 0.")
    kbar = effective_kappa(q, cfg)
    gamma_exponent(kbar, cfg)
    xi = q.n_f + abs(kbar)
    radicand = 1.0 + cfg.bbar**2 * (1.0 - (kbar / xi) ** 2)
    energy = math.sqrt(radicand)
    return _pair(energy, -energy, 4.0 * xi * xi * radicand, kbar, xi)


def symmetry_breaking_spectrum(cfg: PotentialConfig, q: QuantumNumbers) -> EnergyCandidates:
    """
    Spin (alpha_delta = 0) or pseudospin (alpha_sigma = 0) symmetric
    potentials broken by the tensor term, with xi = n_f + |kbar|.

    For alpha_delta = 0, c = 2 kbar bbar - alpha_sigma and
    E+- = [alpha_sigma c +- 2 xi sqrt((alpha_sigma^2 + 4 xi^2)(1 + bbar^2) - c^2)] / (alpha_sigma^2 + 4 xi^2).
    For alpha_sigma = 0 swap alpha_sigma for alpha_delta and use c = 2 kbar bbar + alpha_delta.
    """

    if _zero(cfg.alpha_delta):
        strength = cfg.alpha_sigma
        c = 2.0 * effective_kappa(q, cfg) * cfg.bbar - strength
    elif _zero(cfg.alpha_sigma):
        strength = cfg.alpha_delta
        c = 2.0 * effective_kappa(q, cfg) * cfg.bbar + strength
    else:
        raise DomainError("symmetry_breaking_spectrum needs alpha_delta = 0 or alpha_sigma = 0.")

    kbar = effective_kappa(q, cfg)
    gamma_exponent(kbar, cfg)
    xi = q.n_f + abs(kbar)
    denominator = strength * strength + 4.0 * xi * xi
    discriminant = denominator * (1.0 + cfg.bbar**2) - c * c
    if discriminant < 0.0:
        return EnergyCandidates(None, None, discriminant, kbar, xi)
    root = 2.0 * xi * math.sqrt(discriminant)
    return _pair(
        (strength * c + root) / denominator,
        (strength * c - root) / denominator,
        discriminant,
        kbar,
        xi,
    )


def scalar_tensor_spectrum(
    cfg: PotentialConfig, q: QuantumNumbers, *, xi_convention: str = "gamma"
) -> EnergyCandidates:
    """
    E+- = +-sqrt(1 + bbar^2 - ((kbar bbar - alpha_S) / xi)^2) for alpha_sigma = -alpha_delta = alpha_S.

    ``xi_convention="gamma"`` uses xi = n_f + sqrt(kbar^2 + alpha_S^2), which
    the shooting oracle confirms. ``"abs-kbar"`` uses xi = n_f + |kbar|.
    """

    if not _zero(cfg.strength_sum):
        raise DomainError("scalar_tensor_spectrum needs alpha_sigma = -alpha_delta.")
    if xi_convention not in XI_CONVENTIONS:
        raise ValueError(
            f"xi_convention must be one of {', '.join(XI_CONVENTIONS)}, got {xi_convention!r}."
        )
    alpha_s = cfg.alpha_sigma
    kbar = effective_kappa(q, cfg)
    gamma = gamma_exponent(kbar, cfg)
    xi = q.n_f + (gamma if xi_convention == "gamma" else abs(kbar))
    radicand = 1.0 + cfg.bbar**2 - ((kbar * cfg.bbar - alpha_s) / xi) ** 2
    if radicand < 0.0:
        return EnergyCandidates(None, None, 4.0 * xi * xi * radicand, kbar, xi)
    energy = math.sqrt(radicand)
    return _pair(energy, -energy, 4.0 * xi * xi * radicand, kbar, xi)
