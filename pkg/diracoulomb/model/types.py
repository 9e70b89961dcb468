"""Domain types for the generalized Coulomb problem."""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from diracoulomb.errors import DomainError


class SymmetryMode(str, Enum):
    CIRCULAR = "circular"
    SPHERICAL = "spherical"


class Sector(str, Enum):
    """Particle states sit on the E+ branch, antiparticle states on E-."""

    PARTICLE = "Particle"
    ANTIPARTICLE = "Antiparticle"


@dataclass(frozen=True)
class PotentialConfig:
    """
    Strengths of the scalar, vector and tensor Coulomb potentials.

    V_Sigma = alpha_sigma / rho, V_Delta = alpha_delta / rho and the
    tensor term U = a / rho + b. All internal arithmetic uses
    b / m, exposed as ``bbar``.
    """

    alpha_sigma: float = 0.0
    alpha_delta: float = 0.0
    a: float = 0.0
    b: float = 0.0
    m: float = 1.0

    def __post_init__(self) -> None:
        for name in ("alpha_sigma", "alpha_delta", "a", "b", "m"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, numbers.Real) or not math.isfinite(value):
                raise DomainError(f"{name} must be a finite real number, got {value!r}.")
        if self.m <= 0.0:
            raise DomainError(f"m must be positive, got {self.m}.")

    @property
    def bbar(self) -> float:
        return self.b / self.m

    @property
    def continuum_edge(self) -> float:
        """sqrt(1 + bbar^2), the edge of the bound-state window."""
        return math.sqrt(1.0 + self.bbar**2)

    @property
    def strength_sum(self) -> float:
        return self.alpha_delta + self.alpha_sigma

    def as_dict(self) -> dict:
        return {
            "alpha_sigma": self.alpha_sigma,
            "alpha_delta": self.alpha_delta,
            "a": self.a,
            "bbar": self.bbar,
            "m": self.m,
        }


@dataclass(frozen=True)
class QuantumNumbers:
    """
    Labels (n_f, k, m_j) of a candidate state, with k and m_j doubled.

    ``two_k`` always holds the circular-equivalent quantum number. In
    spherical mode it equals -2 k_s, so it is even.
    """

    n_f: int
    two_k: int
    two_mj: Optional[int] = None
    mode: SymmetryMode = SymmetryMode.CIRCULAR

    def __post_init__(self) -> None:
        if not isinstance(self.n_f, int) or self.n_f < 0:
            raise DomainError(f"n_f must be a non-negative integer, got {self.n_f!r}.")
        if not isinstance(self.two_k, int):
            raise DomainError(f"two_k must be an integer, got {self.two_k!r}.")
        mode = SymmetryMode(self.mode)
        object.__setattr__(self, "mode", mode)

        if mode is SymmetryMode.CIRCULAR:
            if self.two_k % 2 == 0:
                raise DomainError(f"two_k must be odd in circular mode, got {self.two_k}.")
            two_mj = self.two_k if self.two_mj is None else self.two_mj
            if two_mj % 2 == 0 or abs(two_mj) != abs(self.two_k):
                raise DomainError(
                    f"two_mj must be odd with |two_mj| = |two_k| in circular mode, got {two_mj}."
                )
        else:
            if self.two_k == 0 or self.two_k % 2 != 0:
                raise DomainError(
                    f"spherical mode needs an even, non-zero internal two_k, got {self.two_k}."
                )
            two_mj = 1 if self.two_mj is None else self.two_mj
            if two_mj % 2 == 0 or abs(two_mj) >= abs(self.two_k):
                raise DomainError(
                    f"two_mj must be odd with |m_j| <= |k_s| - 1/2, got {two_mj}."
                )
        object.__setattr__(self, "two_mj", two_mj)

    @classmethod
    def circular(cls, n_f: int, two_k: int, two_mj: Optional[int] = None) -> "QuantumNumbers":
        return cls(n_f=n_f, two_k=two_k, two_mj=two_mj, mode=SymmetryMode.CIRCULAR)

    @classmethod
    def spherical(cls, n_f: int, k_s: int, two_mj: Optional[int] = None) -> "QuantumNumbers":
        from diracoulomb.model.model import map_to_spherical

        return cls(
            n_f=n_f,
            two_k=map_to_spherical(k_s),
            two_mj=two_mj,
            mode=SymmetryMode.SPHERICAL,
        )

    @property
    def k(self) -> float:
        return self.two_k / 2.0

    @property
    def k_s(self) -> int:
        if self.mode is not SymmetryMode.SPHERICAL:
            raise DomainError("k_s is only defined in spherical mode.")
        return -self.two_k // 2

    @property
    def label(self) -> str:
        """k as printed in tables: "3/2" in circular mode, k_s in spherical mode."""
        if self.mode is SymmetryMode.SPHERICAL:
            return str(self.k_s)
        return str(Fraction(self.two_k, 2))

    @property
    def sort_key(self) -> int:
        return self.k_s if self.mode is SymmetryMode.SPHERICAL else self.two_k


@dataclass(frozen=True)
class ScaledState:
    """Dimensionless quantities of one candidate state at energy E = eps / m."""

    kbar: float
    gamma: float
    xi: float
    E: float
    lam: float
    bbar: float

    @property
    def continuum_edge(self) -> float:
        return math.sqrt(1.0 + self.bbar**2)
