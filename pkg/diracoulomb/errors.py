"""Exceptions raised by diracoulomb."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional


class DiracCoulombError(Exception):
    """Base class for every error raised on purpose by the package."""


class ReasonCode(str, Enum):
    """Machine-readable reasons for rejecting a candidate state."""

    GAMMA_TOO_SMALL = "GammaTooSmall"
    KBAR_PLUS_A_PLUS_ZERO = "KbarPlusAPlusZero"
    NO_BINDING_REGIME = "NoBindingRegime"


@dataclass(slots=True, eq=False)
class ForbiddenState(DiracCoulombError):
    """Raised when the requested state does not exist for the given problem."""

    reason: ReasonCode
    message: str
    detail: Optional[Dict[str, Any]] = None

    def __str__(self) -> str:
        return f"[{self.reason.value}] {self.message}"


class DomainError(DiracCoulombError, ValueError):
    """Raised when an argument lies outside the domain of an operation."""


class NonConvergenceError(DiracCoulombError, ArithmeticError):
    """Raised when a series does not reach its tolerance within the term budget."""

    def __init__(self, message: str, *, terms: int, tolerance: float):
        super().__init__(message)
        self.terms = terms
        self.tolerance = tolerance


@dataclass(slots=True, eq=False)
class IntegrationError(DiracCoulombError):
    """Raised when the adaptive radial integration fails."""

    status: int
    error_type: str
    message: str

    def __str__(self) -> str:
        return f"[{self.error_type}#{self.status}] {self.message}"
