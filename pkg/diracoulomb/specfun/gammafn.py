"""Gamma-function ratios evaluated in log space."""

from __future__ import annotations

import math

from scipy.special import gammaln

from diracoulomb.errors import DomainError


def log_gamma_ratio(a: float, b: float) -> float:
    """
    Return ln(Gamma(a) / Gamma(b)) for positive a and b.

    Raises:
        DomainError: If either argument is not strictly positive.
    """

    if not (a > 0.0 and b > 0.0) or math.isinf(a) or math.isinf(b):
        raise DomainError(
            f"log_gamma_ratio needs finite positive arguments, got a={a}, b={b}."
        )
    return float(gammaln(a) - gammaln(b))


def log_factorial(n: int) -> float:
    if n < 0:
        raise DomainError(f"factorial of a negative integer ({n}) is undefined.")
    return float(gammaln(n + 1.0))
