"""Confluent hypergeometric function M(a, b, x) by power series."""

from __future__ import annotations

import logging
import math

from diracoulomb.errors import DomainError, NonConvergenceError

logger = logging.getLogger(__name__)

KUMMER_TOLERANCE = 1e-14
KUMMER_MAX_TERMS = 500


def kummer_m(
    a: float,
    b: float,
    x: float,
    *,
    tolerance: float = KUMMER_TOLERANCE,
    max_terms: int = KUMMER_MAX_TERMS,
) -> float:
    """
    Sum the Kummer series M(a, b, x) = sum_j (a)_j / (b)_j x^j / j!.

    For a = -n the series terminates after n + 1 terms and reproduces
    n! Gamma(b) / Gamma(n + b) * L_n^(b - 1)(x).

    Args:
        a: Upper parameter.
        b: Lower parameter, not a non-positive integer.
        x: Argument.
        tolerance: Stop once a term is below tolerance relative to the sum.
        max_terms: Term budget.

    Returns:
        The series value.

    Raises:
        DomainError: If b is zero or a negative integer.
        NonConvergenceError: If the budget runs out first.
    """

    if b <= 0.0 and float(b).is_integer():
        raise DomainError(f"Kummer lower parameter must not be a non-positive integer, got {b}.")

    term = 1.0
    total = 1.0
    for j in range(max_terms):
        term *= (a + j) / (b + j) * x / (j + 1.0)
        total += term
        if term == 0.0:
            return total
        if math.isinf(total) or math.isnan(total):
            break
        if abs(term) <= tolerance * abs(total):
            return total

    logger.debug("Kummer series M(%s, %s, %s) did not converge", a, b, x)
    raise NonConvergenceError(
        f"Kummer series M({a}, {b}, {x}) did not reach {tolerance} within {max_terms} terms.",
        terms=max_terms,
        tolerance=tolerance,
    )
