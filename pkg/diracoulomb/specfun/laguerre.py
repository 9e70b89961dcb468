"""Generalized Laguerre polynomials by forward recurrence."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from diracoulomb.errors import DomainError

FloatOrArray = Union[float, NDArray[np.float64]]


@dataclass(frozen=True)
class LaguerreParams:
    """Degree, order and argument of one Laguerre evaluation."""

    degree: int
    order: float
    argument: float

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise DomainError("degree must be a non-negative integer.")
        if self.order <= -1.0:
            raise DomainError("order must be greater than -1.")
        if self.argument < 0.0:
            raise DomainError("argument must be non-negative.")

    def evaluate(self) -> float:
        return float(laguerre(self.degree, self.order, self.argument))


def _as_output(values: NDArray[np.float64]) -> FloatOrArray:
    return float(values) if values.ndim == 0 else values


def laguerre(n: int, alpha: float, x: ArrayLike) -> FloatOrArray:
    """
    Evaluate L_n^(alpha)(x) with the three-term forward recurrence.

    The recurrence is stable on the range the radial functions need,
    0 <= x <= 40 (n + gamma), which is where it is tested.

    Args:
        n: Degree, n >= -1. L_{-1} is identically zero.
        alpha: Order, alpha > -1.
        x: Scalar or array argument.

    Returns:
        A float for scalar input, otherwise an array shaped like x.

    Raises:
        DomainError: If alpha <= -1 or n < -1.
    """

    if alpha <= -1.0:
        raise DomainError(f"Laguerre order must be greater than -1, got {alpha}.")
    if n < -1:
        raise DomainError(f"Laguerre degree must be >= -1, got {n}.")

    x_arr = np.asarray(x, dtype=np.float64)
    if n == -1:
        return _as_output(np.zeros_like(x_arr))
    previous = np.ones_like(x_arr)
    if n == 0:
        return _as_output(previous)

    current = 1.0 + alpha - x_arr
    for k in range(1, n):
        previous, current = current, (
            (2.0 * k + 1.0 + alpha - x_arr) * current - (k + alpha) * previous
        ) / (k + 1.0)
    return _as_output(current)


def laguerre_derivative(n: int, alpha: float, x: ArrayLike) -> FloatOrArray:
    """d/dx L_n^(alpha)(x) = -L_{n-1}^(alpha+1)(x); zero for n <= 0."""

    if n <= 0:
        if alpha <= -1.0:
            raise DomainError(f"Laguerre order must be greater than -1, got {alpha}.")
        return _as_output(np.zeros_like(np.asarray(x, dtype=np.float64)))
    result = laguerre(n - 1, alpha + 1.0, x)
    return -result
