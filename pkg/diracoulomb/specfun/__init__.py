"""Special functions used by the closed-form solutions."""

from diracoulomb.specfun.gammafn import log_factorial, log_gamma_ratio
from diracoulomb.specfun.kummer import KUMMER_MAX_TERMS, KUMMER_TOLERANCE, kummer_m
from diracoulomb.specfun.laguerre import LaguerreParams, laguerre, laguerre_derivative

__all__ = [
    "KUMMER_MAX_TERMS",
    "KUMMER_TOLERANCE",
    "LaguerreParams",
    "kummer_m",
    "laguerre",
    "laguerre_derivative",
    "log_factorial",
    "log_gamma_ratio",
]
