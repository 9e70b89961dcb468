"""Particular cases of the generalized Coulomb problem."""

from diracoulomb.cases.cases import (
    CaseKind,
    detect_case,
    pure_tensor_spectrum,
    scalar_tensor_spectrum,
    scalar_vector_spectrum,
    symmetry_breaking_spectrum,
)
from diracoulomb.cases.get_case_spectrum import (
    case_name,
    get_spectrum_function,
    spectrum_function_for,
)

__all__ = [
    "CaseKind",
    "case_name",
    "detect_case",
    "get_spectrum_function",
    "pure_tensor_spectrum",
    "scalar_tensor_spectrum",
    "scalar_vector_spectrum",
    "spectrum_function_for",
    "symmetry_breaking_spectrum",
]
