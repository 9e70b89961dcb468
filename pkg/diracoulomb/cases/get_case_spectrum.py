"""Spectrum function factory for the particular cases."""

from __future__ import annotations

from functools import partial
from typing import Any, Callable

from diracoulomb.cases.cases import CaseKind, detect_case
from diracoulomb.model.types import PotentialConfig, QuantumNumbers
from diracoulomb.spectrum.candidates import EnergyCandidates

SpectrumFunction = Callable[[PotentialConfig, QuantumNumbers], EnergyCandidates]

_CASE_NAMES = {
    CaseKind.GENERAL: "general",
    CaseKind.SCALAR_VECTOR: "scalar-vector",
    CaseKind.PURE_TENSOR: "pure-tensor",
    CaseKind.SPIN_BREAKING: "symmetry-breaking",
    CaseKind.PSEUDOSPIN_BREAKING: "symmetry-breaking",
    CaseKind.SCALAR_TENSOR: "scalar-tensor",
}


def _validate_remaining_config(case: str, config: dict) -> None:
    """Validate that no unsupported options are provided."""

    if config:
        unsupported_keys = ", ".join(sorted(config.keys()))
        raise ValueError(f"Unsupported options for spectrum case '{case}': {unsupported_keys}")


def case_name(kind: CaseKind) -> str:
    return _CASE_NAMES[CaseKind(kind)]


def get_spectrum_function(case: str = "general", **config: Any) -> SpectrumFunction:
    """
    Get the energy-candidate function of a particular case.

    Args:
        case: general, scalar-vector, pure-tensor, symmetry-breaking or scalar-tensor
        **config: Case-specific options
    """

    case = case.lower().strip().replace("_", "-")

    # general energy equation
    if case == "general":
        from diracoulomb.spectrum.candidates import energy_candidates

        _validate_remaining_config(case, config)
        return energy_candidates

    # scalar + vector, no tensor
    if case == "scalar-vector":
        from diracoulomb.cases.cases import scalar_vector_spectrum

        _validate_remaining_config(case, config)
        return scalar_vector_spectrum

    # tensor only
    if case == "pure-tensor":
        from diracoulomb.cases.cases import pure_tensor_spectrum

        _validate_remaining_config(case, config)
        return pure_tensor_spectrum

    # spin or pseudospin symmetry broken by the tensor term
    if case in {"symmetry-breaking", "spin-breaking", "pseudospin-breaking"}:
        from diracoulomb.cases.cases import symmetry_breaking_spectrum

        _validate_remaining_config(case, config)
        return symmetry_breaking_spectrum

    # scalar + tensor
    if case == "scalar-tensor":
        from diracoulomb.cases.cases import scalar_tensor_spectrum

        xi_convention = config.pop("xi_convention", "gamma")
        _validate_remaining_config(case, config)
        return partial(scalar_tensor_spectrum, xi_convention=xi_convention)

    raise ValueError(
        f"Unsupported spectrum case '{case}'. "
        "Supported cases: general, scalar-vector, pure-tensor, symmetry-breaking, scalar-tensor."
    )


def spectrum_function_for(cfg: PotentialConfig) -> SpectrumFunction:
    """The specialized spectrum function matching ``detect_case(cfg)``."""

    return get_spectrum_function(case_name(detect_case(cfg)))
