"""Energy spectrum, spurious-root filter and binding regimes."""

from diracoulomb.spectrum.candidates import (
    EnergyCandidates,
    boundary_state_allowed,
    energy_candidates,
    energy_equation_sides,
    filter_spurious,
    kbar_a_plus_degenerate,
    polish_root,
    quantization_residual,
    solve_energy_equation,
)
from diracoulomb.spectrum.regime import (
    RegimeRegion,
    RegimeReport,
    RegimeSectors,
    classify_regime,
)

__all__ = [
    "EnergyCandidates",
    "RegimeRegion",
    "RegimeReport",
    "RegimeSectors",
    "boundary_state_allowed",
    "classify_regime",
    "energy_candidates",
    "energy_equation_sides",
    "filter_spurious",
    "kbar_a_plus_degenerate",
    "polish_root",
    "quantization_residual",
    "solve_energy_equation",
]
