"""Validated description of one CLI run."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from diracoulomb.model.types import PotentialConfig, QuantumNumbers, Sector

ALL_K = [-9, -7, -5, -3, -1, 1, 3, 5, 7, 9]

PRESETS: Dict[str, Dict[str, Any]] = {
    "fig3a": {
        "alpha_delta": 0.8,
        "alpha_sigma": 0.6,
        "tensor_a": 0.0,
        "tensor_b": 0.2,
        "k_list": ALL_K,
        "nf_max": 8,
        "mode": "circular",
    },
    "fig3b": {
        "alpha_delta": -0.8,
        "alpha_sigma": 0.1,
        "tensor_a": 0.0,
        "tensor_b": -0.2,
        "k_list": ALL_K,
        "nf_max": 8,
        "mode": "circular",
    },
}


def parse_k(text: str, mode: str) -> int:
    """
    Parse one k label.

    Circular mode accepts half-integers such as "3/2" or "-1.5" and returns
    two_k; spherical mode accepts non-zero integers and returns k_s.
    """

    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"k must be a number such as 3/2, got {text!r}.") from exc
    if mode == "spherical":
        if value.denominator != 1 or value == 0:
            raise ValueError(f"k must be a non-zero integer in spherical mode, got {text!r}.")
        return int(value)
    doubled = 2 * value
    if doubled.denominator != 1 or doubled.numerator % 2 == 0:
        raise ValueError(f"k must be a half-odd integer in circular mode, got {text!r}.")
    return int(doubled)


class RunSpec(BaseModel):
    command: Literal["spectrum", "regime", "wavefunction", "verify", "figure-data"] = Field(
        ..., description="Subcommand to run."
    )
    alpha_sigma: float = Field(0.0, description="Strength of V_Sigma = alpha_sigma / rho.")
    alpha_delta: float = Field(0.0, description="Strength of V_Delta = alpha_delta / rho.")
    tensor_a: float = Field(0.0, description="Coulomb part a of the tensor term.")
    tensor_b: float = Field(0.0, description="Constant part bbar of the tensor term.")
    mass: float = Field(1.0, gt=0, description="Mass used only for display columns.")
    mode: Literal["circular", "spherical"] = Field("circular", description="Symmetry mode.")
    k_list: List[int] = Field(
        default_factory=list, description="two_k values (circular) or k_s values (spherical)."
    )
    nf_max: int = Field(3, ge=0, description="Highest principal quantum number.")
    format: Literal["csv", "json"] = Field("csv", description="Output format.")
    output_path: Optional[str] = Field(None, description="Output file, stdout when absent.")
    preset: Optional[Literal["fig3a", "fig3b"]] = Field(None, description="Preset parameters.")
    nf: int = Field(0, ge=0, description="n_f of the sampled wavefunction.")
    sector: Optional[Sector] = Field(None, description="Sector of the sampled wavefunction.")
    points: int = Field(200, ge=2, description="Wavefunction sample count.")
    rho_max: Optional[float] = Field(None, gt=0, description="Largest sampled m rho.")
    grid_points: int = Field(400, ge=2, description="Residual grid size of verify.")
    corrupt_energy: float = Field(0.0, description="Energy shift applied before verify.")
    kind: Literal["ladder", "curves", "regime-map"] = Field("ladder", description="Figure data kind.")
    energy_points: int = Field(201, ge=3, description="Energy samples of the curves kind.")
    bbar_range: Tuple[float, float, int] = Field(
        (-1.0, 1.0, 21), description="bbar start, stop and count of the regime map."
    )
    scale_range: Tuple[float, float, int] = Field(
        (-1.0, 1.0, 21), description="Strength scale start, stop and count of the regime map."
    )

    @model_validator(mode="before")
    @classmethod
    def validate_extra_fields(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        allowed_fields = set(cls.model_fields.keys())
        input_fields = set(values.keys())
        extra_fields = input_fields - allowed_fields
        if extra_fields:
            raise ValueError(
                f"Extra fields not allowed: {', '.join(sorted(extra_fields))}. "
                f"Allowed fields: {', '.join(sorted(allowed_fields))}"
            )
        return values

    @model_validator(mode="after")
    def validate_k_list(self) -> "RunSpec":
        if not self.k_list:
            raise ValueError("k_list must not be empty.")
        for value in self.k_list:
            if self.mode == "spherical" and value == 0:
                raise ValueError("k_s = 0 is not allowed in spherical mode.")
            if self.mode == "circular" and value % 2 == 0:
                raise ValueError(f"two_k must be odd in circular mode, got {value}.")
        if self.bbar_range[2] < 1 or self.scale_range[2] < 1:
            raise ValueError("grid counts must be positive.")
        return self

    model_config = ConfigDict(frozen=True)

    @classmethod
    def from_options(cls, options: Dict[str, Any]) -> "RunSpec":
        """Merge a preset with explicit options; explicit values win."""

        values: Dict[str, Any] = {}
        preset = options.get("preset")
        if preset is not None:
            if preset not in PRESETS:
                raise ValueError(f"Unknown preset {preset!r}. Presets: {', '.join(sorted(PRESETS))}.")
            values.update(PRESETS[preset])
        values.update({key: value for key, value in options.items() if value is not None})
        if not values.get("k_list"):
            values["k_list"] = [-1] if values.get("mode") == "spherical" else [3]
        return cls(**values)

    def potential(self) -> PotentialConfig:
        return PotentialConfig(
            alpha_sigma=self.alpha_sigma,
            alpha_delta=self.alpha_delta,
            a=self.tensor_a,
            b=self.tensor_b,
        )

    def quantum_numbers(self, n_f: int, k: int) -> QuantumNumbers:
        if self.mode == "spherical":
            return QuantumNumbers.spherical(n_f, k)
        return QuantumNumbers.circular(n_f, k)

    def sweep(self) -> List[QuantumNumbers]:
        """Every (k, n_f) pair, ordered by k then n_f."""

        numbers = [
            self.quantum_numbers(n_f, k)
            for k in dict.fromkeys(self.k_list)
            for n_f in range(self.nf_max + 1)
        ]
        return sorted(numbers, key=lambda q: (q.sort_key, q.n_f))

    def summary(self) -> Dict[str, Any]:
        return {
            "alpha_sigma": self.alpha_sigma,
            "alpha_delta": self.alpha_delta,
            "a": self.tensor_a,
            "bbar": self.tensor_b,
            "mass": self.mass,
            "nf_max": self.nf_max,
            "k": [str(Fraction(k, 2)) if self.mode == "circular" else str(k) for k in self.k_list],
            "preset": self.preset,
        }
