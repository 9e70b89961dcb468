"""Numerical settings, environment loading and logging setup."""

from __future__ import annotations

import logging
import os
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

ENV_PREFIX = "DIRACOULOMB_"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class Settings(BaseModel):
    filter_tolerance: float = Field(
        1e-9, gt=0, description="Absolute residual tolerance of the unsquared energy equation."
    )
    continuum_tolerance: float = Field(
        1e-12, gt=0, description="Distance to sqrt(1 + bbar^2) treated as the continuum edge."
    )
    kummer_tolerance: float = Field(1e-14, gt=0, description="Kummer series truncation tolerance.")
    kummer_max_terms: int = Field(500, ge=1, description="Kummer series term budget.")
    shooting_rtol: float = Field(1e-12, gt=0, description="Integrator relative tolerance.")
    shooting_atol: float = Field(1e-14, gt=0, description="Integrator absolute tolerance.")
    shooting_grid_points: int = Field(400, ge=2, description="Energy scan grid of the eigenvalue search.")
    shooting_xtol: float = Field(1e-10, gt=0, description="Bisection tolerance in E.")
    verify_grid_points: int = Field(
        16, ge=2, description="Energy scan grid of the single-level bracket used by verify."
    )
    residual_tolerance: float = Field(1e-8, gt=0, description="ODE residual threshold of verify.")
    norm_tolerance: float = Field(1e-10, gt=0, description="Normalization threshold of verify.")
    eigenvalue_tolerance: float = Field(
        1e-7, gt=0, description="Oracle versus closed-form energy threshold of verify."
    )
    workers: int = Field(1, ge=1, description="Thread pool size for sweeps.")
    log_level: str = Field("WARNING", description="Logging level name.")

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

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, value: str) -> str:
        level = value.strip().upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"log_level must be a logging level name, got {value!r}.")
        return level

    model_config = ConfigDict(frozen=True)


def load_settings(env_file: Optional[str] = None, **overrides: Any) -> Settings:
    """
    Build settings from DIRACOULOMB_* variables and explicit overrides.

    Args:
        env_file: Optional .env file loaded with python-dotenv first.
        **overrides: Field values that win over the environment.
    """

    load_dotenv(env_file)
    values: Dict[str, Any] = {}
    for name in Settings.model_fields:
        raw = os.getenv(f"{ENV_PREFIX}{name.upper()}")
        if raw is not None and raw.strip():
            values[name] = raw.strip()
    values.update({key: value for key, value in overrides.items() if value is not None})
    return Settings(**values)


def configure_logging(level: str = "WARNING") -> None:
    """Install one stream handler on the package logger."""

    logger = logging.getLogger("diracoulomb")
    for handler in list(logger.handlers):
        if getattr(handler, "_diracoulomb", False):
            logger.removeHandler(handler)
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._diracoulomb = True  # type: ignore[attr-defined]
    logger.addHandler(handler)
    logger.setLevel(level.upper())
