"""Binding-regime classifier based on the intercept of the energy equation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, FrozenSet, Optional

from diracoulomb.model.types import PotentialConfig, Sector

ENDPOINT_TOLERANCE = 1e-12


class RegimeSectors(str, Enum):
    BOTH = "Both"
    PARTICLE_ONLY = "ParticleOnly"
    ANTIPARTICLE_ONLY = "AntiparticleOnly"
    NONE = "None"

    @property
    def sectors(self) -> FrozenSet[Sector]:
        return _SECTOR_SETS[self]


_SECTOR_SETS = {
    RegimeSectors.BOTH: frozenset({Sector.PARTICLE, Sector.ANTIPARTICLE}),
    RegimeSectors.PARTICLE_ONLY: frozenset({Sector.PARTICLE}),
    RegimeSectors.ANTIPARTICLE_ONLY: frozenset({Sector.ANTIPARTICLE}),
    RegimeSectors.NONE: frozenset(),
}


class RegimeRegion(str, Enum):
    """Position of the intercept on the energy axis."""

    FORBIDDEN_LOW = "forbidden-low"
    SINGLE_SECTOR = "single-sector"
    BOTH_SECTORS = "both-sectors"
    FORBIDDEN_HIGH = "forbidden-high"
    CONSTANT_RHS = "constant-rhs"


@dataclass(frozen=True)
class RegimeReport:
    """
    Which sectors bind for one (config, kbar, xi).

    ``intercept`` and ``critical`` are None when alpha_delta + alpha_sigma = 0,
    where the right-hand side of the energy equation is constant.
    """

    intercept: Optional[float]
    critical: Optional[float]
    sectors: RegimeSectors
    boundary_flag: bool
    region: RegimeRegion

    def sector_set(self) -> FrozenSet[Sector]:
        return self.sectors.sectors

    def as_dict(self) -> Dict[str, Any]:
        return {
            "intercept": self.intercept,
            "critical": self.critical,
            "sectors": self.sectors.value,
            "boundary_flag": self.boundary_flag,
            "region": self.region.value,
        }


def classify_regime(
    cfg: PotentialConfig,
    kbar: float,
    xi: float,
    *,
    tolerance: float = ENDPOINT_TOLERANCE,
) -> RegimeReport:
    """
    Classify binding from I_E = c0 / s and I_c = sqrt((s^2 + 4 xi^2)(1 + bbar^2)) / s.

    Here s = alpha_delta + alpha_sigma and c0 = 2 kbar bbar + alpha_delta - alpha_sigma.
    For s > 0 the intercept bands are (-inf, -B] none, (-B, B] antiparticle
    only, (B, I_c] both and (I_c, inf) none, with B = sqrt(1 + bbar^2);
    s < 0 is the mirror image with particles instead of antiparticles.
    """

    s = cfg.strength_sum
    edge = cfg.continuum_edge
    c0 = 2.0 * kbar * cfg.bbar + cfg.alpha_delta - cfg.alpha_sigma

    if s == 0.0:
        limit = 2.0 * xi * edge
        if 0.0 < c0 <= limit + tolerance:
            return RegimeReport(
                intercept=None,
                critical=None,
                sectors=RegimeSectors.BOTH,
                boundary_flag=abs(c0 - limit) < tolerance,
                region=RegimeRegion.CONSTANT_RHS,
            )
        return RegimeReport(None, None, RegimeSectors.NONE, False, RegimeRegion.CONSTANT_RHS)

    intercept = c0 / s
    critical = edge * math.sqrt(s * s + 4.0 * xi * xi) / s
    boundary_flag = abs(intercept - critical) < tolerance

    if s > 0.0:
        if intercept <= -edge + tolerance:
            sectors, region = RegimeSectors.NONE, RegimeRegion.FORBIDDEN_LOW
        elif intercept <= edge + tolerance:
            sectors, region = RegimeSectors.ANTIPARTICLE_ONLY, RegimeRegion.SINGLE_SECTOR
        elif intercept <= critical + tolerance:
            sectors, region = RegimeSectors.BOTH, RegimeRegion.BOTH_SECTORS
        else:
            sectors, region = RegimeSectors.NONE, RegimeRegion.FORBIDDEN_HIGH
    else:
        if intercept >= edge - tolerance:
            sectors, region = RegimeSectors.NONE, RegimeRegion.FORBIDDEN_HIGH
        elif intercept >= -edge - tolerance:
            sectors, region = RegimeSectors.PARTICLE_ONLY, RegimeRegion.SINGLE_SECTOR
        elif intercept >= critical - tolerance:
            sectors, region = RegimeSectors.BOTH, RegimeRegion.BOTH_SECTORS
        else:
            sectors, region = RegimeSectors.NONE, RegimeRegion.FORBIDDEN_LOW

    return RegimeReport(
        intercept=intercept,
        critical=critical,
        sectors=sectors,
        boundary_flag=boundary_flag and sectors is RegimeSectors.BOTH,
        region=region,
    )
