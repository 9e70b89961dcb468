"""Solver facade binding a potential configuration to the settings."""

from __future__ import annotations

import asyncio
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Iterable, List, Optional, Sequence, Tuple, TypeVar

from diracoulomb.config.settings import Settings
from diracoulomb.errors import ForbiddenState, ReasonCode
from diracoulomb.model.model import effective_kappa, gamma_exponent
from diracoulomb.model.types import PotentialConfig, QuantumNumbers, Sector, SymmetryMode
from diracoulomb.oracle.checks import StateVerification, verify_state
from diracoulomb.oracle.shooting import find_eigenvalues, shooting_config_for
from diracoulomb.spectrum.regime import RegimeReport, classify_regime
from diracoulomb.wavefunction.bound_state import BoundState, build_bound_state

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True)
class SectorResult:
    """Outcome of one (k, n_f, sector): a bound state or the rejection reason."""

    numbers: QuantumNumbers
    sector: Sector
    state: Optional[BoundState] = None
    reason: Optional[ReasonCode] = None
    message: str = ""

    @property
    def bound(self) -> bool:
        return self.state is not None


class CoulombSolver:
    """Closed-form spectra, wavefunctions and checks for one configuration."""

    def __init__(
        self,
        *,
        config: PotentialConfig,
        mode: str = "circular",
        settings: Optional[Settings] = None,
    ):
        if not isinstance(config, PotentialConfig):
            raise TypeError("config must be a PotentialConfig.")
        self._config = config
        self._mode = SymmetryMode(mode.lower().strip())
        self._settings = settings or Settings()

    @property
    def config(self) -> PotentialConfig:
        return self._config

    @property
    def mode(self) -> SymmetryMode:
        return self._mode

    @property
    def settings(self) -> Settings:
        return self._settings

    def numbers(self, n_f: int, k: int, two_mj: Optional[int] = None) -> QuantumNumbers:
        """Quantum numbers in this solver's mode; ``k`` is two_k (circular) or k_s (spherical)."""

        if self._mode is SymmetryMode.SPHERICAL:
            return QuantumNumbers.spherical(n_f, k, two_mj)
        return QuantumNumbers.circular(n_f, k, two_mj)

    def bound_state(self, q: QuantumNumbers, sector: Sector) -> BoundState:
        return build_bound_state(
            self._config,
            q,
            sector,
            tolerance=self._settings.filter_tolerance,
            continuum_tolerance=self._settings.continuum_tolerance,
        )

    def sector_result(self, q: QuantumNumbers, sector: Sector) -> SectorResult:
        try:
            return SectorResult(q, sector, state=self.bound_state(q, sector))
        except ForbiddenState as exc:
            return SectorResult(q, sector, reason=exc.reason, message=exc.message)

    def states(self, numbers: Iterable[QuantumNumbers]) -> List[SectorResult]:
        """Both sectors of every entry, in input order."""

        items: List[Tuple[QuantumNumbers, Sector]] = [
            (q, sector) for q in numbers for sector in (Sector.PARTICLE, Sector.ANTIPARTICLE)
        ]
        return self._map(lambda item: self.sector_result(*item), items)

    def regime(self, q: QuantumNumbers) -> RegimeReport:
        kbar = effective_kappa(q, self._config)
        xi = q.n_f + gamma_exponent(kbar, self._config)
        return classify_regime(self._config, kbar, xi, tolerance=self._settings.continuum_tolerance)

    def eigenvalues(
        self,
        q: QuantumNumbers,
        bracket: Tuple[float, float],
        count: int,
        **overrides: Any,
    ) -> List[float]:
        """Shooting eigenvalues of the k of ``q`` inside ``bracket``; n_f sizes rho_max."""

        kbar = effective_kappa(q, self._config)
        options = {
            "rtol": self._settings.shooting_rtol,
            "atol": self._settings.shooting_atol,
            "grid_points": self._settings.shooting_grid_points,
            "xtol": self._settings.shooting_xtol,
        }
        options.update(overrides)
        shoot = shooting_config_for(self._config, kbar, bracket, n_f_max=q.n_f, **options)
        return find_eigenvalues(self._config, kbar, shoot, count)

    def verify_state(
        self, state: BoundState, energy_shift: float = 0.0, grid_points: int = 400
    ) -> StateVerification:
        return verify_state(
            state,
            energy_shift=energy_shift,
            grid_points=grid_points,
            shooting_grid_points=self._settings.verify_grid_points,
            residual_tolerance=self._settings.residual_tolerance,
            norm_tolerance=self._settings.norm_tolerance,
            eigenvalue_tolerance=self._settings.eigenvalue_tolerance,
            kummer_tolerance=self._settings.kummer_tolerance,
            kummer_max_terms=self._settings.kummer_max_terms,
            rtol=self._settings.shooting_rtol,
            atol=self._settings.shooting_atol,
            xtol=self._settings.shooting_xtol,
        )

    def verify_states(
        self, states: Sequence[BoundState], energy_shift: float = 0.0, grid_points: int = 400
    ) -> List[StateVerification]:
        return self._map(lambda state: self.verify_state(state, energy_shift, grid_points), states)

    def _map(self, func: Callable[[T], R], items: Sequence[T]) -> List[R]:
        if self._settings.workers <= 1 or len(items) <= 1:
            return [func(item) for item in items]
        logger.debug("Running %d items on %d workers", len(items), self._settings.workers)
        with ThreadPoolExecutor(max_workers=self._settings.workers) as executor:
            return list(executor.map(func, items))


class AsyncCoulombSolver:
    """Async wrapper around `CoulombSolver`."""

    def __init__(self, **kwargs: Any):
        self._solver = CoulombSolver(**kwargs)

    @property
    def solver(self) -> CoulombSolver:
        return self._solver

    async def bound_state(self, q: QuantumNumbers, sector: Sector) -> BoundState:
        return await asyncio.to_thread(self._solver.bound_state, q, sector)

    async def states(self, numbers: Iterable[QuantumNumbers]) -> List[SectorResult]:
        return await asyncio.to_thread(self._solver.states, list(numbers))

    async def regime(self, q: QuantumNumbers) -> RegimeReport:
        return await asyncio.to_thread(self._solver.regime, q)

    async def eigenvalues(
        self, q: QuantumNumbers, bracket: Tuple[float, float], count: int, **overrides: Any
    ) -> List[float]:
        return await asyncio.to_thread(self._solver.eigenvalues, q, bracket, count, **overrides)

    async def verify_state(
        self, state: BoundState, energy_shift: float = 0.0, grid_points: int = 400
    ) -> StateVerification:
        return await asyncio.to_thread(self._solver.verify_state, state, energy_shift, grid_points)

    async def __aenter__(self) -> "AsyncCoulombSolver":
        return self

    async def __aexit__(self, exc_type: Any, exc: Any, tb: Any) -> None:
        return None
