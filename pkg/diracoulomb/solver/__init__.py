"""High-level solver facade."""

from diracoulomb.solver.solver import AsyncCoulombSolver, CoulombSolver, SectorResult

__all__ = ["AsyncCoulombSolver", "CoulombSolver", "SectorResult"]
