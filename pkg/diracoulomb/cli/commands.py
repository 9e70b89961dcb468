"""Subcommand implementations returning plain tables."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List

import numpy as np

from diracoulomb.errors import ForbiddenState, ReasonCode
from diracoulomb.model.model import effective_kappa, gamma_exponent
from diracoulomb.model.types import PotentialConfig
from diracoulomb.solver.solver import CoulombSolver, SectorResult
from diracoulomb.spectrum.candidates import energy_equation_sides
from diracoulomb.spectrum.regime import classify_regime
from diracoulomb.wavefunction.bound_state import BoundState, bound_states
from diracoulomb.cli.runspec import RunSpec

logger = logging.getLogger(__name__)

SPECTRUM_COLUMNS = ["k", "n_f", "sector", "E", "epsilon", "lambda", "gamma", "xi", "status", "reason"]
REGIME_COLUMNS = [
    "k",
    "n_f",
    "intercept",
    "critical",
    "sectors",
    "boundary_flag",
    "region",
    "status",
    "note",
]
WAVEFUNCTION_COLUMNS = ["rho", "rho_tilde", "g", "f", "density"]
VERIFY_COLUMNS = [
    "k",
    "n_f",
    "sector",
    "E",
    "residual",
    "norm_error",
    "polynomial_error",
    "eigenvalue_error",
    "passed",
]
LADDER_COLUMNS = ["k", "n_f", "sector", "E", "gap"]
CURVES_COLUMNS = ["k", "n_f", "E", "lhs", "rhs"]
REGIME_MAP_COLUMNS = ["k", "n_f", "bbar", "scale", "sectors", "region", "status"]

BOUND = "Bound"


@dataclass
class CommandResult:
    rows: List[Dict[str, Any]]
    columns: List[str]
    ok: bool = True
    notes: List[str] = field(default_factory=list)


def _spectrum_row(run: RunSpec, cfg: PotentialConfig, result: SectorResult) -> Dict[str, Any]:
    q = result.numbers
    row: Dict[str, Any] = {
        "k": q.label,
        "n_f": q.n_f,
        "sector": result.sector.value,
        "E": None,
        "epsilon": None,
        "lambda": None,
        "gamma": None,
        "xi": None,
        "status": BOUND,
        "reason": "",
    }
    if result.state is not None:
        s = result.state.state
        row.update(E=s.E, epsilon=s.E * run.mass, gamma=s.gamma, xi=s.xi)
        row["lambda"] = s.lam
        return row

    row["status"] = result.reason.value if result.reason else ReasonCode.NO_BINDING_REGIME.value
    row["reason"] = result.message
    if result.reason is not ReasonCode.GAMMA_TOO_SMALL:
        gamma = gamma_exponent(effective_kappa(q, cfg), cfg)
        row.update(gamma=gamma, xi=q.n_f + gamma)
    return row


def cmd_spectrum(run: RunSpec, solver: CoulombSolver) -> CommandResult:
    """One row per (k, n_f, sector); rejected states carry the reason code as status."""

    results = solver.states(run.sweep())
    rows = [_spectrum_row(run, solver.config, result) for result in results]
    bound = sum(1 for result in results if result.bound)
    logger.info("spectrum: %d bound states out of %d candidates", bound, len(results))
    return CommandResult(rows=rows, columns=SPECTRUM_COLUMNS)


def cmd_regime(run: RunSpec, solver: CoulombSolver) -> CommandResult:
    rows = []
    for q in run.sweep():
        row: Dict[str, Any] = {column: None for column in REGIME_COLUMNS}
        row.update(k=q.label, n_f=q.n_f, note="")
        try:
            report = solver.regime(q)
        except ForbiddenState as exc:
            row.update(status=exc.reason.value, note=exc.message)
            rows.append(row)
            continue
        row.update(report.as_dict())
        row["status"] = "ok"
        if report.intercept is None:
            row["note"] = "intercept undefined: alpha_delta + alpha_sigma = 0, constant right-hand side"
        rows.append(row)
    return CommandResult(rows=rows, columns=REGIME_COLUMNS)


def _select_state(run: RunSpec, solver: CoulombSolver) -> BoundState:
    q = run.quantum_numbers(run.nf, run.k_list[0])
    if run.sector is not None:
        return solver.bound_state(q, run.sector)
    found = bound_states(
        solver.config,
        q,
        tolerance=solver.settings.filter_tolerance,
        continuum_tolerance=solver.settings.continuum_tolerance,
    )
    if not found:
        raise ForbiddenState(
            ReasonCode.NO_BINDING_REGIME, f"No bound state for k={q.label}, n_f={q.n_f}."
        )
    return found[0]


def cmd_wavefunction(run: RunSpec, solver: CoulombSolver) -> CommandResult:
    """Sample g and f of one normalized state on an even grid in m rho."""

    state = _select_state(run, solver)
    s = state.state
    rho_max = run.rho_max
    if rho_max is None:
        rho_max = (4.0 * s.xi + 30.0) / (2.0 * s.lam)
    rho = np.linspace(0.0, rho_max, run.points)
    rho_tilde = np.asarray(state.rho_tilde(rho))
    g = np.asarray(state.g(rho_tilde))
    f = np.asarray(state.f(rho_tilde))
    rows = [
        {
            "rho": float(r) / run.mass,
            "rho_tilde": float(rt),
            "g": float(gv),
            "f": float(fv),
            "density": float(gv * gv + fv * fv),
        }
        for r, rt, gv, fv in zip(rho, rho_tilde, g, f)
    ]
    note = f"k={state.numbers.label} n_f={state.numbers.n_f} sector={state.sector.value} E={s.E!r}"
    return CommandResult(rows=rows, columns=WAVEFUNCTION_COLUMNS, notes=[note])


def cmd_verify(run: RunSpec, solver: CoulombSolver) -> CommandResult:
    """Residual, normalization and shooting checks for every bound state of the sweep."""

    states = [result.state for result in solver.states(run.sweep()) if result.state is not None]
    if not states:
        return CommandResult(rows=[], columns=VERIFY_COLUMNS, notes=["no states to verify"])

    checks = solver.verify_states(states, run.corrupt_energy, run.grid_points)
    rows = [check.as_dict() for check in checks]
    failed = [check for check in checks if not check.passed]
    eigen_errors = [c.eigenvalue_error for c in checks if c.eigenvalue_error is not None]
    notes = [
        f"verified {len(checks)} states, {len(failed)} failed",
        f"worst residual {max(c.residual for c in checks):.3e}",
        f"worst norm error {max(c.norm_error for c in checks):.3e}",
        f"worst polynomial error {max(c.polynomial_error for c in checks):.3e}",
        f"worst eigenvalue error {max(eigen_errors):.3e}" if eigen_errors else "no shooting checks",
    ]
    for check in failed:
        notes.append(
            f"FAILED k={check.numbers.label} n_f={check.numbers.n_f} {check.sector}: "
            f"residual={check.residual:.3e} norm_error={check.norm_error:.3e} "
            f"eigenvalue_error={check.eigenvalue_error}"
        )
    logger.info("verify: %s", notes[0])
    return CommandResult(rows=rows, columns=VERIFY_COLUMNS, ok=not failed, notes=notes)


def _ladder(run: RunSpec, solver: CoulombSolver) -> List[Dict[str, Any]]:
    edge = solver.config.continuum_edge
    return [
        {
            "k": result.numbers.label,
            "n_f": result.numbers.n_f,
            "sector": result.sector.value,
            "E": result.state.energy,
            "gap": edge - abs(result.state.energy),
        }
        for result in solver.states(run.sweep())
        if result.state is not None
    ]


def _curves(run: RunSpec, solver: CoulombSolver) -> List[Dict[str, Any]]:
    cfg = solver.config
    edge = cfg.continuum_edge
    energies = np.linspace(-edge, edge, run.energy_points)[1:-1]
    rows = []
    for q in run.sweep():
        try:
            kbar = effective_kappa(q, cfg)
            xi = q.n_f + gamma_exponent(kbar, cfg)
        except ForbiddenState:
            continue
        for energy in energies:
            lhs, rhs = energy_equation_sides(cfg, kbar, xi, float(energy))
            rows.append({"k": q.label, "n_f": q.n_f, "E": float(energy), "lhs": lhs, "rhs": rhs})
    return rows


def _regime_map(run: RunSpec, solver: CoulombSolver) -> List[Dict[str, Any]]:
    base = solver.config
    bbars = np.linspace(*run.bbar_range[:2], run.bbar_range[2])
    scales = np.linspace(*run.scale_range[:2], run.scale_range[2])
    rows = []
    for q in run.sweep():
        for bbar in bbars:
            for scale in scales:
                cfg = PotentialConfig(
                    alpha_sigma=base.alpha_sigma * float(scale),
                    alpha_delta=base.alpha_delta * float(scale),
                    a=base.a,
                    b=float(bbar),
                )
                row = {"k": q.label, "n_f": q.n_f, "bbar": float(bbar), "scale": float(scale)}
                try:
                    kbar = effective_kappa(q, cfg)
                    report = classify_regime(cfg, kbar, q.n_f + gamma_exponent(kbar, cfg))
                except ForbiddenState as exc:
                    row.update(sectors=None, region=None, status=exc.reason.value)
                else:
                    row.update(sectors=report.sectors.value, region=report.region.value, status="ok")
                rows.append(row)
    return rows


def cmd_figure_data(run: RunSpec, solver: CoulombSolver) -> CommandResult:
    # ladder
    if run.kind == "ladder":
        return CommandResult(rows=_ladder(run, solver), columns=LADDER_COLUMNS)

    # energy-equation sides
    if run.kind == "curves":
        return CommandResult(rows=_curves(run, solver), columns=CURVES_COLUMNS)

    # regime map
    return CommandResult(rows=_regime_map(run, solver), columns=REGIME_MAP_COLUMNS)


COMMANDS = {
    "spectrum": cmd_spectrum,
    "regime": cmd_regime,
    "wavefunction": cmd_wavefunction,
    "verify": cmd_verify,
    "figure-data": cmd_figure_data,
}


def run_command(run: RunSpec, solver: CoulombSolver) -> CommandResult:
    return COMMANDS[run.command](run, solver)
