"""Command-line entry point."""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from pydantic import ValidationError

from diracoulomb.cli.commands import run_command
from diracoulomb.cli.output import write_result
from diracoulomb.cli.runspec import PRESETS, RunSpec, parse_k
from diracoulomb.config.settings import configure_logging, load_settings
from diracoulomb.errors import DomainError, ForbiddenState, IntegrationError
from diracoulomb.solver.solver import CoulombSolver

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3
EXIT_IO = 4


def _shared_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--alpha-sigma", type=float, help="strength of V_Sigma")
    parser.add_argument("--alpha-delta", type=float, help="strength of V_Delta")
    parser.add_argument("--tensor-a", type=float, help="Coulomb part a of the tensor term")
    parser.add_argument("--tensor-b", type=float, help="constant part bbar = b/m of the tensor term")
    parser.add_argument("--mass", type=float, help="mass for the epsilon and rho display columns")
    parser.add_argument("--mode", choices=["circular", "spherical"])
    parser.add_argument(
        "--k",
        action="append",
        default=[],
        help='k values, repeatable or comma separated ("3/2,-1/2"; integers in spherical mode)',
    )
    parser.add_argument("--two-k", type=int, action="append", default=[], help="doubled k, repeatable")
    parser.add_argument("--nf-max", type=int, help="highest n_f")
    parser.add_argument("--format", choices=["csv", "json"])
    parser.add_argument("--out", help="output path, stdout when absent")
    parser.add_argument("--preset", choices=sorted(PRESETS))
    parser.add_argument("--log-level", help="logging level name")
    parser.add_argument("--workers", type=int, help="sweep threads")
    parser.add_argument("--env-file", help=".env file with DIRACOULOMB_* settings")
    return parser


def build_parser() -> argparse.ArgumentParser:
    shared = _shared_parser()
    parser = argparse.ArgumentParser(
        prog="diracoulomb",
        description="Exact bound states of the Dirac equation with Coulomb-type potentials.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    subparsers.add_parser("spectrum", parents=[shared], help="energy table per (k, n_f, sector)")
    subparsers.add_parser("regime", parents=[shared], help="binding-regime report")

    wavefunction = subparsers.add_parser("wavefunction", parents=[shared], help="sample g and f")
    wavefunction.add_argument("--nf", type=int, help="principal quantum number")
    wavefunction.add_argument("--sector", choices=["Particle", "Antiparticle"])
    wavefunction.add_argument("--points", type=int, help="number of samples")
    wavefunction.add_argument("--rho-max", type=float, help="largest sampled m rho")

    verify = subparsers.add_parser("verify", parents=[shared], help="check closed forms numerically")
    verify.add_argument("--grid-points", type=int, help="residual grid size")
    verify.add_argument("--corrupt-energy", type=float, help=argparse.SUPPRESS)

    figure = subparsers.add_parser("figure-data", parents=[shared], help="columnar figure data")
    figure.add_argument("--kind", choices=["ladder", "curves", "regime-map"])
    figure.add_argument("--energy-points", type=int, help="energy samples for curves")
    figure.add_argument(
        "--bbar-range", nargs=3, metavar=("START", "STOP", "COUNT"), help="bbar grid of regime-map"
    )
    figure.add_argument(
        "--scale-range", nargs=3, metavar=("START", "STOP", "COUNT"), help="strength scale grid"
    )
    return parser


def _k_list(args: argparse.Namespace, mode: str) -> Optional[List[int]]:
    values = [parse_k(item, mode) for entry in args.k for item in entry.split(",") if item.strip()]
    values.extend(args.two_k)
    return values or None


def _grid_range(raw: Optional[Sequence[str]]) -> Optional[tuple]:
    if raw is None:
        return None
    return float(raw[0]), float(raw[1]), int(raw[2])


def run_spec_from_args(args: argparse.Namespace) -> RunSpec:
    preset_mode = PRESETS[args.preset]["mode"] if args.preset else "circular"
    mode = args.mode or preset_mode
    options: Dict[str, Any] = {
        "command": args.command,
        "alpha_sigma": args.alpha_sigma,
        "alpha_delta": args.alpha_delta,
        "tensor_a": args.tensor_a,
        "tensor_b": args.tensor_b,
        "mass": args.mass,
        "mode": args.mode,
        "k_list": _k_list(args, mode),
        "nf_max": args.nf_max,
        "format": args.format,
        "output_path": args.out,
        "preset": args.preset,
        "nf": getattr(args, "nf", None),
        "sector": getattr(args, "sector", None),
        "points": getattr(args, "points", None),
        "rho_max": getattr(args, "rho_max", None),
        "grid_points": getattr(args, "grid_points", None),
        "corrupt_energy": getattr(args, "corrupt_energy", None),
        "kind": getattr(args, "kind", None),
        "energy_points": getattr(args, "energy_points", None),
        "bbar_range": _grid_range(getattr(args, "bbar_range", None)),
        "scale_range": _grid_range(getattr(args, "scale_range", None)),
    }
    return RunSpec.from_options(options)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    try:
        settings = load_settings(args.env_file, workers=args.workers, log_level=args.log_level)
        configure_logging(settings.log_level)
        run = run_spec_from_args(args)
    except (ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    solver = CoulombSolver(config=run.potential(), mode=run.mode, settings=settings)
    try:
        result = run_command(run, solver)
    except (DomainError, ForbiddenState) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IntegrationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY

    try:
        write_result(result, run)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO

    if run.format == "csv":
        for note in result.notes:
            print(note, file=sys.stderr)
    if not result.ok:
        logger.info("%s reported failures", run.command)
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
