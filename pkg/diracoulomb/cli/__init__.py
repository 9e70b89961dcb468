"""Command-line front-end."""

from diracoulomb.cli.commands import (
    CommandResult,
    cmd_figure_data,
    cmd_regime,
    cmd_spectrum,
    cmd_verify,
    cmd_wavefunction,
)
from diracoulomb.cli.main import main
from diracoulomb.cli.runspec import PRESETS, RunSpec, parse_k

__all__ = [
    "CommandResult",
    "PRESETS",
    "RunSpec",
    "cmd_figure_data",
    "cmd_regime",
    "cmd_spectrum",
    "cmd_verify",
    "cmd_wavefunction",
    "main",
    "parse_k",
]
