"""
CLI Package for nvdbound.

Modules:
    - parser: CliParser and build_parser
    - commands: The nvd, cmax, advect1d, zalesak and oracle subcommands
    - output: CSV, gnuplot scripts and run manifests
    - sweep: Expansion and parallel execution of parameter sweeps
"""

from .commands import COMMANDS, cmd_advect1d, cmd_cmax, cmd_nvd, cmd_oracle, cmd_zalesak
from .output import PlotSpec, RunManifest, emit, format_value, render_csv
from .parser import CliParser, build_parser
from .sweep import expand_sweep, run_sweep, tagged_path

__all__ = [
    # Parsing
    "CliParser",
    "build_parser",

    # Commands
    "COMMANDS",
    "cmd_nvd",
    "cmd_cmax",
    "cmd_advect1d",
    "cmd_zalesak",
    "cmd_oracle",

    # Output
    "PlotSpec",
    "RunManifest",
    "emit",
    "format_value",
    "render_csv",

    # Sweeps
    "expand_sweep",
    "run_sweep",
    "tagged_path",
]
