"""
Argument parsing for the nvdbound command line.

Subcommands: nvd, cmax, advect1d, zalesak, oracle. The scheme flags are
shared; --beta, --ct, --slope and --cfl accept several values, which turns
the invocation into a parameter sweep.
"""

import argparse
from pathlib import Path
from typing import NoReturn

from schemes.config import SchemeConfig
from schemes.constants import (
    DEFAULT_BOUNDS_TOL,
    DEFAULT_CELLS_1D,
    DEFAULT_CELLS_2D,
    DEFAULT_CMAX_SAMPLES,
    DEFAULT_END_TIME_1D,
    DEFAULT_NVD_SAMPLES,
    DEFAULT_ORACLE_PAD,
    DEFAULT_VELOCITY_1D,
    TOOL_NAME,
    TOOL_VERSION,
)
from schemes.errors import ConfigurationError
from solver.config import Integrator


class CliParser(argparse.ArgumentParser):
    """ArgumentParser that raises ConfigurationError instead of exiting."""

    def error(self, message: str) -> NoReturn:
        raise ConfigurationError(message)


def _scheme_options(parser: argparse.ArgumentParser, sweep_cfl: bool = False) -> None:
    group = parser.add_argument_group("scheme")
    group.add_argument("--scheme", required=True, choices=list(SchemeConfig.NAMES), help="reconstruction scheme")
    group.add_argument("--beta", type=float, nargs="+", help="THINC steepness (several values sweep)")
    group.add_argument("--slope", type=float, nargs="+", help="clipped THINC slope (several values sweep)")
    group.add_argument("--ct", type=float, nargs="+", help="TENO cutoff C_T (several values sweep)")
    group.add_argument("--epsilon", type=float, help="WENO/TENO division guard")
    group.add_argument("--c-teno", dest="c_teno", type=float, help="TENO constant C")
    group.add_argument("--q-teno", dest="q_teno", type=int, help="TENO exponent q")
    group.add_argument("--weights", type=float, nargs=3, metavar=("D0", "D1", "D2"), help="ideal weights")
    if sweep_cfl:
        group.add_argument("--cfl", type=float, nargs="+", required=True, help="CFL number (several values sweep)")


def _run_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", type=Path, help="data file; a .gp script and a .manifest.json are written beside it")
    parser.add_argument("--jobs", type=int, default=1, help="parallel processes for a sweep")


def _solver_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--integrator",
        choices=[i.value for i in Integrator],
        default=Integrator.EULER_FORWARD.value,
        help="time integrator",
    )
    parser.add_argument("--tol", type=float, default=DEFAULT_BOUNDS_TOL, help="boundedness tolerance")


def build_parser() -> CliParser:
    parser = CliParser(
        prog=TOOL_NAME,
        description="Convection boundedness, NVD and CFL analysis of THINC, WENO and TENO schemes.",
    )
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {TOOL_VERSION}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    nvd = commands.add_parser("nvd", help="sample the normalised variable diagram")
    _scheme_options(nvd)
    nvd.add_argument("--n", type=int, default=DEFAULT_NVD_SAMPLES, help="number of samples")
    _run_options(nvd)

    cmax = commands.add_parser("cmax", help="largest CFL number satisfying the criterion")
    _scheme_options(cmax)
    cmax.add_argument("--n", type=int, default=DEFAULT_CMAX_SAMPLES, help="number of samples")
    cmax.add_argument("--target-cfl", dest="target_cfl", type=float, help="suggest THINC beta or clip slope for this CFL")
    _run_options(cmax)

    advect = commands.add_parser("advect1d", help="advect the square wave in 1D")
    _scheme_options(advect, sweep_cfl=True)
    advect.add_argument("--cells", type=int, default=DEFAULT_CELLS_1D, help="number of cells N")
    advect.add_argument("--t-end", dest="t_end", type=float, default=DEFAULT_END_TIME_1D, help="final time")
    advect.add_argument("--velocity", type=float, default=DEFAULT_VELOCITY_1D, help="advection speed u")
    _solver_options(advect)
    _run_options(advect)

    zalesak = commands.add_parser("zalesak", help="rotate the slotted disk in 2D")
    _scheme_options(zalesak, sweep_cfl=True)
    zalesak.add_argument("--nx", type=int, default=DEFAULT_CELLS_2D, help="cells per axis")
    zalesak.add_argument("--revolutions", type=float, default=1.0, help="number of revolutions")
    zalesak.add_argument("--constant", type=float, help="start from this constant field instead of the disk")
    _solver_options(zalesak)
    _run_options(zalesak)

    oracle = commands.add_parser("oracle", help="one Euler step of a perfect isolated discontinuity")
    _scheme_options(oracle, sweep_cfl=True)
    oracle.add_argument("--n", type=int, default=DEFAULT_NVD_SAMPLES, help="number of phi_c samples")
    oracle.add_argument("--pad", type=int, default=DEFAULT_ORACLE_PAD, help="constant cells on each side")
    oracle.add_argument("--tol", type=float, default=DEFAULT_BOUNDS_TOL, help="boundedness tolerance")
    _run_options(oracle)

    return parser
