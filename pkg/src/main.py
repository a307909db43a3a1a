"""
nvdbound - convection boundedness analysis of THINC, WENO and TENO schemes.

Command-line entry point.

Usage:
    Run from the repository root::

        uv run python src/main.py cmax --scheme thinc-clipped --beta 2.0 --slope 2.5
        uv run python src/main.py advect1d --scheme thinc --beta 1.1 --cfl 0.4 0.5 --out runs/thinc.csv

    Or call programmatically::

        from main import main
        exit_code = main(["nvd", "--scheme", "upwind"])

Functions:
    configure_logging: Set up the stderr log handler.
    main: Parse arguments, run the command and map errors to exit codes.
"""

import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

# Ensure the src directory is in the path for imports
src_dir = Path(__file__).parent
if str(src_dir) not in sys.path:
    sys.path.insert(0, str(src_dir))

from cli import COMMANDS, build_parser, run_sweep
from schemes.constants import LOG_FORMAT, TOOL_NAME
from schemes.errors import NvdBoundError

EXIT_OK = 0
EXIT_USAGE = 2


def configure_logging(verbosity: int) -> None:
    """WARNING by default, INFO with -v, DEBUG with -vv."""
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger().setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one nvdbound command.

    :param argv: Arguments without the program name; defaults to sys.argv[1:].
    :return: 0 on success, 2 on invalid arguments or parameters.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        configure_logging(args.verbose)
        for text in run_sweep(COMMANDS[args.command], args):
            sys.stdout.write(text if text.endswith("\n") else text + "\n")
    except NvdBoundError as e:
        print(f"{TOOL_NAME}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
