"""
Parameter sweeps over multi-valued flags.

--beta, --slope, --ct and --cfl take one or more values. Their cartesian
product is expanded into one job per combination; with more than one job
every run writes to its own file, tagged with the swept values, and the
jobs may run in parallel processes.
"""

import argparse
import copy
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from cli.commands import Command
from cli.output import format_value
from schemes.errors import ConfigurationError

logger = logging.getLogger(__name__)

SWEEP_KEYS: tuple[str, ...] = ("beta", "slope", "ct", "cfl")
"""Flags that accept several values, in the order they appear in file tags."""


def tagged_path(out: Path, tags: list[tuple[str, float]]) -> Path:
    """
    Output path of one sweep member.

    Example:
        >>> tagged_path(Path("runs/thinc.csv"), [("beta", 2.0), ("cfl", 0.4)])
        PosixPath('runs/thinc_beta-2_cfl-0.4.csv')
    """
    tag = "_".join(f"{key}-{value:g}" for key, value in tags)
    return out.with_name(f"{out.stem}_{tag}{out.suffix}")


def expand_sweep(args: argparse.Namespace) -> list[argparse.Namespace]:
    """
    One namespace per parameter combination, swept flags reduced to scalars.

    :raises ConfigurationError: If a sweep has no --out, a value repeats or
        --jobs is not positive.
    """
    if args.jobs < 1:
        raise ConfigurationError(f"--jobs must be >= 1, got {args.jobs}")

    axes = [(key, getattr(args, key)) for key in SWEEP_KEYS if getattr(args, key, None) is not None]
    for key, values in axes:
        if len(set(values)) != len(values):
            raise ConfigurationError(f"--{key} lists a value twice: {' '.join(format_value(v) for v in values)}")
    swept = [key for key, values in axes if len(values) > 1]
    if swept and args.out is None:
        raise ConfigurationError(f"sweeping --{' --'.join(swept)} requires --out")

    jobs = []
    for combo in itertools.product(*(values for _, values in axes)):
        job = copy.copy(args)
        for (key, _), value in zip(axes, combo):
            setattr(job, key, value)
        if swept:
            job.out = tagged_path(args.out, [(key, getattr(job, key)) for key in swept])
        jobs.append(job)
    return jobs


def run_sweep(command: Command, args: argparse.Namespace) -> list[str]:
    """
    Run every member of a sweep and collect their outputs in sweep order.

    With --jobs > 1 the members run in a process pool; each writes its own
    files, so the results do not depend on scheduling.
    """
    jobs = expand_sweep(args)
    if len(jobs) > 1:
        logger.info("%s: sweep of %d runs on %d process(es)", args.command, len(jobs), min(args.jobs, len(jobs)))
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(args.jobs, len(jobs))) as pool:
            return list(pool.map(command, jobs))
    return [command(job) for job in jobs]
