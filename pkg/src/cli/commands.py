"""
Subcommand implementations.

Each command takes the parsed arguments of a single run (swept flags
already reduced to one value) and returns the text to print: the CSV
itself when no --out is given, otherwise a short summary of the files
written. Boundedness violations are reported as data and never raise.
"""

import argparse
import logging
from functools import partial
from typing import Any, Callable

import numpy as np

from cli.output import PlotSpec, emit, format_value, render_csv, render_report
from metrics.bounds import BoundsReport, BoundsTracker, bounds_report
from metrics.error import l1_error
from nvd.criterion import (
    analytic_cmax_clipped_thinc,
    analytic_cmax_thinc,
    cbc_report,
    clip_slope_for_cfl,
    thinc_beta_for_cfl,
)
from nvd.diagram import sample_nvd
from nvd.oracle import criterion_counterexamples, oracle_sweep
from schemes.config import SchemeConfig, SchemeKind
from schemes.constants import DOMAIN_1D, REPORT_FLOAT_FORMAT
from schemes.errors import ConfigurationError
from solver.advection1d import (
    exact_advection_1d,
    init_square_wave,
    local_phi_tilde_1d,
    run_advection_1d,
    time_step_1d,
)
from solver.config import SolverConfig
from solver.grid import Field2D, Grid1D, Grid2D
from solver.integrators import step_schedule
from solver.zalesak import init_zalesak, local_phi_tilde_2d, run_zalesak, time_step_2d

logger = logging.getLogger(__name__)

Command = Callable[[argparse.Namespace], str]

THINC_FLAGS = ("beta", "slope")
WENO_FLAGS = ("ct", "epsilon", "c_teno", "q_teno", "weights")


def scheme_from_args(args: argparse.Namespace) -> SchemeConfig:
    weights = tuple(args.weights) if args.weights else None
    cfg = SchemeConfig.from_name(
        args.scheme,
        beta=args.beta,
        clip_slope=args.slope,
        ct=args.ct,
        epsilon=args.epsilon,
        c_teno=args.c_teno,
        q_teno=args.q_teno,
        d=weights,
    )
    unused = []
    if not cfg.kind.is_thinc:
        unused += [flag for flag in THINC_FLAGS if getattr(args, flag) is not None]
    if not cfg.kind.is_weno_family:
        unused += [flag for flag in WENO_FLAGS if getattr(args, flag) is not None]
    if unused:
        logger.warning("%s ignores %s", cfg.name, ", ".join("--" + flag.replace("_", "-") for flag in unused))
    return cfg


def _finish(args: argparse.Namespace, text: str, parameters: dict[str, Any], plot: PlotSpec | None) -> str:
    if args.out is None:
        return text
    written = emit(args.out, args.command, text, parameters, plot)
    return "wrote " + " ".join(str(p) for p in written)


def _bounds_comments(report: BoundsReport) -> list[tuple[str, Any]]:
    return [
        ("bounded", report.bounded),
        ("max_overshoot", report.max_overshoot),
        ("max_undershoot", report.max_undershoot),
    ]


def _history_comments(history: BoundsReport) -> list[tuple[str, Any]]:
    first = history.first_violation
    return [
        ("run_bounded", history.bounded),
        ("run_max_overshoot", history.max_overshoot),
        ("run_max_undershoot", history.max_undershoot),
        ("violating_cells", len(history.violating_cells)),
        ("first_violation_step", first.step if first else None),
        ("first_violation_phi_tilde", first.phi_c if first else None),
    ]


# ========== nvd ==========

def cmd_nvd(args: argparse.Namespace) -> str:
    cfg = scheme_from_args(args)
    curve = sample_nvd(cfg, args.n)
    text = render_csv(("phi_tilde_c", "phi_tilde_f"), zip(curve.phi_c.tolist(), curve.phi_f.tolist()))
    plot = PlotSpec(
        title=f"NVD of {cfg.name}",
        xlabel="phi_tilde_c",
        ylabel="phi_tilde_f",
        curves=(("1:2", "lines lw 2", cfg.name), ("1:1", "lines dt 2", "upwind")),
        extra=("set xrange [0:1]", "set yrange [0:1.2]"),
    )
    return _finish(args, text, {"scheme": cfg.as_dict(), "n": args.n}, plot)


# ========== cmax ==========

def cmd_cmax(args: argparse.Namespace) -> str:
    cfg = scheme_from_args(args)
    report = cbc_report(sample_nvd(cfg, args.n))
    lines: list[tuple[str, Any]] = [
        ("scheme", cfg.name),
        ("n", args.n),
        ("c_max", report.c_max),
        ("unconditional_violation", report.unconditional_violation),
        ("max_phi_f", report.max_phi_f),
        ("argmax_phi_c", report.argmax_phi_c),
        ("binding_phi_c", report.binding_phi_c),
    ]
    if cfg.kind.is_thinc:
        if cfg.kind is SchemeKind.THINC_ORIGINAL:
            analytic = analytic_cmax_thinc(cfg.beta)
        else:
            analytic = analytic_cmax_clipped_thinc(cfg.beta, cfg.clip_slope)
        lines += [("analytic_c_max", analytic), ("analytic_difference", abs(report.c_max - analytic))]

    if args.target_cfl is not None and not cfg.kind.is_thinc:
        logger.warning("--target-cfl only applies to thinc and thinc-clipped, ignoring it for %s", cfg.name)
    elif args.target_cfl is not None:
        if cfg.kind is SchemeKind.THINC_ORIGINAL:
            key, suggested = "suggested_beta", thinc_beta_for_cfl(args.target_cfl)
            tuned = cfg.with_params(beta=suggested)
        else:
            key, suggested = "suggested_slope", clip_slope_for_cfl(args.target_cfl)
            tuned = cfg.with_params(clip_slope=suggested)
        lines += [(key, suggested), ("suggested_c_max", cbc_report(sample_nvd(tuned, args.n)).c_max)]

    text = render_report(lines, REPORT_FLOAT_FORMAT)
    parameters = {"scheme": cfg.as_dict(), "n": args.n, "target_cfl": args.target_cfl}
    return _finish(args, text, parameters, None)


# ========== advect1d ==========

def cmd_advect1d(args: argparse.Namespace) -> str:
    cfg = SolverConfig(
        scheme=scheme_from_args(args),
        cfl=args.cfl,
        integrator=args.integrator,
        end_time=args.t_end,
        velocity=args.velocity,
    )
    grid = Grid1D(args.cells, *DOMAIN_1D)
    initial = init_square_wave(grid)
    lower, upper = float(initial.values.min()), float(initial.values.max())

    tracker = BoundsTracker(lower, upper, partial(local_phi_tilde_1d, velocity=cfg.velocity), args.tol)
    final = run_advection_1d(cfg, grid, initial, callback=tracker)
    exact = exact_advection_1d(grid, cfg.velocity, cfg.end_time)
    report = bounds_report(final, lower, upper, args.tol, tracker)
    dt = time_step_1d(cfg, grid)

    comments = [
        ("scheme", cfg.scheme.name),
        ("cfl", cfg.cfl),
        *_bounds_comments(report),
        *_history_comments(tracker.history_report()),
        ("l1_error", l1_error(final, exact)),
        ("steps", len(step_schedule(cfg.end_time, dt))),
        ("dt", dt),
    ]
    rows = zip(grid.centers.tolist(), final.values.tolist(), exact.values.tolist())
    text = render_csv(("x", "phi", "phi_exact"), rows, comments)
    plot = PlotSpec(
        title=f"{cfg.scheme.name}, CFL {format_value(cfg.cfl)}, t = {format_value(cfg.end_time)}",
        xlabel="x",
        ylabel="phi",
        curves=(("1:3", "lines dt 2", "exact"), ("1:2", "linespoints pt 7 ps 0.5", cfg.scheme.name)),
        extra=("set yrange [-0.2:1.2]",),
    )
    parameters = {"solver": cfg.as_dict(), "cells": args.cells, "tol": args.tol}
    return _finish(args, text, parameters, plot)


# ========== zalesak ==========

def cmd_zalesak(args: argparse.Namespace) -> str:
    cfg = SolverConfig.for_zalesak(
        scheme_from_args(args),
        cfl=args.cfl,
        revolutions=args.revolutions,
        integrator=args.integrator,
    )
    grid = Grid2D(args.nx, args.nx)
    if args.constant is None:
        initial = init_zalesak(grid)
    else:
        initial = Field2D(grid, np.full(grid.shape, args.constant))
    # the admissible range always contains [0, 1] so a constant field still has one
    lower = min(0.0, float(initial.values.min()))
    upper = max(1.0, float(initial.values.max()))

    normaliser = partial(local_phi_tilde_2d, grid=grid, spec=cfg.rotation)
    tracker = BoundsTracker(lower, upper, normaliser, args.tol)
    final = run_zalesak(cfg, grid, initial, callback=tracker)
    report = bounds_report(final, lower, upper, args.tol, tracker)
    dt = time_step_2d(cfg, grid)

    comments = [
        ("scheme", cfg.scheme.name),
        ("cfl", cfg.cfl),
        ("revolutions", args.revolutions),
        *_bounds_comments(report),
        *_history_comments(tracker.history_report()),
        ("mass_change", final.mass() - initial.mass()),
        ("steps", len(step_schedule(cfg.end_time, dt))),
        ("dt", dt),
    ]
    x, y = np.meshgrid(grid.x_centers, grid.y_centers, indexing="ij")
    rows = zip(x.ravel().tolist(), y.ravel().tolist(), final.values.ravel().tolist())
    text = render_csv(("x", "y", "phi"), rows, comments)
    plot = PlotSpec(
        title=f"{cfg.scheme.name}, CFL {format_value(cfg.cfl)}, {format_value(args.revolutions)} revolution(s)",
        xlabel="x",
        ylabel="y",
        curves=(("1:2:3", "points pt 5 ps 0.4 palette", "phi"),),
        extra=("set size square", "set cbrange [0:1]", "set view map"),
        splot=True,
    )
    parameters = {
        "solver": cfg.as_dict(),
        "nx": args.nx,
        "revolutions": args.revolutions,
        "constant": args.constant,
        "tol": args.tol,
    }
    return _finish(args, text, parameters, plot)


# ========== oracle ==========

def cmd_oracle(args: argparse.Namespace) -> str:
    cfg = scheme_from_args(args)
    if not (0.0 < args.cfl <= 1.0):
        raise ConfigurationError(f"cfl must lie in (0, 1], got {args.cfl}")
    outcomes = oracle_sweep(cfg, args.cfl, args.n, args.pad, args.tol)
    criterion = cbc_report(sample_nvd(cfg, args.n))
    inconsistent = criterion_counterexamples(criterion, args.cfl, outcomes)

    rows = [(phi, o.bounded, o.max_overshoot, o.max_undershoot) for phi, o in outcomes]
    comments = [
        ("scheme", cfg.name),
        ("cfl", args.cfl),
        ("c_max", criterion.c_max),
        ("unconditional_violation", criterion.unconditional_violation),
        ("unbounded_samples", sum(1 for _, o in outcomes if not o.bounded)),
        ("inconsistencies", len(inconsistent)),
    ]
    text = render_csv(("phi_tilde_c", "bounded", "max_overshoot", "max_undershoot"), rows, comments)
    plot = PlotSpec(
        title=f"One-step excursions of {cfg.name} at CFL {format_value(args.cfl)}",
        xlabel="phi_tilde_c",
        ylabel="excursion",
        curves=(("1:3", "linespoints", "overshoot"), ("1:4", "linespoints", "undershoot")),
    )
    parameters = {"scheme": cfg.as_dict(), "cfl": args.cfl, "n": args.n, "pad": args.pad, "tol": args.tol}
    return _finish(args, text, parameters, plot)


COMMANDS: dict[str, Command] = {
    "nvd": cmd_nvd,
    "cmax": cmd_cmax,
    "advect1d": cmd_advect1d,
    "zalesak": cmd_zalesak,
    "oracle": cmd_oracle,
}
"""Subcommand name to implementation."""
