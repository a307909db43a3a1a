"""
One-dimensional constant-velocity advection on a periodic grid.

The conservative update phi_i - c (F_{i+1/2} - F_{i-1/2}) with faces
reconstructed from upwind-oriented five-cell windows. For u < 0 the
windows are mirrored, so every scheme only ever sees flow to the right.

Functions:
    stencil_windows: Upwind-oriented windows centred on every cell.
    face_values: Reconstructed values at the right face of every cell.
    init_square_wave: Cell averages of the indicator of [-0.4, 0.4].
    exact_advection_1d: Exact cell averages of the translated square wave.
    time_step_1d: dt = cfl h / |u|.
    step_1d: One time step.
    run_advection_1d: Integrate to the configured end time.
    local_phi_tilde_1d: Pre-step normalised value of every cell.
"""

import logging
from typing import Callable, Optional

import numpy as np

from schemes.config import SchemeConfig
from schemes.constants import DEGENERATE_TOL, SQUARE_WAVE_SUPPORT, FloatArray
from schemes.errors import GridMismatchError
from schemes.kernels import normalised_values
from schemes.reconstruct import reconstruct_faces
from solver.config import SolverConfig
from solver.grid import Field1D, Grid1D
from solver.integrators import advance, step_schedule

logger = logging.getLogger(__name__)

StepCallback = Callable[[int, FloatArray, FloatArray], None]
"""Called as callback(step, before, after) after every completed step."""


# ========== Stencils ==========

def stencil_windows(values: FloatArray, positive: bool, axis: int = 0) -> FloatArray:
    """
    Five-cell windows centred on every cell, ordered along the flow.

    For positive flow the window of cell i is (phi_{i-2}, ..., phi_{i+2});
    for negative flow it is (phi_{i+2}, ..., phi_{i-2}). Periodic wrap.

    :param values: Cell averages.
    :param positive: Flow direction along ``axis``.
    :param axis: Axis to build the windows along.
    :return: Array of shape values.shape + (5,).
    """
    offsets = (2, 1, 0, -1, -2) if positive else (-2, -1, 0, 1, 2)
    return np.stack([np.roll(values, k, axis=axis) for k in offsets], axis=-1)


def face_values(cfg: SchemeConfig, values: FloatArray, positive: bool, axis: int = 0) -> FloatArray:
    """
    Upwind reconstruction at the right face i+1/2 of every cell.

    With negative flow the upwind cell of face i+1/2 is cell i+1, whose
    mirrored window reconstructs that face.
    """
    faces = reconstruct_faces(cfg, stencil_windows(values, positive, axis))
    if positive:
        return faces
    return np.roll(faces, -1, axis=axis)


# ========== Initial and Exact Data ==========

def _interval_averages(edges: FloatArray, lo: float, hi: float) -> FloatArray:
    left, right = edges[:-1], edges[1:]
    overlap = np.clip(np.minimum(right, hi) - np.maximum(left, lo), 0.0, None)
    return np.where((left >= lo) & (right <= hi), 1.0, overlap / (right - left))


def init_square_wave(
    grid: Grid1D,
    support: tuple[float, float] = SQUARE_WAVE_SUPPORT,
) -> Field1D:
    """
    Cell averages of the indicator function of ``support``.

    Cells fully inside get exactly 1, cells fully outside 0 and straddling
    cells the exact overlap fraction.

    Example:
        >>> field = init_square_wave(Grid1D(200))
        >>> round(field.mass(), 12)
        0.8
    """
    lo, hi = support
    return Field1D(grid, _interval_averages(grid.edges, lo, hi), 0.0)


def exact_advection_1d(
    grid: Grid1D,
    u: float,
    t: float,
    support: tuple[float, float] = SQUARE_WAVE_SUPPORT,
) -> Field1D:
    """
    Exact cell averages of the square wave translated by u t with periodic wrap.

    :param grid: Grid to average on.
    :param u: Advection speed.
    :param t: Elapsed time.
    :param support: Initial support of the square wave.
    :return: Field at time t.
    """
    lo, hi = support
    shift = (u * t) % grid.length
    # the support may straddle the periodic seam; sum the neighbouring copies
    values = np.zeros(grid.n_cells)
    for k in (-1, 0, 1):
        offset = shift + k * grid.length
        values += _interval_averages(grid.edges, lo + offset, hi + offset)
    return Field1D(grid, values, t)


# ========== Time Stepping ==========

def time_step_1d(cfg: SolverConfig, grid: Grid1D) -> float:
    return cfg.cfl * grid.h / abs(cfg.velocity)


def _euler_operator(cfg: SolverConfig, h: float, dt: float) -> Callable[[FloatArray], FloatArray]:
    positive = cfg.velocity > 0
    courant = cfg.velocity * dt / h

    def euler(values: FloatArray) -> FloatArray:
        flux = face_values(cfg.scheme, values, positive)
        return values - courant * (flux - np.roll(flux, 1))

    return euler


def step_1d(f: Field1D, cfg: SolverConfig, dt: Optional[float] = None) -> Field1D:
    """
    Advance a field by one time step.

    :param f: Current field.
    :param cfg: Solver configuration.
    :param dt: Step size; defaults to cfl h / |u|.
    :return: The field at f.time + dt.
    """
    dt = time_step_1d(cfg, f.grid) if dt is None else dt
    euler = _euler_operator(cfg, f.grid.h, dt)
    return Field1D(f.grid, advance(f.values, euler, cfg.integrator), f.time + dt)


def run_advection_1d(
    cfg: SolverConfig,
    grid: Grid1D,
    initial: Optional[Field1D] = None,
    callback: Optional[StepCallback] = None,
) -> Field1D:
    """
    Integrate from the initial field's time up to cfg.end_time.

    The last step is shortened to land exactly on the end time. A field
    already at or past the end time is returned unchanged.

    :param cfg: Solver configuration.
    :param grid: Grid of the run.
    :param initial: Starting field; defaults to the square wave.
    :param callback: Receives (step, before, after) after every step.
    :return: The final field.
    :raises GridMismatchError: If ``initial`` lives on another grid.
    """
    field = init_square_wave(grid) if initial is None else initial
    if field.grid != grid:
        raise GridMismatchError(f"initial field is on {field.grid}, run grid is {grid}")

    remaining = cfg.end_time - field.time
    if remaining <= 0:
        logger.warning("initial field is at t=%.6g, already past end time %.6g", field.time, cfg.end_time)
        return field

    dt = time_step_1d(cfg, grid)
    schedule = step_schedule(remaining, dt)
    logger.info(
        "advect1d %s: cfl=%.4g dt=%.6g steps=%d integrator=%s",
        cfg.scheme.name, cfg.cfl, dt, len(schedule), cfg.integrator.value,
    )

    values = field.values
    for step, step_dt in enumerate(schedule, start=1):
        updated = advance(values, _euler_operator(cfg, grid.h, step_dt), cfg.integrator)
        if callback is not None:
            callback(step, values, updated)
        values = updated
        logger.debug("step %d: min=%.17g max=%.17g", step, values.min(), values.max())

    return Field1D(grid, values, cfg.end_time)


def local_phi_tilde_1d(values: FloatArray, velocity: float) -> FloatArray:
    """Normalised value of every cell along the flow; NaN where degenerate."""
    return normalised_values(stencil_windows(values, velocity > 0), DEGENERATE_TOL)
