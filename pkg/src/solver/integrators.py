"""
Explicit time integration built from forward Euler substeps.

Functions:
    forward_euler: One Euler step.
    ssp_rk3: Three-stage strong-stability-preserving Runge-Kutta step
        (Shu-Osher form: convex combinations of Euler substeps).
    step_schedule: Time steps reaching an end time exactly.
    advance: Apply the configured integrator.
"""

import math
from typing import Callable

from schemes.constants import FloatArray
from solver.config import Integrator

EulerStep = Callable[[FloatArray], FloatArray]
"""Maps cell averages to the result of one forward Euler step of fixed size."""


def forward_euler(values: FloatArray, euler: EulerStep) -> FloatArray:
    return euler(values)


def ssp_rk3(values: FloatArray, euler: EulerStep) -> FloatArray:
    stage1 = euler(values)
    stage2 = 0.75 * values + 0.25 * euler(stage1)
    return values / 3.0 + 2.0 / 3.0 * euler(stage2)


INTEGRATORS: dict[Integrator, Callable[[FloatArray, EulerStep], FloatArray]] = {
    Integrator.EULER_FORWARD: forward_euler,
    Integrator.SSP_RK3: ssp_rk3,
}


def advance(values: FloatArray, euler: EulerStep, integrator: Integrator) -> FloatArray:
    return INTEGRATORS[integrator](values, euler)


def step_schedule(end_time: float, dt: float) -> list[float]:
    """
    Step sizes reaching ``end_time`` from zero.

    Full steps of size ``dt`` followed by one shortened step when
    end_time is not a multiple of dt. Ratios within 1e-9 of an integer
    count as exact multiples so round-off never produces a sliver step.

    Example:
        >>> len(step_schedule(0.1, 0.004))
        25
        >>> step_schedule(0.1, 0.03)[-1]
        0.010000000000000009
    """
    ratio = end_time / dt
    nearest = round(ratio)
    if nearest >= 1 and abs(ratio - nearest) <= 1e-9 * max(1.0, ratio):
        return [dt] * nearest
    n_full = math.floor(ratio)
    return [dt] * n_full + [end_time - n_full * dt]
