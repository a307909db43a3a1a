"""
Solver Package for nvdbound.

Finite-volume advection solvers built on the schemes package.

Modules:
    - grid: Grid1D, Field1D, Grid2D, Field2D
    - config: Integrator, RotationSpec, SolverConfig
    - integrators: Forward Euler, SSP-RK3 and the step schedule
    - advection1d: Periodic constant-velocity transport of a square wave
    - zalesak: Solid-body rotation of the slotted disk

Example:
    >>> from schemes import SchemeConfig
    >>> from solver import Grid1D, SolverConfig, run_advection_1d
    >>> cfg = SolverConfig(SchemeConfig.from_name("thinc-clipped"), cfl=0.4)
    >>> field = run_advection_1d(cfg, Grid1D(200))
"""

from .advection1d import (
    exact_advection_1d,
    face_values,
    init_square_wave,
    local_phi_tilde_1d,
    run_advection_1d,
    stencil_windows,
    step_1d,
    time_step_1d,
)
from .config import Integrator, RotationSpec, SolverConfig
from .grid import Field1D, Field2D, Grid1D, Grid2D
from .integrators import forward_euler, ssp_rk3, step_schedule
from .zalesak import (
    face_velocities,
    init_zalesak,
    local_phi_tilde_2d,
    rotation_velocity,
    run_zalesak,
    step_2d,
    time_step_2d,
)

__all__ = [
    # Grids
    "Grid1D",
    "Field1D",
    "Grid2D",
    "Field2D",

    # Configuration
    "Integrator",
    "RotationSpec",
    "SolverConfig",

    # Integrators
    "forward_euler",
    "ssp_rk3",
    "step_schedule",

    # 1D
    "stencil_windows",
    "face_values",
    "init_square_wave",
    "exact_advection_1d",
    "time_step_1d",
    "step_1d",
    "run_advection_1d",
    "local_phi_tilde_1d",

    # 2D
    "rotation_velocity",
    "face_velocities",
    "init_zalesak",
    "time_step_2d",
    "step_2d",
    "run_zalesak",
    "local_phi_tilde_2d",
]
