"""
Solver configuration for nvdbound.

Classes:
    Integrator: Time integration method.
    RotationSpec: Solid-body rotation (angular velocity and centre).
    SolverConfig: Validated run parameters shared by the 1D and 2D solvers.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from schemes.config import SchemeConfig
from schemes.constants import (
    DEFAULT_END_TIME_1D,
    DEFAULT_VELOCITY_1D,
    ROTATION_CENTER,
    ROTATION_OMEGA,
)
from schemes.errors import ConfigurationError


class Integrator(str, Enum):
    """Explicit time integrators; forward Euler is the analysed one."""

    EULER_FORWARD = "euler"
    SSP_RK3 = "ssp-rk3"


@dataclass(frozen=True)
class RotationSpec:
    """
    Solid-body rotation u = -omega (y - y0), v = omega (x - x0).

    Attributes:
        omega: Angular velocity, nonzero.
        center: Rotation centre (x0, y0).
    """

    omega: float = ROTATION_OMEGA
    center: tuple[float, float] = ROTATION_CENTER

    def __post_init__(self) -> None:
        if not (math.isfinite(self.omega) and self.omega != 0):
            raise ConfigurationError(f"rotation omega must be finite and nonzero, got {self.omega}")
        if len(self.center) != 2 or not all(math.isfinite(c) for c in self.center):
            raise ConfigurationError(f"rotation center must be two finite reals, got {self.center}")
        object.__setattr__(self, "center", (float(self.center[0]), float(self.center[1])))

    @property
    def period(self) -> float:
        """Time of one full revolution."""
        return 2.0 * math.pi / abs(self.omega)


@dataclass(frozen=True)
class SolverConfig:
    """
    Parameters of an advection run.

    Attributes:
        scheme: Face reconstruction.
        cfl: CFL number in (0, 1]; sets the time step.
        integrator: Forward Euler or SSP-RK3.
        end_time: Final time, > 0.
        velocity: Constant 1D advection speed u, nonzero.
        rotation: Velocity field of the 2D solver.

    Raises:
        ConfigurationError: If a parameter is out of range.
    """

    scheme: SchemeConfig
    cfl: float
    integrator: Integrator = Integrator.EULER_FORWARD
    end_time: float = DEFAULT_END_TIME_1D
    velocity: float = DEFAULT_VELOCITY_1D
    rotation: RotationSpec = field(default_factory=RotationSpec)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.cfl) and 0.0 < self.cfl <= 1.0):
            raise ConfigurationError(f"cfl must lie in (0, 1], got {self.cfl}")
        if not (math.isfinite(self.end_time) and self.end_time > 0):
            raise ConfigurationError(f"end time must be > 0, got {self.end_time}")
        if not (math.isfinite(self.velocity) and self.velocity != 0):
            raise ConfigurationError(f"velocity must be finite and nonzero, got {self.velocity}")
        try:
            object.__setattr__(self, "integrator", Integrator(self.integrator))
        except ValueError as e:
            raise ConfigurationError(f"unknown integrator: {self.integrator!r}") from e

    @classmethod
    def for_zalesak(
        cls,
        scheme: SchemeConfig,
        cfl: float,
        revolutions: float = 1.0,
        integrator: Integrator = Integrator.EULER_FORWARD,
        rotation: RotationSpec | None = None,
    ) -> "SolverConfig":
        """Configuration ending after ``revolutions`` full turns of the rotation."""
        rotation = rotation or RotationSpec()
        if not (math.isfinite(revolutions) and revolutions > 0):
            raise ConfigurationError(f"revolutions must be > 0, got {revolutions}")
        return cls(
            scheme=scheme,
            cfl=cfl,
            integrator=integrator,
            end_time=revolutions * rotation.period,
            rotation=rotation,
        )

    def as_dict(self) -> dict[str, Any]:
        return {
            "scheme": self.scheme.as_dict(),
            "cfl": self.cfl,
            "integrator": self.integrator.value,
            "end_time": self.end_time,
            "velocity": self.velocity,
            "rotation": {"omega": self.rotation.omega, "center": list(self.rotation.center)},
        }
