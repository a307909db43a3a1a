"""
Uniform periodic grids and cell-average fields.

Classes:
    Grid1D, Field1D: One-dimensional grid and its cell averages.
    Grid2D, Field2D: Two-dimensional grid (x along axis 0) and its cell averages.
"""

import math
from dataclasses import dataclass

import numpy as np

from schemes.constants import DOMAIN_1D, FloatArray
from schemes.errors import ConfigurationError


def _check_axis(name: str, n: int, lo: float, hi: float) -> None:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ConfigurationError(f"{name}: cell count must be a positive integer, got {n}")
    if not (math.isfinite(lo) and math.isfinite(hi) and hi > lo):
        raise ConfigurationError(f"{name}: domain bounds must satisfy max > min, got ({lo}, {hi})")


@dataclass(frozen=True)
class Grid1D:
    """
    Uniform grid of ``n_cells`` cells on [x_min, x_max] with periodic ends.

    Example:
        >>> grid = Grid1D(200, -1.0, 1.0)
        >>> grid.h
        0.01
    """

    n_cells: int
    x_min: float = DOMAIN_1D[0]
    x_max: float = DOMAIN_1D[1]

    def __post_init__(self) -> None:
        _check_axis("Grid1D", self.n_cells, self.x_min, self.x_max)
        object.__setattr__(self, "n_cells", int(self.n_cells))

    @property
    def length(self) -> float:
        return self.x_max - self.x_min

    @property
    def h(self) -> float:
        return self.length / self.n_cells

    @property
    def edges(self) -> FloatArray:
        return np.linspace(self.x_min, self.x_max, self.n_cells + 1)

    @property
    def centers(self) -> FloatArray:
        edges = self.edges
        return 0.5 * (edges[:-1] + edges[1:])


@dataclass(frozen=True, eq=False)
class Field1D:
    """Cell averages on a Grid1D at a given time."""

    grid: Grid1D
    values: FloatArray
    time: float = 0.0

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.float64)
        if values.shape != (self.grid.n_cells,):
            raise ConfigurationError(
                f"field has shape {values.shape}, grid expects ({self.grid.n_cells},)"
            )
        if not np.all(np.isfinite(values)):
            raise ConfigurationError("field values must be finite")
        object.__setattr__(self, "values", values)

    def mass(self) -> float:
        return float(np.sum(self.values) * self.grid.h)


@dataclass(frozen=True)
class Grid2D:
    """Uniform nx-by-ny grid; arrays are indexed [i, j] with x along axis 0."""

    nx: int
    ny: int
    x_min: float = 0.0
    x_max: float = 1.0
    y_min: float = 0.0
    y_max: float = 1.0

    def __post_init__(self) -> None:
        _check_axis("Grid2D x", self.nx, self.x_min, self.x_max)
        _check_axis("Grid2D y", self.ny, self.y_min, self.y_max)
        object.__setattr__(self, "nx", int(self.nx))
        object.__setattr__(self, "ny", int(self.ny))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nx, self.ny)

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.nx

    @property
    def dy(self) -> float:
        return (self.y_max - self.y_min) / self.ny

    @property
    def x_centers(self) -> FloatArray:
        return self.x_min + self.dx * (np.arange(self.nx) + 0.5)

    @property
    def y_centers(self) -> FloatArray:
        return self.y_min + self.dy * (np.arange(self.ny) + 0.5)

    @property
    def x_faces(self) -> FloatArray:
        """Right faces x_{i+1/2}, i = 0..nx-1 (the last wraps onto x_min)."""
        return self.x_min + self.dx * (np.arange(self.nx) + 1.0)

    @property
    def y_faces(self) -> FloatArray:
        return self.y_min + self.dy * (np.arange(self.ny) + 1.0)


@dataclass(frozen=True, eq=False)
class Field2D:
    """Cell averages on a Grid2D at a given time."""

    grid: Grid2D
    values: FloatArray
    time: float = 0.0

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.float64)
        if values.shape != self.grid.shape:
            raise ConfigurationError(f"field has shape {values.shape}, grid expects {self.grid.shape}")
        if not np.all(np.isfinite(values)):
            raise ConfigurationError("field values must be finite")
        object.__setattr__(self, "values", values)

    def mass(self) -> float:
        return float(np.sum(self.values) * self.grid.dx * self.grid.dy)
