"""Error norms against reference solutions."""

import numpy as np

from schemes.errors import GridMismatchError
from solver.grid import Field1D, Field2D


def _cell_volume(f: Field1D | Field2D) -> float:
    if isinstance(f, Field2D):
        return f.grid.dx * f.grid.dy
    return f.grid.h


def l1_error(f: Field1D | Field2D, exact: Field1D | Field2D) -> float:
    """
    Discrete L1 distance sum |phi - phi_exact| times the cell volume.

    :raises GridMismatchError: If the two fields live on different grids.

    Example:
        >>> grid = Grid1D(200)
        >>> l1_error(Field1D(grid, np.full(200, 0.01)), Field1D(grid, np.zeros(200)))
        0.02
    """
    if type(f) is not type(exact) or f.grid != exact.grid:
        raise GridMismatchError(f"cannot compare a field on {f.grid} with one on {exact.grid}")
    return float(np.sum(np.abs(f.values - exact.values)) * _cell_volume(f))
