"""
Boundedness metrics for solver output.

Classes:
    ViolatingCell: One cell that left [m - tol, M + tol].
    BoundsReport: Excursions of a field beyond [m, M].
    BoundsTracker: Per-step solver callback recording first violations.

Functions:
    bounds_report: Report on a single field.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from schemes.constants import DEFAULT_BOUNDS_TOL, FloatArray
from schemes.errors import ConfigurationError
from solver.grid import Field1D, Field2D

logger = logging.getLogger(__name__)

CellIndex = Union[int, tuple[int, ...]]


@dataclass(frozen=True)
class ViolatingCell:
    """
    A cell outside the admissible range.

    Attributes:
        index: Cell index, an int in 1D and (i, j) in 2D.
        excess: Signed excursion: value - M above the range, value - m below it.
        phi_c: Local normalised value before the violating step, None when
            unknown or degenerate.
        step: Step of the first violation, None for single-field reports.
    """

    index: CellIndex
    excess: float
    phi_c: Optional[float] = None
    step: Optional[int] = None


@dataclass(frozen=True)
class BoundsReport:
    lower_bound: float
    upper_bound: float
    max_overshoot: float
    max_undershoot: float
    violating_cells: tuple[ViolatingCell, ...]
    tol: float = DEFAULT_BOUNDS_TOL

    @property
    def bounded(self) -> bool:
        return self.max_overshoot <= self.tol and self.max_undershoot <= self.tol

    @property
    def first_violation(self) -> Optional[ViolatingCell]:
        """Earliest recorded violation (by step, then cell order)."""
        if not self.violating_cells:
            return None
        return min(
            self.violating_cells,
            key=lambda cell: (cell.step if cell.step is not None else 0),
        )


def _check_range(lower: float, upper: float, tol: float) -> None:
    if not upper > lower:
        raise ConfigurationError(f"upper bound must exceed lower bound, got [{lower}, {upper}]")
    if tol < 0:
        raise ConfigurationError(f"tol must be >= 0, got {tol}")


def _as_index(idx: np.ndarray) -> CellIndex:
    return int(idx[0]) if idx.size == 1 else tuple(int(i) for i in idx)


def _outside(values: FloatArray, lower: float, upper: float, tol: float) -> np.ndarray:
    return (values > upper + tol) | (values < lower - tol)


def _excess(value: float, lower: float, upper: float) -> float:
    return value - upper if value > upper else value - lower


def bounds_report(
    f: Field1D | Field2D,
    m: float,
    M: float,
    tol: float = DEFAULT_BOUNDS_TOL,
    tracker: Optional["BoundsTracker"] = None,
) -> BoundsReport:
    """
    Excursions of a field beyond [m, M].

    :param f: Field to check.
    :param m: Lower bound, normally the initial minimum.
    :param M: Upper bound, normally the initial maximum.
    :param tol: Allowed excursion.
    :param tracker: Run tracker whose recorded phi_c and step are attached
        to the violating cells it saw.
    :return: The report; violating cells are in cell order.
    :raises ConfigurationError: If M <= m or tol < 0.

    Example:
        >>> grid = Grid1D(4)
        >>> bounds_report(Field1D(grid, [0, 0.5, 1.001, 1]), 0.0, 1.0).max_overshoot
        0.0009999999999998899
    """
    _check_range(m, M, tol)
    values = f.values
    cells = []
    for idx in np.argwhere(_outside(values, m, M, tol)):
        index = _as_index(idx)
        phi_c, step = tracker.first_seen(index) if tracker is not None else (None, None)
        cells.append(ViolatingCell(index, _excess(float(values[tuple(idx)]), m, M), phi_c, step))

    return BoundsReport(
        lower_bound=m,
        upper_bound=M,
        max_overshoot=max(0.0, float(values.max()) - M),
        max_undershoot=max(0.0, m - float(values.min())),
        violating_cells=tuple(cells),
        tol=tol,
    )


class BoundsTracker:
    """
    Solver callback tracking boundedness over a whole run.

    Pass an instance as ``callback`` to run_advection_1d or run_zalesak.
    For every cell the first step that leaves [m - tol, M + tol] is
    recorded together with the cell's normalised value in the pre-step
    field, as computed by ``normaliser``.

    Example:
        >>> tracker = BoundsTracker(0.0, 1.0, lambda v: local_phi_tilde_1d(v, 1.0))
        >>> run_advection_1d(cfg, grid, callback=tracker)
        >>> tracker.history_report().bounded
    """

    def __init__(
        self,
        lower: float,
        upper: float,
        normaliser: Callable[[FloatArray], FloatArray],
        tol: float = DEFAULT_BOUNDS_TOL,
    ) -> None:
        _check_range(lower, upper, tol)
        self.lower = lower
        self.upper = upper
        self.tol = tol
        self.normaliser = normaliser
        self.steps = 0
        self.peak_overshoot = 0.0
        self.peak_undershoot = 0.0
        self._seen: Optional[np.ndarray] = None
        self._first: dict[CellIndex, ViolatingCell] = {}

    def __call__(self, step: int, before: FloatArray, after: FloatArray) -> None:
        self.steps = step
        self.peak_overshoot = max(self.peak_overshoot, float(after.max()) - self.upper)
        self.peak_undershoot = max(self.peak_undershoot, self.lower - float(after.min()))
        if self._seen is None:
            self._seen = np.zeros(after.shape, dtype=bool)

        fresh = _outside(after, self.lower, self.upper, self.tol) & ~self._seen
        if not fresh.any():
            return
        self._seen |= fresh
        phi = self.normaliser(before)
        for idx in np.argwhere(fresh):
            index = _as_index(idx)
            key = tuple(idx)
            phi_c = float(phi[key]) if np.isfinite(phi[key]) else None
            excess = _excess(float(after[key]), self.lower, self.upper)
            self._first[index] = ViolatingCell(index, excess, phi_c, step)
        logger.debug("step %d: %d cells left the bounds", step, int(fresh.sum()))

    def first_seen(self, index: CellIndex) -> tuple[Optional[float], Optional[int]]:
        """Recorded (phi_c, step) of a cell, or (None, None)."""
        cell = self._first.get(index)
        return (cell.phi_c, cell.step) if cell is not None else (None, None)

    def history_report(self) -> BoundsReport:
        """Report over all steps: peak excursions and first violations in step order."""
        cells = sorted(self._first.values(), key=lambda cell: (cell.step, np.atleast_1d(cell.index).tolist()))
        return BoundsReport(
            lower_bound=self.lower,
            upper_bound=self.upper,
            max_overshoot=max(0.0, self.peak_overshoot),
            max_undershoot=max(0.0, self.peak_undershoot),
            violating_cells=tuple(cells),
            tol=self.tol,
        )
