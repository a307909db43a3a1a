"""
Brute-force one-step boundedness oracle.

Builds the profile (0, ..., 0, phi_c, 1, ..., 1), advances it by one
explicit Euler step at CFL c and reports whether the result left [0, 1].
This checks the diagram-based prediction against the actual update.
"""

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from nvd.criterion import CBCReport, cbc_report
from nvd.diagram import sample_nvd, sample_positions
from schemes.config import SchemeConfig
from schemes.constants import (
    DEFAULT_BOUNDS_TOL,
    DEFAULT_NVD_SAMPLES,
    DEFAULT_ORACLE_PAD,
    DEGENERATE_TOL,
    MIN_ORACLE_PAD,
)
from schemes.errors import ConfigurationError
from schemes.kernels import normalised_values
from schemes.reconstruct import reconstruct_faces

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OneStepOutcome:
    """
    Result of one Euler step of a perfect isolated discontinuity.

    Attributes:
        bounded: Both excursions are within the tolerance.
        max_overshoot: max(0, max(phi) - 1) after the step.
        max_undershoot: max(0, -min(phi)) after the step.
        violating_phi_c: Pre-step normalised value of every cell that left
            [-tol, 1 + tol], in cell order; degenerate windows are omitted.
    """

    bounded: bool
    max_overshoot: float
    max_undershoot: float
    violating_phi_c: tuple[float, ...]


def one_step_oracle(
    cfg: SchemeConfig,
    c: float,
    phi_c: float,
    pad: int = DEFAULT_ORACLE_PAD,
    tol: float = DEFAULT_BOUNDS_TOL,
) -> OneStepOutcome:
    """
    Advance a perfect isolated discontinuity by one Euler step.

    :param cfg: Scheme configuration.
    :param c: CFL number in (0, 1].
    :param phi_c: Value of the intermediate cell, in (0, 1).
    :param pad: Constant cells on each side, >= 4.
    :param tol: Allowed excursion beyond [0, 1].
    :return: The boundedness outcome.
    :raises ConfigurationError: If a parameter is out of range.
    """
    if not (0.0 < c <= 1.0):
        raise ConfigurationError(f"CFL number must lie in (0, 1], got {c}")
    if not (0.0 < phi_c < 1.0):
        raise ConfigurationError(f"phi_c must lie in (0, 1), got {phi_c}")
    if pad < MIN_ORACLE_PAD:
        raise ConfigurationError(f"pad must be >= {MIN_ORACLE_PAD}, got {pad}")
    if tol < 0:
        raise ConfigurationError(f"tol must be >= 0, got {tol}")

    profile = np.concatenate((np.zeros(pad), [phi_c], np.ones(pad)))
    n_cells = profile.size
    # three ghost cells per side repeat the plateaus
    windows = sliding_window_view(np.pad(profile, 3, mode="edge"), 5)
    # faces[k] sits between profile cells k-1 and k
    faces = reconstruct_faces(cfg, windows[: n_cells + 1])
    updated = profile - c * (faces[1:] - faces[:-1])

    max_overshoot = max(0.0, float(updated.max()) - 1.0)
    max_undershoot = max(0.0, -float(updated.min()))
    outside = (updated > 1.0 + tol) | (updated < -tol)
    local_phi = normalised_values(windows[1 : n_cells + 1], DEGENERATE_TOL)
    violating = tuple(float(v) for v in local_phi[outside] if np.isfinite(v))

    return OneStepOutcome(
        bounded=max_overshoot <= tol and max_undershoot <= tol,
        max_overshoot=max_overshoot,
        max_undershoot=max_undershoot,
        violating_phi_c=violating,
    )


def oracle_sweep(
    cfg: SchemeConfig,
    c: float,
    n: int = DEFAULT_NVD_SAMPLES,
    pad: int = DEFAULT_ORACLE_PAD,
    tol: float = DEFAULT_BOUNDS_TOL,
) -> list[tuple[float, OneStepOutcome]]:
    """Run the oracle at the diagram sample positions k/(n+1)."""
    return [(float(phi), one_step_oracle(cfg, c, float(phi), pad, tol)) for phi in sample_positions(n)]


def criterion_counterexamples(
    report: CBCReport,
    c: float,
    outcomes: Sequence[tuple[float, OneStepOutcome]],
) -> list[float]:
    """
    Samples of an oracle sweep that are unbounded although the criterion holds at c.

    The criterion is necessary, so the result should be empty; a non-empty
    list is a counterexample and is logged as a warning.

    :param report: Criterion evaluated on the diagram of the swept scheme.
    :param c: CFL number of the sweep.
    :param outcomes: Result of ``oracle_sweep`` at c.
    :return: phi_c values of the counterexamples.
    """
    if c > report.c_max or report.unconditional_violation:
        return []
    counterexamples = [phi for phi, outcome in outcomes if not outcome.bounded]
    if counterexamples:
        logger.warning(
            "%s at CFL %.4g: %d unbounded steps although the criterion holds",
            report.curve.scheme.name, c, len(counterexamples),
        )
    return counterexamples


def oracle_consistency(
    cfg: SchemeConfig,
    c: float,
    n: int = DEFAULT_NVD_SAMPLES,
    pad: int = DEFAULT_ORACLE_PAD,
    tol: float = DEFAULT_BOUNDS_TOL,
) -> list[float]:
    """Find samples where the criterion holds at c but the step is unbounded."""
    report = cbc_report(sample_nvd(cfg, n))
    if c > report.c_max or report.unconditional_violation:
        return []
    return criterion_counterexamples(report, c, oracle_sweep(cfg, c, n, pad, tol))
