"""
Convection boundedness criterion on sampled diagrams.

One explicit Euler step of a perfect isolated discontinuity stays bounded
only if phi_f <= phi_c / c (slope condition) and phi_f <= 1 (unity
condition) at every normalised cell value. The slope condition fixes the
largest admissible CFL number; the unity condition cannot be repaired by
reducing it.

Classes:
    Condition: Which of the two conditions is violated.
    Violation: A maximal phi_c interval violating one condition.
    CBCReport: Summary of a diagram against the criterion.

Functions:
    cbc_report, classify_violations: Evaluate a sampled diagram.
    analytic_cmax_thinc, analytic_cmax_clipped_thinc: Closed forms.
    thinc_beta_for_cfl, clip_slope_for_cfl: Free parameters for a target CFL.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

import numpy as np
from scipy.optimize import brentq

from nvd.diagram import NVDCurve
from schemes.constants import FloatArray
from schemes.errors import ConfigurationError

logger = logging.getLogger(__name__)


class Condition(str, Enum):
    SLOPE = "slope"
    UNITY = "unity"


class Violation(NamedTuple):
    """Closed phi_c interval [lower, upper] of consecutive violating samples."""

    lower: float
    upper: float
    condition: Condition


@dataclass(frozen=True, eq=False)
class CBCReport:
    """
    Result of checking a diagram against the boundedness criterion.

    Attributes:
        curve: The evaluated diagram.
        c_max: Largest CFL number satisfying the slope condition at every
            sample, capped at 1.
        unconditional_violation: True iff some phi_f exceeds 1.
        max_phi_f: Largest sampled face value.
        argmax_phi_c: Sample position of ``max_phi_f``.
        binding_phi_c: Sample position where phi_c / phi_f is smallest, or
            None when no sample has phi_f > 0.
    """

    curve: NVDCurve
    c_max: float
    unconditional_violation: bool
    max_phi_f: float
    argmax_phi_c: float
    binding_phi_c: Optional[float]

    def violations_at(self, c: float) -> list[Violation]:
        return classify_violations(self.curve, c)


def _cfl_ratios(curve: NVDCurve) -> FloatArray:
    """phi_c / phi_f where phi_f > 0; samples with phi_f <= 0 impose no limit."""
    positive = curve.phi_f > 0.0
    with np.errstate(divide="ignore"):
        return np.where(positive, curve.phi_c / np.where(positive, curve.phi_f, 1.0), np.inf)


def cbc_report(curve: NVDCurve) -> CBCReport:
    """
    Evaluate a sampled diagram against the criterion.

    c_max is the sampled minimum of phi_c / phi_f, without interpolation.

    Example:
        >>> report = cbc_report(sample_nvd(SchemeConfig.from_name("thinc-clipped"), 4000))
        >>> round(report.c_max, 3)
        0.4
    """
    ratios = _cfl_ratios(curve)
    binding = int(np.argmin(ratios))
    binding_ratio = float(ratios[binding])
    c_max = min(1.0, binding_ratio)
    top = int(np.argmax(curve.phi_f))
    max_phi_f = float(curve.phi_f[top])

    report = CBCReport(
        curve=curve,
        c_max=c_max,
        unconditional_violation=max_phi_f > 1.0,
        max_phi_f=max_phi_f,
        argmax_phi_c=float(curve.phi_c[top]),
        binding_phi_c=float(curve.phi_c[binding]) if math.isfinite(binding_ratio) else None,
    )
    logger.info(
        "%s: c_max=%.6f unconditional_violation=%s (n=%d)",
        curve.scheme.name, report.c_max, report.unconditional_violation, curve.n_samples,
    )
    return report


def _runs(mask: FloatArray, phi_c: FloatArray, condition: Condition) -> list[Violation]:
    """Maximal runs of True in ``mask`` as phi_c intervals."""
    if not mask.any():
        return []
    padded = np.concatenate(([False], mask, [False])).astype(np.int8)
    edges = np.diff(padded)
    starts = np.flatnonzero(edges == 1)
    stops = np.flatnonzero(edges == -1) - 1
    return [
        Violation(float(phi_c[a]), float(phi_c[b]), condition)
        for a, b in zip(starts, stops)
    ]


def classify_violations(curve: NVDCurve, c: float) -> list[Violation]:
    """
    List the phi_c intervals where a scheme breaks the criterion at CFL c.

    Slope violations are samples with phi_c / phi_f < c, the same ratio
    c_max is taken from, so the result is empty exactly when c <= c_max
    and no sample exceeds one.

    :param curve: Sampled diagram.
    :param c: CFL number in (0, 1].
    :return: Slope intervals followed by unity intervals, each in phi_c order.
    :raises ConfigurationError: If c is outside (0, 1].
    """
    if not (0.0 < c <= 1.0):
        raise ConfigurationError(f"CFL number must lie in (0, 1], got {c}")
    slope = _cfl_ratios(curve) < c
    unity = curve.phi_f > 1.0
    return _runs(slope, curve.phi_c, Condition.SLOPE) + _runs(unity, curve.phi_c, Condition.UNITY)


# ========== Closed Forms and Parameter Design ==========

def analytic_cmax_thinc(beta: float) -> float:
    """
    Exact c_max of the THINC diagram, sinh(beta) / (beta e^beta).

    The THINC profile is concave with f(0) = 0, so phi/f(phi) is smallest
    as phi -> 0, where it equals 1/f'(0).

    Example:
        >>> round(analytic_cmax_thinc(2.0), 5)
        0.24542
    """
    if not (math.isfinite(beta) and beta > 0):
        raise ConfigurationError(f"beta must be > 0, got {beta}")
    return -math.expm1(-2.0 * beta) / (2.0 * beta)


def analytic_cmax_clipped_thinc(beta: float, clip_slope: float) -> float:
    """Exact c_max of clipped THINC: min(1, max(THINC bound, 1/clip_slope))."""
    if not (math.isfinite(clip_slope) and clip_slope > 0):
        raise ConfigurationError(f"clip slope must be > 0, got {clip_slope}")
    return min(1.0, max(analytic_cmax_thinc(beta), 1.0 / clip_slope))


def thinc_beta_for_cfl(c: float) -> float:
    """
    Steepest THINC profile that still satisfies the slope condition at CFL c.

    :param c: Target CFL number in (0, 1).
    :return: The beta solving sinh(beta) / (beta e^beta) = c.
    :raises ConfigurationError: If c is outside (0, 1).
    """
    if not (0.0 < c < 1.0):
        raise ConfigurationError(f"target CFL must lie in (0, 1), got {c}")
    # the bound decreases from 1 towards 1/(2 beta), so 1/(2c) brackets the root
    upper = max(1.0, 1.0 / (2.0 * c))
    beta = brentq(lambda b: analytic_cmax_thinc(b) - c, 1e-12, upper, xtol=1e-14)
    logger.info("largest THINC beta for CFL %.4g: %.12g", c, beta)
    return float(beta)


def clip_slope_for_cfl(c: float) -> float:
    """Clip slope that makes clipped THINC admissible up to CFL c."""
    if not (0.0 < c <= 1.0):
        raise ConfigurationError(f"target CFL must lie in (0, 1], got {c}")
    return 1.0 / c
