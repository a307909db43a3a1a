"""
NVD Package for nvdbound.

Normalised variable diagrams, the convection boundedness criterion and the
largest admissible CFL number, cross-checked by a one-step oracle.

Modules:
    - diagram: NVDCurve and sample_nvd
    - criterion: CBCReport, violation intervals, closed forms, parameter design
    - oracle: One explicit Euler step of a perfect isolated discontinuity

Example:
    >>> from nvd import sample_nvd, cbc_report
    >>> report = cbc_report(sample_nvd(SchemeConfig.from_name("thinc"), 4000))
    >>> report.c_max
"""

from .criterion import (
    CBCReport,
    Condition,
    Violation,
    analytic_cmax_clipped_thinc,
    analytic_cmax_thinc,
    cbc_report,
    classify_violations,
    clip_slope_for_cfl,
    thinc_beta_for_cfl,
)
from .diagram import NormalisedPair, NVDCurve, discontinuity_windows, sample_nvd, sample_positions
from .oracle import OneStepOutcome, criterion_counterexamples, one_step_oracle, oracle_consistency, oracle_sweep

__all__ = [
    # Diagram
    "NormalisedPair",
    "NVDCurve",
    "sample_nvd",
    "sample_positions",
    "discontinuity_windows",

    # Criterion
    "Condition",
    "Violation",
    "CBCReport",
    "cbc_report",
    "classify_violations",
    "analytic_cmax_thinc",
    "analytic_cmax_clipped_thinc",
    "thinc_beta_for_cfl",
    "clip_slope_for_cfl",

    # Oracle
    "OneStepOutcome",
    "one_step_oracle",
    "oracle_sweep",
    "oracle_consistency",
    "criterion_counterexamples",
]
