"""
Constants and default parameters for nvdbound.

This module collects the numerical defaults shared by the reconstruction
kernels, the NVD analysis, the solvers and the command-line front end,
together with the array type aliases used across the package.

Defaults:
    - Division guard epsilon: 1e-16
    - Ideal WENO weights: (0.1, 0.6, 0.3)
    - TENO: C = 1, q = 6 (the cutoff C_T has no default)
    - Boundedness tolerance: 1e-10
"""

from typing import Final

import numpy as np
from numpy.typing import NDArray

# =============================================================================
# TOOL METADATA
# =============================================================================

TOOL_NAME: Final[str] = "nvdbound"
"""Program name used in diagnostics and log prefixes."""

TOOL_VERSION: Final[str] = "0.1.0"
"""Version recorded in every run manifest."""


# =============================================================================
# TYPE ALIASES
# =============================================================================

FloatArray = NDArray[np.float64]
"""Array of float64 values of any shape."""

StencilWindow = NDArray[np.float64]
"""
Five consecutive cell averages (phi_{i-2}, ..., phi_{i+2}) along the last axis.

Leading axes batch independent windows, so a whole grid row of faces can be
reconstructed in one call.
"""

WeightTriple = NDArray[np.float64]
"""Nonlinear weights (w_0, w_1, w_2) along the last axis, summing to one."""


# =============================================================================
# RECONSTRUCTION DEFAULTS
# =============================================================================

DEFAULT_EPSILON: Final[float] = 1e-16
"""Division guard in the WENO and TENO weights."""

IDEAL_WEIGHTS: Final[tuple[float, float, float]] = (0.1, 0.6, 0.3)
"""Linear weights d_k of the three fifth-order substencils."""

DEFAULT_C_TENO: Final[float] = 1.0
"""TENO constant C in gamma_k = (C + tau/(IS_k + eps))^q."""

DEFAULT_Q_TENO: Final[int] = 6
"""TENO exponent q."""

TENO_CT_LIMIT: Final[float] = 1.0 / 3.0
"""Exclusive upper bound for the TENO cutoff; at least one stencil survives below it."""

DEFAULT_BETA: Final[float] = 2.0
"""THINC steepness when none is given."""

DEFAULT_CLIP_SLOPE: Final[float] = 2.5
"""Slope of the clipping line of the clipped THINC scheme (c_max = 1/slope)."""

WEIGHT_SUM_TOL: Final[float] = 1e-15
"""Allowed deviation of sum(d_k) from one."""

DEGENERATE_TOL: Final[float] = 1e-14
"""
Relative size below which the normalising jump phi_{i+1} - phi_{i-1} counts as zero.

Scaled by the window magnitude inside the THINC reconstruction.
"""


# =============================================================================
# NVD ANALYSIS DEFAULTS
# =============================================================================

DEFAULT_NVD_SAMPLES: Final[int] = 100
"""Number of interior samples phi_c = k/(n+1) of a diagram."""

DEFAULT_CMAX_SAMPLES: Final[int] = 4000
"""Samples used by the cmax command; the sampled c_max is within 2/n of a smooth curve."""

DEFAULT_ORACLE_PAD: Final[int] = 6
"""Constant cells on each side of the intermediate cell in the one-step oracle."""

MIN_ORACLE_PAD: Final[int] = 4
"""Smallest padding that keeps every five-cell stencil inside the profile."""

DEFAULT_BOUNDS_TOL: Final[float] = 1e-10
"""Excursion beyond the initial bounds still counted as bounded."""


# =============================================================================
# SOLVER DEFAULTS
# =============================================================================

DEFAULT_CELLS_1D: Final[int] = 200
"""Cells of the 1D square wave grid."""

DOMAIN_1D: Final[tuple[float, float]] = (-1.0, 1.0)
"""Periodic domain of the square wave test."""

SQUARE_WAVE_SUPPORT: Final[tuple[float, float]] = (-0.4, 0.4)
"""Interval on which the initial square wave equals one."""

DEFAULT_VELOCITY_1D: Final[float] = 1.0
"""Advection speed u of the 1D test."""

DEFAULT_END_TIME_1D: Final[float] = 0.1
"""Final time of the 1D test."""

DEFAULT_CELLS_2D: Final[int] = 100
"""Cells per axis of the Zalesak grid on the unit square."""

ZALESAK_CENTER: Final[tuple[float, float]] = (0.5, 0.75)
"""Centre of the slotted disk."""

ZALESAK_RADIUS: Final[float] = 0.15
"""Radius of the slotted disk."""

ZALESAK_SLOT_HALF_WIDTH: Final[float] = 0.025
"""Half width of the slot, centred on x = 0.5."""

ZALESAK_SLOT_TOP: Final[float] = 0.85
"""The slot occupies y < 0.85 inside the disk."""

ZALESAK_SUBSAMPLES: Final[int] = 4
"""Subcell samples per axis for the initial overlap fractions."""

ROTATION_OMEGA: Final[float] = 2.0 * np.pi
"""Angular velocity of the solid-body rotation (one revolution per unit time)."""

ROTATION_CENTER: Final[tuple[float, float]] = (0.5, 0.5)
"""Centre of the solid-body rotation."""


# =============================================================================
# OUTPUT
# =============================================================================

CSV_FLOAT_FORMAT: Final[str] = ".17g"
"""Format spec for every float written to CSV and `#` summary lines."""

REPORT_FLOAT_FORMAT: Final[str] = ".10g"
"""Format spec for floats in plain-text reports."""

LOG_FORMAT: Final[str] = "[nvdbound] %(levelname)s %(name)s: %(message)s"
"""Format of log records on stderr."""
