"""
Reconstruction kernels for nvdbound.

Pure functions mapping five-cell windows to the ingredients of a face
value at i+1/2 for a positive velocity: normalised cell values, the THINC
normalised profiles, the fifth-order candidate polynomials, the
Jiang-Shu smoothness indicators and the WENO-JS, WENO-Z and TENO
nonlinear weights.

All array kernels are vectorised over leading axes: a window array of
shape ``(..., 5)`` yields indicator and candidate arrays of shape
``(..., 3)``.

Functions:
    normalise_window: Normalised value of the central cell, or None.
    normalised_values: Vectorised normalisation with NaN for degenerate windows.
    thinc_nvd: Closed-form THINC face value in normalised variables.
    clipped_thinc_nvd: THINC limited by a line through the origin.
    smoothness_indicators: IS_0, IS_1, IS_2.
    candidate_reconstructions: The three third-order face values.
    weights_js, weights_z, weights_teno: Nonlinear weights.
"""

from typing import Optional

import numpy as np
from numpy.typing import ArrayLike

from schemes.config import SchemeConfig
from schemes.constants import FloatArray, StencilWindow, WeightTriple
from schemes.errors import ConfigurationError, DomainError


def as_windows(w: ArrayLike) -> StencilWindow:
    """
    Convert input to a float window array and check it.

    :param w: Array-like whose last axis has length 5.
    :return: float64 array of the same shape.
    :raises DomainError: If the last axis is not 5 long or a value is not finite.
    """
    arr = np.asarray(w, dtype=np.float64)
    if arr.ndim == 0 or arr.shape[-1] != 5:
        raise DomainError(f"a stencil window holds 5 cell averages, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DomainError("stencil window contains non-finite values")
    return arr


# ========== Normalised Variables ==========

def normalise_window(w: ArrayLike, tol: float) -> Optional[float]:
    """
    Normalised value of the central cell of one window.

    Computes (v[2] - v[1]) / (v[3] - v[1]) when |v[3] - v[1]| > tol.

    :param w: Five cell averages.
    :param tol: Absolute threshold for a degenerate denominator, >= 0.
    :return: The normalised value, or None for a degenerate window.

    Example:
        >>> normalise_window([0, 0, 0.5, 1, 1], 1e-14)
        0.5
        >>> normalise_window([3, 3, 3, 3, 3], 1e-14) is None
        True
    """
    if tol < 0:
        raise DomainError(f"tol must be >= 0, got {tol}")
    v = as_windows(w)
    if v.ndim != 1:
        raise DomainError("normalise_window takes a single window; use normalised_values")
    jump = v[3] - v[1]
    if abs(jump) <= tol:
        return None
    return float((v[2] - v[1]) / jump)


def normalised_values(w: StencilWindow, tol: float, relative: bool = False) -> FloatArray:
    """
    Vectorised normalisation of the central cells.

    :param w: Windows of shape (..., 5).
    :param tol: Degenerate threshold on |v[3] - v[1]|.
    :param relative: Scale ``tol`` by max(|v[1]|, |v[2]|, |v[3]|) per window.
    :return: Array of shape (...) with NaN where the window is degenerate.
    """
    v1, v2, v3 = w[..., 1], w[..., 2], w[..., 3]
    jump = v3 - v1
    threshold = tol
    if relative:
        threshold = tol * np.maximum(np.maximum(np.abs(v1), np.abs(v2)), np.abs(v3))
    valid = np.abs(jump) > threshold
    with np.errstate(divide="ignore", invalid="ignore"):
        phi = (v2 - v1) / np.where(valid, jump, 1.0)
    return np.where(valid, phi, np.nan)


# ========== THINC ==========

def thinc_profile(beta: float, phi_c: FloatArray) -> FloatArray:
    """
    THINC face value in normalised variables, without argument checks.

    Evaluates (sinh b + cosh b - exp(b (1 - 2 phi))) / (2 sinh b) in the
    equivalent form expm1(-2 b phi) / expm1(-2 b), which is exact at both
    endpoints and does not overflow for steep profiles.
    """
    return np.expm1(-2.0 * beta * phi_c) / np.expm1(-2.0 * beta)


def _check_thinc_domain(beta: float, phi_c: FloatArray) -> None:
    if not (np.isfinite(beta) and beta > 0):
        raise DomainError(f"beta must be > 0, got {beta}")
    if not np.all((phi_c >= 0.0) & (phi_c <= 1.0)):
        raise DomainError("phi_c must lie in [0, 1]")


def thinc_nvd(beta: float, phi_c: ArrayLike) -> float | FloatArray:
    """
    Normalised THINC face value for a monotone window.

    :param beta: Steepness, > 0.
    :param phi_c: Normalised cell value(s) in [0, 1].
    :return: Face value(s) in [0, 1]; a float for scalar input.
    :raises DomainError: If beta <= 0 or phi_c leaves [0, 1].

    Example:
        >>> thinc_nvd(2.0, 0.5)
        0.8807970779778823
    """
    phi = np.asarray(phi_c, dtype=np.float64)
    _check_thinc_domain(beta, phi)
    result = thinc_profile(beta, phi)
    return float(result) if result.ndim == 0 else result


def clipped_thinc_nvd(beta: float, clip_slope: float, phi_c: ArrayLike) -> float | FloatArray:
    """
    THINC face value limited by the line clip_slope * phi_c.

    :param beta: Steepness, > 0.
    :param clip_slope: Slope of the clipping line, > 0.
    :param phi_c: Normalised cell value(s) in [0, 1].
    :return: min(thinc_nvd(beta, phi_c), clip_slope * phi_c).
    :raises DomainError: As ``thinc_nvd``, or for clip_slope <= 0.
    """
    phi = np.asarray(phi_c, dtype=np.float64)
    _check_thinc_domain(beta, phi)
    if not (np.isfinite(clip_slope) and clip_slope > 0):
        raise DomainError(f"clip slope must be > 0, got {clip_slope}")
    result = np.minimum(thinc_profile(beta, phi), clip_slope * phi)
    return float(result) if result.ndim == 0 else result


# ========== Fifth-Order Building Blocks ==========

def smoothness_indicators(w: ArrayLike) -> FloatArray:
    """
    Jiang-Shu smoothness indicators of the three substencils.

    IS_0 uses (v0, v1, v2), IS_1 uses (v1, v2, v3), IS_2 uses (v2, v3, v4).
    Each is zero exactly when its substencil is constant.

    Example:
        >>> smoothness_indicators([0, 0, 0, 1, 1])
        array([0.        , 1.33333333, 3.33333333])
    """
    v0, v1, v2, v3, v4 = np.moveaxis(as_windows(w), -1, 0)
    is0 = 13.0 / 12.0 * (v0 - 2.0 * v1 + v2) ** 2 + 0.25 * (v0 - 4.0 * v1 + 3.0 * v2) ** 2
    is1 = 13.0 / 12.0 * (v1 - 2.0 * v2 + v3) ** 2 + 0.25 * (v1 - v3) ** 2
    is2 = 13.0 / 12.0 * (v2 - 2.0 * v3 + v4) ** 2 + 0.25 * (3.0 * v2 - 4.0 * v3 + v4) ** 2
    return np.stack((is0, is1, is2), axis=-1)


def candidate_reconstructions(w: ArrayLike) -> FloatArray:
    """
    Third-order face values at i+1/2 from the three substencils.

    Example:
        >>> candidate_reconstructions([1, 2, 3, 4, 5])
        array([3.5, 3.5, 3.5])
    """
    v0, v1, v2, v3, v4 = np.moveaxis(as_windows(w), -1, 0)
    q0 = v0 / 3.0 - 7.0 / 6.0 * v1 + 11.0 / 6.0 * v2
    q1 = -v1 / 6.0 + 5.0 / 6.0 * v2 + v3 / 3.0
    q2 = v2 / 3.0 + 5.0 / 6.0 * v3 - v4 / 6.0
    return np.stack((q0, q1, q2), axis=-1)


# ========== Nonlinear Weights ==========

def _indicators(is_vals: ArrayLike) -> FloatArray:
    arr = np.asarray(is_vals, dtype=np.float64)
    if arr.ndim == 0 or arr.shape[-1] != 3:
        raise DomainError(f"expected 3 smoothness indicators, got shape {arr.shape}")
    if np.any(arr < 0) or not np.all(np.isfinite(arr)):
        raise DomainError("smoothness indicators must be finite and nonnegative")
    return arr


def _normalise(alpha: FloatArray) -> WeightTriple:
    return alpha / alpha.sum(axis=-1, keepdims=True)


def _tau5(indicators: FloatArray) -> FloatArray:
    return np.abs(indicators[..., 0] - indicators[..., 2])[..., np.newaxis]


def weights_js(is_vals: ArrayLike, cfg: SchemeConfig) -> WeightTriple:
    """
    WENO-JS weights, alpha_k = d_k / (IS_k + eps)^2.

    alpha is scaled by the smallest IS_k + eps, so huge indicators
    cannot overflow the square.
    """
    indicators = _indicators(is_vals)
    d = np.asarray(cfg.d)
    shifted = indicators + cfg.epsilon
    return _normalise(d * (shifted.min(axis=-1, keepdims=True) / shifted) ** 2)


def weights_z(is_vals: ArrayLike, cfg: SchemeConfig) -> WeightTriple:
    """WENO-Z weights, alpha_k = d_k (1 + (tau5 / (IS_k + eps))^2), tau5 = |IS_0 - IS_2|."""
    indicators = _indicators(is_vals)
    d = np.asarray(cfg.d)
    ratio = _tau5(indicators) / (indicators + cfg.epsilon)
    # scaled by the largest ratio once it exceeds one
    scale = np.maximum(1.0, ratio.max(axis=-1, keepdims=True))
    return _normalise(d * ((1.0 / scale) ** 2 + (ratio / scale) ** 2))


def weights_teno(is_vals: ArrayLike, cfg: SchemeConfig) -> WeightTriple:
    """
    TENO weights with a sharp cutoff.

    gamma_k = (C + tau5 / (IS_k + eps))^q, chi_k = gamma_k / sum(gamma),
    stencils with chi_k < C_T are dropped and the surviving ideal weights
    are renormalised. Each weight is therefore 0 or d_k / sum(surviving d).

    :raises ConfigurationError: If ``cfg`` has no cutoff.
    """
    if cfg.ct is None:
        raise ConfigurationError("TENO weights need a cutoff ct")
    indicators = _indicators(is_vals)
    d = np.asarray(cfg.d)
    base = cfg.c_teno + _tau5(indicators) / (indicators + cfg.epsilon)
    # scaled by the largest base so that gamma cannot overflow
    gamma = (base / base.max(axis=-1, keepdims=True)) ** cfg.q_teno
    chi = gamma / gamma.sum(axis=-1, keepdims=True)
    kept = d * (chi >= cfg.ct)
    return _normalise(kept)
