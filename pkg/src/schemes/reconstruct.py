"""
Face reconstruction dispatch for nvdbound.

Maps a scheme configuration and left-biased five-cell windows
(phi_{i-2}, ..., phi_{i+2}) to face values at i+1/2. Negative velocities
are handled by the callers, which mirror the window before calling in.

Functions:
    reconstruct_faces: Vectorised reconstruction over windows of shape (..., 5).
    reconstruct_face: Single-window convenience wrapper.
"""

from typing import Callable

import numpy as np
from numpy.typing import ArrayLike

from schemes.config import SchemeConfig, SchemeKind
from schemes.constants import DEGENERATE_TOL, FloatArray, StencilWindow
from schemes.kernels import (
    as_windows,
    candidate_reconstructions,
    normalised_values,
    smoothness_indicators,
    thinc_profile,
    weights_js,
    weights_teno,
    weights_z,
)

WeightFunction = Callable[[FloatArray, SchemeConfig], FloatArray]

WEIGHT_FUNCTIONS: dict[SchemeKind, WeightFunction] = {
    SchemeKind.WENO_JS5: weights_js,
    SchemeKind.WENO_Z5: weights_z,
    SchemeKind.TENO5: weights_teno,
}
"""Nonlinear weight rule of each WENO-family scheme."""


def _upwind(cfg: SchemeConfig, w: StencilWindow) -> FloatArray:
    return w[..., 2].copy()


def _weighted(cfg: SchemeConfig, w: StencilWindow) -> FloatArray:
    weights = WEIGHT_FUNCTIONS[cfg.kind](smoothness_indicators(w), cfg)
    return np.sum(weights * candidate_reconstructions(w), axis=-1)


def _thinc(cfg: SchemeConfig, w: StencilWindow) -> FloatArray:
    v1, v2, v3 = w[..., 1], w[..., 2], w[..., 3]
    phi = normalised_values(w, DEGENERATE_TOL, relative=True)
    # NaN (degenerate) compares False, so it falls back to upwind too
    with np.errstate(invalid="ignore"):
        monotone = (phi > 0.0) & (phi < 1.0)
    phi = np.where(monotone, phi, 0.5)

    face_nvd = thinc_profile(cfg.beta, phi)
    if cfg.kind is SchemeKind.THINC_CLIPPED:
        face_nvd = np.minimum(face_nvd, cfg.clip_slope * phi)
    return np.where(monotone, v1 + (v3 - v1) * face_nvd, v2)


RECONSTRUCTORS: dict[SchemeKind, Callable[[SchemeConfig, StencilWindow], FloatArray]] = {
    SchemeKind.UPWIND1: _upwind,
    SchemeKind.THINC_ORIGINAL: _thinc,
    SchemeKind.THINC_CLIPPED: _thinc,
    SchemeKind.WENO_JS5: _weighted,
    SchemeKind.WENO_Z5: _weighted,
    SchemeKind.TENO5: _weighted,
}
"""Reconstruction routine of each scheme kind."""


def reconstruct_faces(cfg: SchemeConfig, w: ArrayLike) -> FloatArray:
    """
    Reconstruct face values at i+1/2 for many windows at once.

    THINC schemes normalise with (phi_{i-1}, phi_i, phi_{i+1}) and fall back
    to first-order upwind when the window is not strictly monotone or the
    jump is degenerate. The WENO family combines the three candidates with
    its nonlinear weights.

    :param cfg: Scheme configuration.
    :param w: Windows of shape (..., 5), ordered along the flow.
    :return: Face values of shape (...).
    :raises DomainError: If a window is malformed or not finite.
    """
    return RECONSTRUCTORS[cfg.kind](cfg, as_windows(w))


def reconstruct_face(cfg: SchemeConfig, w: ArrayLike) -> float:
    """
    Reconstruct the face value at i+1/2 of a single window.

    Example:
        >>> reconstruct_face(SchemeConfig(SchemeKind.WENO_JS5), [1, 2, 3, 4, 5])
        3.5
    """
    return float(reconstruct_faces(cfg, np.asarray(w, dtype=np.float64).reshape(5)))
