"""
Schemes Package for nvdbound.

This package provides the face reconstruction kernels whose boundedness
the rest of the toolkit analyses.

Modules:
    - constants: Default parameters and array type aliases
    - errors: Exception hierarchy shared by all packages
    - config: SchemeKind and SchemeConfig
    - kernels: Normalisation, THINC profiles, candidates, indicators, weights
    - reconstruct: Dispatch from a configuration to face values

Example:
    >>> from schemes import SchemeConfig, reconstruct_face
    >>> cfg = SchemeConfig.from_name("thinc", beta=2.0)
    >>> reconstruct_face(cfg, [0, 0, 0.5, 1, 1])
    0.8807970779778823
"""

from .config import SchemeConfig, SchemeKind
from .errors import ConfigurationError, DomainError, GridMismatchError, NvdBoundError
from .kernels import (
    candidate_reconstructions,
    clipped_thinc_nvd,
    normalise_window,
    normalised_values,
    smoothness_indicators,
    thinc_nvd,
    weights_js,
    weights_teno,
    weights_z,
)
from .reconstruct import reconstruct_face, reconstruct_faces

__all__ = [
    # Configuration
    "SchemeConfig",
    "SchemeKind",

    # Errors
    "NvdBoundError",
    "ConfigurationError",
    "DomainError",
    "GridMismatchError",

    # Kernels
    "normalise_window",
    "normalised_values",
    "thinc_nvd",
    "clipped_thinc_nvd",
    "smoothness_indicators",
    "candidate_reconstructions",
    "weights_js",
    "weights_z",
    "weights_teno",

    # Reconstruction
    "reconstruct_face",
    "reconstruct_faces",
]
