"""
Normalised variable diagrams across a perfect isolated discontinuity.

Classes:
    NormalisedPair: One (phi_c, phi_f) point of a diagram.
    NVDCurve: The sampled diagram of one scheme.

Functions:
    sample_nvd: Sample a scheme's diagram at n interior points.
"""

import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from schemes.config import SchemeConfig
from schemes.constants import FloatArray
from schemes.errors import ConfigurationError
from schemes.reconstruct import reconstruct_faces

logger = logging.getLogger(__name__)


class NormalisedPair(NamedTuple):
    """Normalised cell value phi_c and the reconstructed face value phi_f."""

    phi_c: float
    phi_f: float


@dataclass(frozen=True, eq=False)
class NVDCurve:
    """
    Sampled normalised variable diagram of one scheme.

    Attributes:
        scheme: Configuration the curve was sampled for.
        phi_c: Strictly increasing sample positions in (0, 1).
        phi_f: Face values at the sample positions.
    """

    scheme: SchemeConfig
    phi_c: FloatArray
    phi_f: FloatArray

    def __post_init__(self) -> None:
        if self.phi_c.shape != self.phi_f.shape or self.phi_c.ndim != 1:
            raise ConfigurationError("phi_c and phi_f must be 1D arrays of equal length")
        if self.phi_c.size and (np.any(np.diff(self.phi_c) <= 0)
                                or self.phi_c[0] <= 0 or self.phi_c[-1] >= 1):
            raise ConfigurationError("phi_c samples must increase strictly inside (0, 1)")
        if not (np.all(np.isfinite(self.phi_c)) and np.all(np.isfinite(self.phi_f))):
            raise ConfigurationError("diagram samples must be finite")

    @property
    def n_samples(self) -> int:
        return int(self.phi_c.size)

    @property
    def samples(self) -> list[NormalisedPair]:
        return [NormalisedPair(float(c), float(f)) for c, f in zip(self.phi_c, self.phi_f)]


def sample_positions(n: int) -> FloatArray:
    """Interior sample positions k/(n+1), k = 1..n."""
    if n < 2:
        raise ConfigurationError(f"a diagram needs at least 2 samples, got {n}")
    return np.arange(1, n + 1, dtype=np.float64) / (n + 1)


def discontinuity_windows(phi_c: FloatArray) -> FloatArray:
    """Windows (0, 0, phi_c, 1, 1) of a perfect isolated discontinuity."""
    windows = np.zeros(phi_c.shape + (5,))
    windows[..., 2] = phi_c
    windows[..., 3:] = 1.0
    return windows


def sample_nvd(cfg: SchemeConfig, n: int) -> NVDCurve:
    """
    Sample the diagram of a scheme.

    Each window (0, 0, phi_c, 1, 1) is already normalised, so the
    reconstructed face value is the normalised face value.

    :param cfg: Scheme configuration.
    :param n: Number of samples, >= 2.
    :return: The sampled curve.
    :raises ConfigurationError: If n < 2.

    Example:
        >>> curve = sample_nvd(SchemeConfig.from_name("upwind"), 100)
        >>> bool(np.all(curve.phi_f == curve.phi_c))
        True
    """
    phi_c = sample_positions(n)
    phi_f = reconstruct_faces(cfg, discontinuity_windows(phi_c))
    logger.debug("sampled %s diagram at %d points", cfg.name, n)
    return NVDCurve(scheme=cfg, phi_c=phi_c, phi_f=phi_f)
