"""
Scheme configuration for nvdbound.

This module defines the tagged scheme selector consumed by every
reconstruction, diagram and solver routine.

Classes:
    SchemeKind: Enumeration of the supported reconstructions.
    SchemeConfig: Immutable, validated parameter set for one scheme.

Example:
    >>> cfg = SchemeConfig.from_name("teno", ct=1e-5)
    >>> cfg.kind
    <SchemeKind.TENO5: 'teno'>
"""

import math
from dataclasses import asdict, dataclass, field, replace
from enum import Enum
from typing import Any, ClassVar, Optional

from schemes.constants import (
    DEFAULT_BETA,
    DEFAULT_C_TENO,
    DEFAULT_CLIP_SLOPE,
    DEFAULT_EPSILON,
    DEFAULT_Q_TENO,
    IDEAL_WEIGHTS,
    TENO_CT_LIMIT,
    WEIGHT_SUM_TOL,
)
from schemes.errors import ConfigurationError


class SchemeKind(str, Enum):
    """Supported face reconstructions, valued by their command-line names."""

    UPWIND1 = "upwind"
    THINC_ORIGINAL = "thinc"
    THINC_CLIPPED = "thinc-clipped"
    WENO_JS5 = "weno-js"
    WENO_Z5 = "weno-z"
    TENO5 = "teno"

    @property
    def is_thinc(self) -> bool:
        return self in (SchemeKind.THINC_ORIGINAL, SchemeKind.THINC_CLIPPED)

    @property
    def is_weno_family(self) -> bool:
        return self in (SchemeKind.WENO_JS5, SchemeKind.WENO_Z5, SchemeKind.TENO5)


@dataclass(frozen=True)
class SchemeConfig:
    """
    Validated parameter set selecting one reconstruction scheme.

    Only the parameters relevant to ``kind`` influence the reconstruction,
    but all of them are validated and recorded so that a run manifest
    lists the complete configuration.

    Attributes:
        kind: Which reconstruction to use.
        beta: THINC steepness, > 0.
        epsilon: Division guard of the WENO/TENO weights, > 0.
        c_teno: TENO constant C, > 0.
        q_teno: TENO exponent q, a positive integer.
        ct: TENO cutoff C_T in (0, 1/3); required for TENO, optional otherwise.
        d: Ideal weights, nonnegative and summing to one.
        clip_slope: Slope of the clipped THINC line, > 0.

    Raises:
        ConfigurationError: If any parameter violates its constraint.

    Example:
        >>> SchemeConfig(SchemeKind.THINC_CLIPPED, beta=2.0, clip_slope=2.5)
    """

    kind: SchemeKind
    beta: float = DEFAULT_BETA
    epsilon: float = DEFAULT_EPSILON
    c_teno: float = DEFAULT_C_TENO
    q_teno: int = DEFAULT_Q_TENO
    ct: Optional[float] = None
    d: tuple[float, float, float] = field(default=IDEAL_WEIGHTS)
    clip_slope: float = DEFAULT_CLIP_SLOPE

    NAMES: ClassVar[dict[str, SchemeKind]] = {kind.value: kind for kind in SchemeKind}
    """Command-line scheme names mapped to their kinds."""

    def __post_init__(self) -> None:
        try:
            kind = SchemeKind(self.kind)
        except ValueError as e:
            raise ConfigurationError(f"unknown scheme kind: {self.kind!r}") from e
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "d", tuple(float(v) for v in self.d))

        if not (math.isfinite(self.beta) and self.beta > 0):
            raise ConfigurationError(f"beta must be > 0, got {self.beta}")
        if not (math.isfinite(self.epsilon) and self.epsilon > 0):
            raise ConfigurationError(f"epsilon must be > 0, got {self.epsilon}")
        if not (math.isfinite(self.clip_slope) and self.clip_slope > 0):
            raise ConfigurationError(f"clip slope must be > 0, got {self.clip_slope}")
        if not (math.isfinite(self.c_teno) and self.c_teno > 0):
            raise ConfigurationError(f"TENO constant C must be > 0, got {self.c_teno}")
        if isinstance(self.q_teno, bool) or int(self.q_teno) != self.q_teno or self.q_teno < 1:
            raise ConfigurationError(f"TENO exponent q must be a positive integer, got {self.q_teno}")
        object.__setattr__(self, "q_teno", int(self.q_teno))

        if len(self.d) != 3:
            raise ConfigurationError(f"expected 3 ideal weights, got {len(self.d)}")
        if any(not math.isfinite(v) or v < 0 for v in self.d):
            raise ConfigurationError(f"ideal weights must be nonnegative, got {self.d}")
        if abs(math.fsum(self.d) - 1.0) > WEIGHT_SUM_TOL:
            raise ConfigurationError(f"ideal weights must sum to 1, got {self.d}")

        if self.ct is not None:
            if not (math.isfinite(self.ct) and 0 < self.ct < 1):
                raise ConfigurationError(f"TENO cutoff ct must lie in (0, 1), got {self.ct}")
            if self.ct >= TENO_CT_LIMIT:
                raise ConfigurationError(
                    f"TENO cutoff ct={self.ct} must be below 1/3, otherwise every stencil can be cut"
                )
        elif kind is SchemeKind.TENO5:
            raise ConfigurationError("TENO requires a cutoff ct (e.g. 1e-5)")

    @classmethod
    def from_name(cls, name: str, **params: Any) -> "SchemeConfig":
        """
        Build a configuration from a command-line scheme name.

        :param name: One of upwind, thinc, thinc-clipped, weno-js, weno-z, teno.
        :param params: Field overrides; ``None`` values keep the defaults.
        :return: The validated configuration.
        :raises ConfigurationError: If the name is unknown or a value is invalid.
        """
        kind = cls.NAMES.get(name)
        if kind is None:
            choices = ", ".join(cls.NAMES)
            raise ConfigurationError(f"unknown scheme {name!r} (choose from {choices})")
        overrides = {key: value for key, value in params.items() if value is not None}
        return cls(kind=kind, **overrides)

    @property
    def name(self) -> str:
        return self.kind.value

    def with_params(self, **params: Any) -> "SchemeConfig":
        """Return a copy with some fields replaced (validated again)."""
        return replace(self, **params)

    def as_dict(self) -> dict[str, Any]:
        """Full parameter set, defaults included, for manifests and reports."""
        data = asdict(self)
        data["kind"] = self.kind.value
        data["d"] = list(self.d)
        return data
