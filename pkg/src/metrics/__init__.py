"""
Metrics Package for nvdbound.

Modules:
    - bounds: BoundsReport, bounds_report and the run-wide BoundsTracker
    - error: l1_error
"""

from .bounds import BoundsReport, BoundsTracker, ViolatingCell, bounds_report
from .error import l1_error

__all__ = [
    "ViolatingCell",
    "BoundsReport",
    "BoundsTracker",
    "bounds_report",
    "l1_error",
]
