"""
Exception hierarchy for nvdbound.

Classes:
    NvdBoundError: Base class of every error raised by the package.
    ConfigurationError: Invalid scheme, solver, grid or command-line parameters.
    DomainError: Arguments outside the domain of a closed-form function.
    GridMismatchError: Fields defined on incompatible grids.
"""


class NvdBoundError(Exception):
    """
    Base exception for nvdbound.

    The command-line front end turns any subclass into a one-line
    diagnostic and exit code 2.
    """
    pass


class ConfigurationError(NvdBoundError, ValueError):
    """
    Raised when a parameter set is invalid.

    Covers scheme parameters (beta, epsilon, ideal weights, TENO cutoff),
    solver settings (cfl, end time, velocity) and grid definitions.

    Example:
        >>> try:
        ...     SchemeConfig.from_name("teno", ct=0.5)
        ... except ConfigurationError as e:
        ...     print(f"Invalid: {e}")
    """
    pass


class DomainError(NvdBoundError, ValueError):
    """
    Raised when a function is evaluated outside its domain.

    Example:
        >>> thinc_nvd(2.0, 1.5)
        Traceback (most recent call last):
        ...
        DomainError: phi_c must lie in [0, 1]
    """
    pass


class GridMismatchError(NvdBoundError, ValueError):
    """Raised when two fields that must share a grid do not."""
    pass
