"""
nvdbound - Convection boundedness diagnostics for reconstruction schemes.

A numerical toolkit that samples normalised variable diagrams (NVD) of
finite-volume face reconstructions across an isolated discontinuity,
derives the largest CFL number for which one explicit Euler step stays
bounded, and checks the prediction with 1D and 2D advection runs.

Packages:
    - schemes: Reconstruction kernels (upwind, THINC, clipped THINC,
      WENO-JS, WENO-Z, TENO) and their configuration
    - nvd: Diagram sampling, boundedness criterion and one-step oracle
    - solver: Periodic 1D square wave and 2D Zalesak advection
    - metrics: Boundedness reports and L1 errors
    - cli: Command-line front end writing CSV, plot scripts and manifests

Example:
    >>> from main import main
    >>> main(["cmax", "--scheme", "thinc", "--beta", "2.0"])
"""

__version__ = "0.1.0"
__author__ = "nvdbound developers"
