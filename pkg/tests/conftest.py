"""Shared builders for the nvdbound test suite."""

import numpy as np
import pytest

from schemes import SchemeConfig
from solver import Grid1D, Grid2D, SolverConfig


def scheme(name: str, **params) -> SchemeConfig:
    return SchemeConfig.from_name(name, **params)


ALL_SCHEMES = [
    ("upwind", {}),
    ("thinc", {"beta": 2.0}),
    ("thinc-clipped", {"beta": 2.0, "clip_slope": 2.5}),
    ("weno-js", {}),
    ("weno-z", {}),
    ("teno", {"ct": 1e-5}),
]


@pytest.fixture(params=ALL_SCHEMES, ids=[name for name, _ in ALL_SCHEMES])
def any_scheme(request) -> SchemeConfig:
    name, params = request.param
    return scheme(name, **params)


@pytest.fixture
def grid_1d() -> Grid1D:
    return Grid1D(200)


@pytest.fixture
def small_grid_2d() -> Grid2D:
    return Grid2D(24, 24)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240607)


def solver_config(name: str, cfl: float, **kwargs) -> SolverConfig:
    params = {k: kwargs.pop(k) for k in ("beta", "clip_slope", "ct") if k in kwargs}
    return SolverConfig(scheme(name, **params), cfl=cfl, **kwargs)
