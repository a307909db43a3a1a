import math

import numpy as np
import pytest

from schemes import ConfigurationError, DomainError, GridMismatchError, NvdBoundError, SchemeConfig, SchemeKind
from solver import Field1D, Grid1D, Grid2D, Integrator, RotationSpec, SolverConfig


def test_error_hierarchy():
    for error in (ConfigurationError, DomainError, GridMismatchError):
        assert issubclass(error, NvdBoundError)
        assert issubclass(error, ValueError)


@pytest.mark.parametrize("name", ["upwind", "thinc", "thinc-clipped", "weno-js", "weno-z"])
def test_from_name_round_trips_the_name(name):
    assert SchemeConfig.from_name(name).name == name


def test_from_name_ignores_none_overrides():
    cfg = SchemeConfig.from_name("thinc", beta=None, ct=None)
    assert cfg.beta == 2.0


def test_unknown_scheme_name():
    with pytest.raises(ConfigurationError, match="unknown scheme"):
        SchemeConfig.from_name("weno7")


def test_teno_requires_cutoff():
    with pytest.raises(ConfigurationError):
        SchemeConfig.from_name("teno")
    assert SchemeConfig.from_name("teno", ct=1e-5).kind is SchemeKind.TENO5


@pytest.mark.parametrize("ct", [1.0 / 3.0, 0.4, 0.0, -1e-5, 1.0])
def test_teno_cutoff_range(ct):
    with pytest.raises(ConfigurationError):
        SchemeConfig.from_name("teno", ct=ct)


@pytest.mark.parametrize(
    "params",
    [
        {"beta": 0.0},
        {"beta": -1.0},
        {"beta": math.inf},
        {"epsilon": 0.0},
        {"clip_slope": 0.0},
        {"c_teno": 0.0},
        {"q_teno": 0},
        {"q_teno": 2.5},
        {"d": (0.2, 0.6, 0.3)},
        {"d": (0.5, 0.5)},
        {"d": (-0.1, 0.8, 0.3)},
    ],
)
def test_invalid_parameters(params):
    with pytest.raises(ConfigurationError):
        SchemeConfig(SchemeKind.WENO_JS5, **params)


def test_with_params_validates_again():
    cfg = SchemeConfig.from_name("thinc", beta=1.1)
    assert cfg.with_params(beta=3.0).beta == 3.0
    with pytest.raises(ConfigurationError):
        cfg.with_params(beta=-3.0)


def test_as_dict_lists_every_default():
    data = SchemeConfig.from_name("weno-z").as_dict()
    assert data["kind"] == "weno-z"
    assert data["epsilon"] == 1e-16
    assert data["d"] == [0.1, 0.6, 0.3]
    assert data["c_teno"] == 1.0
    assert data["q_teno"] == 6
    assert data["ct"] is None


def test_kind_predicates():
    assert SchemeKind.THINC_CLIPPED.is_thinc
    assert not SchemeKind.UPWIND1.is_thinc
    assert SchemeKind.TENO5.is_weno_family
    assert not SchemeKind.THINC_ORIGINAL.is_weno_family


# ========== Solver Configuration ==========

@pytest.mark.parametrize("cfl", [0.0, -0.1, 1.0000001, math.nan])
def test_solver_cfl_range(cfl):
    with pytest.raises(ConfigurationError):
        SolverConfig(SchemeConfig.from_name("upwind"), cfl=cfl)


def test_solver_accepts_unit_cfl():
    assert SolverConfig(SchemeConfig.from_name("upwind"), cfl=1.0).cfl == 1.0


def test_solver_end_time_and_velocity():
    upwind = SchemeConfig.from_name("upwind")
    with pytest.raises(ConfigurationError):
        SolverConfig(upwind, cfl=0.5, end_time=0.0)
    with pytest.raises(ConfigurationError):
        SolverConfig(upwind, cfl=0.5, velocity=0.0)


def test_integrator_from_string():
    upwind = SchemeConfig.from_name("upwind")
    assert SolverConfig(upwind, cfl=0.5, integrator="ssp-rk3").integrator is Integrator.SSP_RK3
    with pytest.raises(ConfigurationError):
        SolverConfig(upwind, cfl=0.5, integrator="rk4")


def test_zalesak_config_runs_whole_revolutions():
    cfg = SolverConfig.for_zalesak(SchemeConfig.from_name("upwind"), cfl=0.4, revolutions=2.0)
    assert cfg.end_time == pytest.approx(2.0)
    assert RotationSpec(omega=math.pi).period == pytest.approx(2.0)
    with pytest.raises(ConfigurationError):
        SolverConfig.for_zalesak(SchemeConfig.from_name("upwind"), cfl=0.4, revolutions=0.0)


def test_rotation_spec_validation():
    with pytest.raises(ConfigurationError):
        RotationSpec(omega=0.0)
    with pytest.raises(ConfigurationError):
        RotationSpec(center=(0.5,))


def test_solver_as_dict_nests_the_scheme():
    cfg = SolverConfig(SchemeConfig.from_name("thinc", beta=1.1), cfl=0.4)
    data = cfg.as_dict()
    assert data["scheme"]["beta"] == 1.1
    assert data["integrator"] == "euler"
    assert data["rotation"]["center"] == [0.5, 0.5]


# ========== Grids ==========

def test_grid_1d_spacing():
    grid = Grid1D(200)
    assert grid.h * grid.n_cells == pytest.approx(grid.x_max - grid.x_min, rel=1e-12)
    assert grid.edges[0] == -1.0 and grid.edges[-1] == 1.0
    assert grid.centers.shape == (200,)


@pytest.mark.parametrize("args", [(0,), (-5,), (2.5,), (10, 1.0, 1.0), (10, 1.0, -1.0)])
def test_grid_1d_validation(args):
    with pytest.raises(ConfigurationError):
        Grid1D(*args)


def test_grid_2d_validation():
    with pytest.raises(ConfigurationError):
        Grid2D(0, 10)
    grid = Grid2D(10, 20)
    assert grid.shape == (10, 20)
    assert grid.dy == pytest.approx(0.05)


def test_field_checks_length_and_finiteness():
    grid = Grid1D(4)
    with pytest.raises(ConfigurationError):
        Field1D(grid, np.zeros(5))
    with pytest.raises(ConfigurationError):
        Field1D(grid, [0.0, np.nan, 0.0, 0.0])
