import numpy as np
import pytest

from conftest import scheme, solver_config
from metrics import BoundsReport, BoundsTracker, l1_error
from schemes import GridMismatchError
from solver import (
    Field1D,
    Grid1D,
    Integrator,
    SolverConfig,
    exact_advection_1d,
    init_square_wave,
    local_phi_tilde_1d,
    run_advection_1d,
    stencil_windows,
    step_1d,
    step_schedule,
    time_step_1d,
)


# ========== Initial and Exact Data ==========

def test_square_wave_values(grid_1d):
    field = init_square_wave(grid_1d)
    centers = grid_1d.centers
    assert field.values[np.argmin(np.abs(centers))] == 1.0
    assert field.values[np.argmin(np.abs(centers - 0.9))] == 0.0
    assert field.mass() == pytest.approx(0.8, abs=1e-12)
    assert field.values.min() >= 0.0 and field.values.max() == 1.0


def test_square_wave_partial_cells():
    grid = Grid1D(8)
    field = init_square_wave(grid)
    # cells of width 0.25; [-0.4, 0.4] covers 0.15 of each edge cell
    np.testing.assert_allclose(field.values, [0, 0, 0.6, 1, 1, 0.6, 0, 0], atol=1e-12)
    assert field.mass() == pytest.approx(0.8, abs=1e-12)


def test_exact_solution(grid_1d):
    initial = init_square_wave(grid_1d)
    np.testing.assert_array_equal(exact_advection_1d(grid_1d, 1.0, 0.0).values, initial.values)
    np.testing.assert_allclose(exact_advection_1d(grid_1d, 1.0, 2.0).values, initial.values, atol=1e-12)

    moved = exact_advection_1d(grid_1d, 1.0, 0.1)
    assert moved.mass() == pytest.approx(0.8, abs=1e-12)
    support = grid_1d.centers[moved.values > 0.5]
    assert support.min() == pytest.approx(-0.295)
    assert support.max() == pytest.approx(0.495)


def test_exact_solution_wraps_around_the_domain(grid_1d):
    wrapped = exact_advection_1d(grid_1d, -1.0, 1.0)
    assert wrapped.mass() == pytest.approx(0.8, abs=1e-12)
    assert wrapped.values[0] == pytest.approx(1.0)
    assert wrapped.values[-1] == pytest.approx(1.0)
    assert wrapped.values[100] == pytest.approx(0.0)


# ========== Time Stepping ==========

def test_step_schedule():
    assert step_schedule(0.1, 0.01) == [0.01] * 10
    steps = step_schedule(0.1, 0.03)
    assert len(steps) == 4
    assert steps[-1] == pytest.approx(0.01)
    assert sum(steps) == pytest.approx(0.1, abs=1e-15)
    assert step_schedule(0.01, 0.03) == [0.01]
    assert len(step_schedule(0.1, 0.004)) == 25


def test_time_step(grid_1d):
    cfg = solver_config("upwind", 0.4, velocity=-2.0)
    assert time_step_1d(cfg, grid_1d) == pytest.approx(0.002)


def test_stencil_windows_orientation():
    values = np.arange(6, dtype=float)
    np.testing.assert_array_equal(stencil_windows(values, True)[2], [0, 1, 2, 3, 4])
    np.testing.assert_array_equal(stencil_windows(values, False)[2], [4, 3, 2, 1, 0])
    np.testing.assert_array_equal(stencil_windows(values, True)[0], [4, 5, 0, 1, 2])


def test_constant_field_is_a_fixed_point(any_scheme, grid_1d):
    field = Field1D(grid_1d, np.full(grid_1d.n_cells, 0.3))
    for velocity in (1.0, -1.0):
        cfg = SolverConfig(any_scheme, cfl=0.7, velocity=velocity)
        np.testing.assert_array_equal(step_1d(field, cfg).values, field.values)


@pytest.mark.parametrize("integrator", list(Integrator))
def test_mass_is_conserved_each_step(any_scheme, grid_1d, rng, integrator):
    field = Field1D(grid_1d, rng.uniform(size=grid_1d.n_cells))
    cfg = SolverConfig(any_scheme, cfl=0.5, integrator=integrator)
    for _ in range(5):
        updated = step_1d(field, cfg)
        assert abs(updated.values.sum() - field.values.sum()) <= 1e-12 * grid_1d.n_cells
        field = updated


def test_step_advances_the_time(grid_1d):
    cfg = solver_config("upwind", 0.5)
    field = step_1d(init_square_wave(grid_1d), cfg)
    assert field.time == pytest.approx(0.005)


def test_upwind_at_unit_cfl_shifts_one_cell(grid_1d, rng):
    field = Field1D(grid_1d, rng.uniform(size=grid_1d.n_cells))
    shifted = step_1d(field, solver_config("upwind", 1.0))
    np.testing.assert_allclose(shifted.values, np.roll(field.values, 1), atol=1e-15)
    back = step_1d(field, solver_config("upwind", 1.0, velocity=-1.0))
    np.testing.assert_allclose(back.values, np.roll(field.values, -1), atol=1e-15)


def test_upwind_translation_matches_the_exact_solution(grid_1d):
    cfg = solver_config("upwind", 1.0, end_time=0.1)
    final = run_advection_1d(cfg, grid_1d)
    exact = exact_advection_1d(grid_1d, 1.0, 0.1)
    np.testing.assert_allclose(final.values, exact.values, atol=1e-12)
    assert l1_error(final, exact) == pytest.approx(0.0, abs=1e-12)
    assert final.time == pytest.approx(0.1)


@pytest.mark.parametrize("cfl", [0.3, 0.7, 1.0])
def test_upwind_stays_within_the_initial_bounds(grid_1d, cfl):
    final = run_advection_1d(solver_config("upwind", cfl, end_time=0.37), grid_1d)
    assert final.values.min() >= -1e-15
    assert final.values.max() <= 1.0 + 1e-15


def test_mirror_symmetry(any_scheme, grid_1d, rng):
    values = rng.uniform(size=grid_1d.n_cells)
    forward = run_advection_1d(
        SolverConfig(any_scheme, cfl=0.4, end_time=0.05, velocity=1.0), grid_1d, Field1D(grid_1d, values)
    )
    backward = run_advection_1d(
        SolverConfig(any_scheme, cfl=0.4, end_time=0.05, velocity=-1.0), grid_1d, Field1D(grid_1d, values[::-1])
    )
    np.testing.assert_allclose(backward.values, forward.values[::-1], atol=1e-13)


def test_ssp_rk3_runs_and_conserves(grid_1d):
    cfg = solver_config("weno-z", 0.4, integrator=Integrator.SSP_RK3)
    final = run_advection_1d(cfg, grid_1d)
    assert final.mass() == pytest.approx(0.8, abs=1e-12)


def test_callback_sees_every_step(grid_1d):
    seen = []
    cfg = solver_config("thinc", 0.3, end_time=0.1)
    run_advection_1d(cfg, grid_1d, callback=lambda step, before, after: seen.append((step, before.sum(), after.sum())))
    assert [step for step, _, _ in seen] == list(range(1, 35))
    for _, before, after in seen:
        assert after == pytest.approx(before, abs=1e-12)


def test_run_continues_from_the_field_time(grid_1d):
    halfway = run_advection_1d(solver_config("upwind", 1.0, end_time=0.05), grid_1d)
    steps = []
    final = run_advection_1d(
        solver_config("upwind", 1.0, end_time=0.1), grid_1d, halfway,
        callback=lambda step, before, after: steps.append(step),
    )
    assert halfway.time == pytest.approx(0.05)
    assert final.time == pytest.approx(0.1)
    assert steps == [1, 2, 3, 4, 5]
    np.testing.assert_allclose(final.values, exact_advection_1d(grid_1d, 1.0, 0.1).values, atol=1e-12)


def test_field_past_the_end_time_is_returned_unchanged(grid_1d):
    late = Field1D(grid_1d, init_square_wave(grid_1d).values, time=0.2)
    assert run_advection_1d(solver_config("upwind", 0.5, end_time=0.1), grid_1d, late) is late


def test_initial_field_must_match_the_grid(grid_1d):
    cfg = solver_config("upwind", 0.5)
    with pytest.raises(GridMismatchError):
        run_advection_1d(cfg, grid_1d, init_square_wave(Grid1D(100)))


def test_local_phi_tilde_follows_the_flow():
    values = np.array([0.0, 0.0, 0.25, 1.0, 1.0, 1.0])
    assert local_phi_tilde_1d(values, 1.0)[2] == pytest.approx(0.25)
    assert local_phi_tilde_1d(values, -1.0)[2] == pytest.approx(0.75)
    assert np.isnan(local_phi_tilde_1d(values, 1.0)[4])


# ========== Boundedness Brackets ==========

def _excursion(values: np.ndarray) -> float:
    return max(values.max() - 1.0, -values.min(), 0.0)


@pytest.mark.parametrize(
    "name, params, bounded_cfl, unbounded_cfl",
    [
        ("thinc", {"beta": 1.1}, 0.4, 0.5),
        ("thinc", {"beta": 2.0}, 0.2, 0.3),
    ],
)
def test_thinc_square_wave_brackets(grid_1d, name, params, bounded_cfl, unbounded_cfl):
    bounded = run_advection_1d(solver_config(name, bounded_cfl, **params), grid_1d)
    unbounded = run_advection_1d(solver_config(name, unbounded_cfl, **params), grid_1d)
    assert _excursion(bounded.values) < 1e-10
    assert _excursion(unbounded.values) > 1e-6


def test_clipping_restores_boundedness_at_cfl_0_4(grid_1d):
    clipped = run_advection_1d(solver_config("thinc-clipped", 0.4, beta=2.0, clip_slope=2.5), grid_1d)
    original = run_advection_1d(solver_config("thinc", 0.4, beta=2.0), grid_1d)
    assert _excursion(clipped.values) < 1e-10
    assert _excursion(original.values) > 1e-6


@pytest.mark.parametrize("cells", [100, 200, 400])
def test_classification_does_not_depend_on_resolution(cells):
    grid = Grid1D(cells)
    assert _excursion(run_advection_1d(solver_config("thinc", 0.4, beta=1.1), grid).values) < 1e-10
    assert _excursion(run_advection_1d(solver_config("thinc", 0.5, beta=1.1), grid).values) > 1e-6


def _run_history(grid: Grid1D, cfg: SolverConfig) -> BoundsReport:
    tracker = BoundsTracker(0.0, 1.0, lambda v: local_phi_tilde_1d(v, 1.0))
    run_advection_1d(cfg, grid, callback=tracker)
    return tracker.history_report()


def _peak(history: BoundsReport) -> float:
    return max(history.max_overshoot, history.max_undershoot)


# run-wide excursions below 1e-7 count as bounded, above 1e-3 as unbounded
@pytest.mark.parametrize(
    "name, params, cfl, bounded",
    [
        ("weno-z", {}, 0.4, True),
        ("weno-z", {}, 0.5, True),
        ("weno-z", {}, 0.6, False),
        ("teno", {"ct": 1e-5}, 0.5, True),
        ("teno", {"ct": 1e-7}, 0.4, False),
        ("teno", {"ct": 1e-7}, 0.1, False),
    ],
)
def test_weno_family_square_wave_brackets(grid_1d, name, params, cfl, bounded):
    peak = _peak(_run_history(grid_1d, solver_config(name, cfl, **params)))
    if bounded:
        assert peak < 1e-7
    else:
        assert peak > 1e-3


def test_small_teno_cutoff_violations_move_up_as_cfl_drops(grid_1d):
    def halves(cfl: float) -> tuple[int, int]:
        history = _run_history(grid_1d, solver_config("teno", cfl, ct=1e-7))
        phi = [cell.phi_c for cell in history.violating_cells if cell.phi_c is not None]
        return sum(0.0 < p < 0.5 for p in phi), sum(0.5 < p < 1.0 for p in phi)

    lower_fast, upper_fast = halves(0.4)
    lower_slow, upper_slow = halves(0.1)
    assert lower_slow < lower_fast
    assert upper_slow > upper_fast
