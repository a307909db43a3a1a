import math

import numpy as np
import pytest

from conftest import scheme
from nvd import (
    Condition,
    NVDCurve,
    analytic_cmax_clipped_thinc,
    analytic_cmax_thinc,
    cbc_report,
    classify_violations,
    clip_slope_for_cfl,
    discontinuity_windows,
    sample_nvd,
    sample_positions,
    thinc_beta_for_cfl,
)
from schemes import ConfigurationError, thinc_nvd


# ========== Sampling ==========

def test_sample_positions():
    np.testing.assert_allclose(sample_positions(4), [0.2, 0.4, 0.6, 0.8])
    with pytest.raises(ConfigurationError):
        sample_positions(1)


def test_discontinuity_windows():
    windows = discontinuity_windows(np.array([0.3]))
    np.testing.assert_array_equal(windows, [[0.0, 0.0, 0.3, 1.0, 1.0]])


def test_upwind_diagram_is_the_diagonal():
    curve = sample_nvd(scheme("upwind"), 100)
    assert curve.n_samples == 100
    np.testing.assert_array_equal(curve.phi_f, curve.phi_c)


def test_thinc_diagram_matches_the_closed_form():
    curve = sample_nvd(scheme("thinc", beta=2.0), 100)
    np.testing.assert_allclose(curve.phi_f, thinc_nvd(2.0, curve.phi_c), atol=1e-13)
    nearest = int(np.argmin(np.abs(curve.phi_c - 0.5)))
    assert curve.phi_f[nearest] == pytest.approx(0.8808, abs=5e-3)


def test_curve_validation():
    cfg = scheme("upwind")
    with pytest.raises(ConfigurationError):
        NVDCurve(cfg, np.array([0.5, 0.4]), np.array([0.5, 0.4]))
    with pytest.raises(ConfigurationError):
        NVDCurve(cfg, np.array([0.0, 0.5]), np.array([0.0, 0.5]))
    with pytest.raises(ConfigurationError):
        NVDCurve(cfg, np.array([0.2, 0.5]), np.array([0.2]))


def test_samples_are_pairs():
    pairs = sample_nvd(scheme("upwind"), 3).samples
    assert pairs[1].phi_c == pytest.approx(0.5)
    assert pairs[1].phi_f == pytest.approx(0.5)


# ========== Criterion ==========

def test_upwind_is_admissible_up_to_unity():
    report = cbc_report(sample_nvd(scheme("upwind"), 100))
    assert report.c_max == 1.0
    assert not report.unconditional_violation
    assert classify_violations(report.curve, 1.0) == []


@pytest.mark.parametrize("n", [100, 1000, 4000])
@pytest.mark.parametrize("beta", [1.1, 2.0])
def test_sampled_thinc_cmax_matches_the_closed_form(beta, n):
    report = cbc_report(sample_nvd(scheme("thinc", beta=beta), n))
    exact = math.sinh(beta) / (beta * math.exp(beta))
    assert report.c_max == pytest.approx(exact, abs=2.0 / n)
    assert report.c_max >= exact
    assert report.binding_phi_c == pytest.approx(1.0 / (n + 1))


def test_thinc_cmax_decreases_with_beta():
    betas = [0.8, 1.1, 1.6, 2.0, 3.0]
    analytic = [analytic_cmax_thinc(beta) for beta in betas]
    sampled = [cbc_report(sample_nvd(scheme("thinc", beta=beta), 1000)).c_max for beta in betas]
    assert all(a > b for a, b in zip(analytic, analytic[1:]))
    assert all(a > b for a, b in zip(sampled, sampled[1:]))


def test_analytic_thinc_cmax():
    assert analytic_cmax_thinc(2.0) == pytest.approx(0.24542, abs=1e-5)
    assert analytic_cmax_thinc(1e-3) == pytest.approx(0.99900067, abs=1e-7)
    with pytest.raises(ConfigurationError):
        analytic_cmax_thinc(0.0)


def test_clipped_thinc_cmax():
    report = cbc_report(sample_nvd(scheme("thinc-clipped", beta=2.0, clip_slope=2.5), 4000))
    assert report.c_max == pytest.approx(0.4, abs=2e-3)
    assert analytic_cmax_clipped_thinc(2.0, 2.5) == pytest.approx(0.4)
    # a gentle clip line lies below the THINC bound and does not bind
    assert analytic_cmax_clipped_thinc(2.0, 8.0) == pytest.approx(analytic_cmax_thinc(2.0))
    assert analytic_cmax_clipped_thinc(2.0, 0.5) == 1.0


def test_thinc_free_parameters():
    assert thinc_beta_for_cfl(analytic_cmax_thinc(2.0)) == pytest.approx(2.0, abs=1e-10)
    assert thinc_beta_for_cfl(0.4) < thinc_beta_for_cfl(0.2)
    assert clip_slope_for_cfl(0.4) == pytest.approx(2.5)
    for bad in (0.0, 1.0, 1.5):
        with pytest.raises(ConfigurationError):
            thinc_beta_for_cfl(bad)
    with pytest.raises(ConfigurationError):
        clip_slope_for_cfl(0.0)


def test_weno_z_is_stricter_than_weno_js():
    js = cbc_report(sample_nvd(scheme("weno-js"), 4000))
    z = cbc_report(sample_nvd(scheme("weno-z"), 4000))
    assert js.c_max > z.c_max
    assert 0.35 <= z.c_max <= 0.55


def test_teno_with_a_small_cutoff_exceeds_unity():
    report = cbc_report(sample_nvd(scheme("teno", ct=1e-7), 100))
    assert report.unconditional_violation
    assert report.max_phi_f > 1.0
    unity = [v for v in classify_violations(report.curve, 0.1) if v.condition is Condition.UNITY]
    assert unity and all(v.lower > 0.5 for v in unity)


def test_teno_cutoff_sets_the_size_of_the_overshoot():
    moderate = cbc_report(sample_nvd(scheme("teno", ct=1e-5), 100))
    small = cbc_report(sample_nvd(scheme("teno", ct=1e-7), 100))
    # all three stencils survive near phi_c = 0.78 and the ideal weights give 0.7833 phi_c + 0.4
    assert moderate.max_phi_f == pytest.approx(1.0127, abs=1e-3)
    assert moderate.argmax_phi_c == pytest.approx(0.78, abs=0.02)
    assert small.max_phi_f > moderate.max_phi_f
    unity = [v for v in moderate.violations_at(0.1) if v.condition is Condition.UNITY]
    assert unity and all(v.lower > 0.5 for v in unity)


def test_violations_appear_exactly_above_cmax():
    report = cbc_report(sample_nvd(scheme("thinc", beta=2.0), 400))
    assert report.violations_at(report.c_max) == []
    slope = report.violations_at(0.3)
    assert len(slope) == 1
    assert slope[0].condition is Condition.SLOPE
    assert slope[0].lower == pytest.approx(1.0 / 401)
    assert slope[0].upper < 0.5


def test_classify_rejects_bad_cfl():
    curve = sample_nvd(scheme("upwind"), 10)
    with pytest.raises(ConfigurationError):
        classify_violations(curve, 0.0)
    with pytest.raises(ConfigurationError):
        classify_violations(curve, 1.5)
