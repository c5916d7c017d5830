import numpy as np
import pytest

from pcmk.verify import LogFamily, radial_derivative_check, random_tight_fixture


@pytest.fixture(scope="module")
def body(q2):
    return random_tight_fixture(q2, 6, seed=8)


def test_log_family_matches_closed_form(body):
    f = np.random.default_rng(0).standard_normal(len(body))
    report = radial_derivative_check(LogFamily(body, f), 500, seed=1)
    assert report.passed
    assert report.max_error <= 1e-5
    assert np.isfinite(report.lipschitz)


def test_linear_family_order(body):
    f = np.random.default_rng(1).standard_normal(len(body))
    family = LogFamily(body, f, linear=True)
    assert family.delta > 0
    report = radial_derivative_check(family, 500, seed=2)
    assert report.passed
    assert report.order == pytest.approx(2.0, abs=0.3)


def test_explicit_directions(q2_single, q2):
    family = LogFamily(q2_single, [0.5])
    report = radial_derivative_check(family, np.array([q2.v_frak, [0.6, 0.8]]))
    assert report.samples == 2
    assert report.resampled == 0
    assert report.max_error <= 1e-8


def test_pyramid(o3):
    body = random_tight_fixture(o3, 5, seed=2)
    f = np.random.default_rng(3).standard_normal(len(body))
    assert radial_derivative_check(LogFamily(body, f), 300, seed=4).passed


def test_perturbation_length_checked(q2_single):
    with pytest.raises(ValueError):
        LogFamily(q2_single, [1.0, 2.0])
