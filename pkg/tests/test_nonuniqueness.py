import numpy as np
import pytest

from pcmk import WeightFunction, HEIGHT_POWER, RADIAL_POWER, surface_measure
from pcmk.verify import nonuniqueness_pair


def test_quadrant_height_power(q2, q2_height, cfg2):
    K, L, report = nonuniqueness_pair(q2, q2_height, cfg2)
    assert report.t0 == pytest.approx(4.0, rel=1e-12)
    assert report.shrink == pytest.approx(1.0 / np.sqrt(2.0), rel=1e-10)
    assert report.passed
    assert report.hausdorff > 0.01
    assert K.support_numbers[0] == pytest.approx(4.0)
    assert surface_measure(K, q2_height, cfg2)[0] == pytest.approx(1.0, rel=1e-10)


def test_translated_body_halfspaces(q2, q2_height, cfg2):
    _, L, report = nonuniqueness_pair(q2, q2_height, cfg2)
    A, b = L.halfspaces()
    for point in L.base:
        assert np.all(A @ point <= b + 1e-9)
    assert L.apex @ q2.v_frak == pytest.approx((1.0 - report.shrink) * report.t1)


def test_quadrant_radial_power(q2, q2_radial, cfg2):
    assert nonuniqueness_pair(q2, q2_radial, cfg2)[2].passed


@pytest.mark.parametrize("kind", [HEIGHT_POWER, RADIAL_POWER])
def test_pyramid(o3, cfg3, kind):
    w = WeightFunction(kind, 2.5, o3)
    K, L, report = nonuniqueness_pair(o3, w, cfg3)
    assert report.passed
    assert report.hausdorff > 0.01
    if kind == HEIGHT_POWER:
        # theta(1) = 4, so t0 = 4^(1/(2.5-2))
        assert report.t0 == pytest.approx(16.0, rel=1e-8)


def test_distance_threshold(q2, q2_height, cfg2):
    _, _, report = nonuniqueness_pair(q2, q2_height, cfg2, min_distance=1e6)
    assert not report.passed
