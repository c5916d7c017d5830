import numpy as np
import pytest

from pcmk import PseudoCone, tighten
from pcmk.verify import continuity_check, covolume_gradient_check, random_tight_fixture
from pcmk.verify.continuity import ContinuityReport

U2 = np.array([-1.0, -2.0]) / np.sqrt(5.0)


@pytest.fixture
def three(q2):
    return tighten(PseudoCone(q2, [-q2.v_frak, U2, U2[::-1]], [1.0, 0.7, 0.7]))


def test_sequences_shrink(three, q2_radial, cfg2):
    report = continuity_check(three, q2_radial, delta=[0.05, -0.05, 0.03], cfg=cfg2)
    assert report.passed
    assert len(report.epsilons) == 20
    assert report.wulff[-1] < 1e-6
    assert report.epsilons[0] == 0.25
    assert report.wulff[-1] < report.wulff[0]
    assert report.measure[-1] < report.measure[0]


def test_pyramid(o3, o3_height, cfg3):
    pc = random_tight_fixture(o3, 5, seed=1)
    delta = 0.02 * pc.support_numbers
    report = continuity_check(pc, o3_height, delta=delta, cfg=cfg3)
    assert report.passed
    assert max(report.wulff[-1], report.restriction[-1], report.measure[-1]) < 1e-6


def test_monotone_helper():
    assert ContinuityReport._monotone([3.0, 2.0, 2.0, 1e-13, 2e-13], 1e-12)
    assert not ContinuityReport._monotone([1.0, 2.0], 1e-12)


class TestGradient:
    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_quadrant(self, q2, q2_radial, cfg2, seed):
        report = covolume_gradient_check(random_tight_fixture(q2, 6, seed), q2_radial, cfg=cfg2)
        assert report.passed
        assert np.max(report.relative_errors) <= 1e-4

    def test_pyramid_square(self, o3_square, o3_height, cfg3):
        report = covolume_gradient_check(o3_square, o3_height, step=1e-3, rtol=1e-3, cfg=cfg3)
        assert report.passed
        assert report.gradient[0] == pytest.approx(4.0, rel=1e-8)
