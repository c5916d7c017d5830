import numpy as np
import numpy.testing as npt
import pytest

from pcmk import PseudoCone, surface_measure, covolume_euler
from pcmk.verify import (mc_surface_measure, mc_covolume, covolume_tail_bound, sample_directions,
                         direction_set_area, random_tight_fixture)

U2 = np.array([-1.0, -2.0]) / np.sqrt(5.0)
N = 200_000


def test_samples_inside_cone(o3):
    v = sample_directions(o3, 5000, seed=1)
    assert v.shape == (5000, 3)
    assert np.all(v @ o3.facet_normals.T < 0.0)
    npt.assert_allclose(np.linalg.norm(v, axis=1), 1.0)


def test_samples_independent_of_workers(q2):
    npt.assert_array_equal(sample_directions(q2, 100_000, seed=5),
                           sample_directions(q2, 100_000, seed=5, workers=4))


def test_direction_set_area(o3):
    assert direction_set_area(o3) == pytest.approx(2.0 * np.pi / 3.0, rel=1e-7)


def test_single_facet_measure(q2_single, q2_height):
    (est,) = mc_surface_measure(q2_single, q2_height, N, seed=0)
    assert est.hits == N
    assert est.within(2.0)


def test_slack_direction_gets_no_hits(q2, q2_height):
    pc = PseudoCone(q2, [-q2.v_frak, U2], [1.0, 0.1])
    estimates = mc_surface_measure(pc, q2_height, 20_000, seed=0)
    assert estimates[1].hits == 0
    assert estimates[1].estimate == 0.0
    assert estimates[1].stderr == 0.0


def test_random_body_measure(q2, q2_radial, cfg2):
    pc = random_tight_fixture(q2, 6, seed=4)
    exact = surface_measure(pc, q2_radial, cfg2).masses
    for est, value in zip(mc_surface_measure(pc, q2_radial, N, seed=2), exact):
        assert est.within(value, sigmas=4.0)


def test_tail_bound_closed_form(q2_single, q2_height):
    # 2 * T^(-1/2) / (1/2) with rho(v_frak) = 1
    assert covolume_tail_bound(q2_single, q2_height, 16.0) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        covolume_tail_bound(q2_single, q2_height, 0.0)


class TestCovolume:
    def test_single_facet(self, q2_single, q2_height):
        est = mc_covolume(q2_single, q2_height, N, seed=0)
        assert est.tail_bound <= 1e-6
        assert abs(est.estimate - 4.0) <= 3.0 * est.stderr + est.tail_bound

    def test_scaling(self, q2_single, q2_height):
        a = mc_covolume(q2_single, q2_height, 50_000, seed=3)
        b = mc_covolume(q2_single.scaled(2.0), q2_height, 50_000, seed=3)
        assert b.estimate == pytest.approx(2.0 ** 0.5 * a.estimate, rel=1e-9)

    def test_pyramid(self, o3, o3_radial, cfg3):
        pc = random_tight_fixture(o3, 5, seed=0)
        exact = covolume_euler(pc, o3_radial, cfg3).value
        est = mc_covolume(pc, o3_radial, N, seed=9)
        assert abs(est.estimate - exact) <= 4.0 * est.stderr + est.tail_bound


@pytest.mark.slow
def test_coverage_over_seeds(q2_single, q2_height):
    inside = sum(mc_surface_measure(q2_single, q2_height, 1_000_000, seed=s)[0].within(2.0)
                 for s in range(100))
    assert inside >= 99


@pytest.mark.slow
def test_covolume_coverage_over_seeds(q2, q2_radial, cfg2):
    pc = random_tight_fixture(q2, 5, seed=11)
    exact = covolume_euler(pc, q2_radial, cfg2).value
    inside = 0
    for s in range(100):
        est = mc_covolume(pc, q2_radial, 1_000_000, seed=s)
        inside += abs(est.estimate - exact) <= 3.0 * est.stderr + est.tail_bound
    assert inside >= 99
