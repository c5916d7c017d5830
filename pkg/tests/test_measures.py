import numpy as np
import numpy.testing as npt
import pytest
from hypothesis import given, settings, strategies as st

from pcmk import (PseudoCone, WeightFunction, QuadratureConfig, HEIGHT_POWER, RADIAL_POWER,
                  surface_measure, covolume_euler, covolume_radial, covolume_gradient, tighten)
from pcmk.system.errors import NotTightened, InvalidExponent
from pcmk.verify import random_tight_fixture

U2 = np.array([-1.0, -2.0]) / np.sqrt(5.0)
SQRT2 = np.sqrt(2.0)


class TestSurfaceMeasure:
    def test_single_facet(self, q2_single, q2_height, cfg2):
        S = surface_measure(q2_single, q2_height, cfg2)
        assert S[0] == pytest.approx(2.0, rel=1e-12)
        assert S.total == pytest.approx(2.0, rel=1e-12)

    def test_section_at_four(self, q2, q2_height, cfg2):
        pc = PseudoCone(q2, [-q2.v_frak], [4.0])
        assert surface_measure(pc, q2_height, cfg2)[0] == pytest.approx(1.0, rel=1e-12)

    def test_square(self, o3_square, o3_height, cfg3):
        assert surface_measure(o3_square, o3_height, cfg3)[0] == pytest.approx(4.0, rel=1e-10)

    def test_slack_direction_has_no_mass(self, q2, q2_height, cfg2):
        pc = PseudoCone(q2, [-q2.v_frak, U2], [1.0, 0.1])
        S = surface_measure(pc, q2_height, cfg2)
        assert S[1] == 0.0
        assert S[0] == pytest.approx(2.0, rel=1e-12)

    def test_threads_match_serial(self, q2, q2_radial, cfg2):
        pc = random_tight_fixture(q2, 8, seed=3)
        serial = surface_measure(pc, q2_radial, cfg2).masses
        threaded = surface_measure(pc, q2_radial, QuadratureConfig.for_dim(2, workers=4)).masses
        npt.assert_array_equal(serial, threaded)

    @pytest.mark.parametrize("t", [0.5, 2.0, 7.0])
    def test_homogeneous(self, q2, q2_radial, cfg2, t):
        pc = random_tight_fixture(q2, 6, seed=11)
        S = surface_measure(pc, q2_radial, cfg2).masses
        npt.assert_allclose(surface_measure(pc.scaled(t), q2_radial, cfg2).masses,
                            t ** (2 - 1 - 1.5) * S, rtol=1e-9)

    def test_rejects_q_outside_range(self, q2, q2_single, cfg2):
        with pytest.raises(InvalidExponent):
            surface_measure(q2_single, WeightFunction(HEIGHT_POWER, 2.5, q2), cfg2)


class TestCovolume:
    def test_euler_quadrant(self, q2_single, q2_height, cfg2):
        assert covolume_euler(tighten(q2_single), q2_height, cfg2).value == pytest.approx(4.0, rel=1e-12)

    def test_radial_quadrant(self, q2_single, q2_height, cfg2):
        assert covolume_radial(q2_single, q2_height, cfg2).value == pytest.approx(4.0, rel=1e-10)

    def test_pyramid_both_routes(self, o3_square, o3_height, cfg3):
        euler = covolume_euler(tighten(o3_square), o3_height, cfg3).value
        radial = covolume_radial(o3_square, o3_height, cfg3).value
        assert euler == pytest.approx(8.0, rel=1e-8)
        assert radial == pytest.approx(8.0, rel=1e-7)

    def test_needs_tightened(self, q2_single, q2_height, cfg2):
        with pytest.raises(NotTightened):
            covolume_euler(q2_single, q2_height, cfg2)

    def test_radial_power_disallows_zero(self, q2, q2_single, cfg2):
        with pytest.raises(InvalidExponent):
            covolume_radial(q2_single, WeightFunction(RADIAL_POWER, 0.0, q2), cfg2)

    @pytest.mark.parametrize("seed", range(4))
    def test_routes_agree_quadrant(self, q2, q2_radial, cfg2, seed):
        pc = random_tight_fixture(q2, 7, seed)
        euler = covolume_euler(pc, q2_radial, cfg2).value
        radial = covolume_radial(pc, q2_radial, cfg2).value
        assert radial == pytest.approx(euler, rel=1e-9)

    def test_routes_agree_with_narrow_middle_facet(self, q2, q2_radial, cfg2):
        c = 3.0 * SQRT2 * (1.0 - 1e-4) / (2.0 * np.sqrt(5.0))
        pc = tighten(PseudoCone(q2, [-q2.v_frak, U2, U2[::-1]], [1.0, c, c]))
        assert not pc.facets.facets[0].empty
        euler = covolume_euler(pc, q2_radial, cfg2).value
        radial = covolume_radial(pc, q2_radial, cfg2).value
        assert radial == pytest.approx(euler, rel=1e-9)

    @pytest.mark.parametrize("seed", range(2))
    def test_routes_agree_pyramid(self, o3, o3_radial, cfg3, seed):
        pc = random_tight_fixture(o3, 5, seed)
        euler = covolume_euler(pc, o3_radial, cfg3).value
        radial = covolume_radial(pc, o3_radial, cfg3).value
        assert radial == pytest.approx(euler, rel=1e-6)

    @given(st.floats(min_value=0.2, max_value=5.0))
    @settings(max_examples=20, deadline=None)
    def test_scaling(self, t):
        from pcmk import quadrant_cone
        q2 = quadrant_cone()
        w = WeightFunction(HEIGHT_POWER, 1.5, q2)
        pc = tighten(PseudoCone(q2, [-q2.v_frak, U2], [1.0, 0.7]))
        V = covolume_euler(pc, w).value
        assert covolume_euler(pc.scaled(t), w).value == pytest.approx(t ** 0.5 * V, rel=1e-9)


def test_gradient_is_surface_measure(q2_single, q2_height, cfg2):
    npt.assert_allclose(covolume_gradient(q2_single, q2_height, cfg2), [2.0], rtol=1e-12)
