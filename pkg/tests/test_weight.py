import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pcmk import WeightFunction, QuadratureConfig, HEIGHT_POWER, RADIAL_POWER
from pcmk.weight import theta_eval
from pcmk.system.errors import OutsideCone, OriginArgument, InvalidExponent


def test_height_power_at_v_frak(q2_height, q2):
    assert theta_eval(q2_height, q2.v_frak) == pytest.approx(1.0)


@pytest.mark.parametrize("q", [0.0, 1.5, 2.5, 7.0])
def test_radial_power_on_unit_sphere(q2, q):
    w = WeightFunction(RADIAL_POWER, q, q2)
    assert theta_eval(w, [0.6, 0.8]) == pytest.approx(1.0)


def test_origin(q2_height):
    with pytest.raises(OriginArgument):
        theta_eval(q2_height, [0.0, 0.0])


def test_outside_cone(q2_height):
    with pytest.raises(OutsideCone):
        theta_eval(q2_height, [-1.0, 1.0])


def test_unknown_kind(q2):
    with pytest.raises(ValueError):
        WeightFunction("gaussian", 1.5, q2)


@pytest.mark.parametrize("q", [1.0, 2.0, 2.5, 0.0])
def test_solver_range(q2, q):
    with pytest.raises(InvalidExponent, match=r"q must lie in \(n-1,n\)"):
        WeightFunction(HEIGHT_POWER, q, q2).require_solver_range()


@given(st.floats(min_value=0.1, max_value=50.0),
       st.floats(min_value=0.05, max_value=np.pi / 2 - 0.05),
       st.sampled_from([HEIGHT_POWER, RADIAL_POWER]))
@settings(max_examples=60, deadline=None)
def test_homogeneous(t, angle, kind):
    from pcmk import quadrant_cone
    w = WeightFunction(kind, 1.3, quadrant_cone())
    y = np.array([np.cos(angle), np.sin(angle)])
    assert theta_eval(w, t * y) == pytest.approx(t ** -1.3 * theta_eval(w, y), rel=1e-12)


def test_quadrature_config_defaults(monkeypatch):
    monkeypatch.setenv("pcmk_workers", "3")
    cfg = QuadratureConfig.for_dim(3)
    assert cfg.workers == 3
    assert cfg.tolerance == 1e-8
    assert QuadratureConfig.for_dim(2, tolerance=1e-6).tolerance == 1e-6


def test_quadrature_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(tolerance=0.0)
    with pytest.raises(ValueError):
        QuadratureConfig(workers=0)
