import numpy as np
import numpy.testing as npt
import pytest

from pcmk import (PseudoCone, WeightFunction, HEIGHT_POWER, RADIAL_POWER, DirectionalMeasure,
                  SolverOptions, solve_minkowski, support_bound, surface_measure)
from pcmk.solver import check_support_bound, phi_functional
from pcmk.system.errors import InvalidMeasure, InvalidExponent, SupportBoundViolation, NotConverged
from pcmk.verify import random_tight_fixture

KINDS = [HEIGHT_POWER, RADIAL_POWER]
OFFSETS = [0.75, 0.5, 0.1]


@pytest.fixture
def single_atom(q2):
    return DirectionalMeasure(q2, [-q2.v_frak], [1.0])


class TestDirectionalMeasure:
    def test_boundary_direction(self, q2):
        with pytest.raises(InvalidMeasure):
            DirectionalMeasure(q2, [[0.0, -1.0]], [1.0])

    def test_repeated_direction(self, q2):
        with pytest.raises(InvalidMeasure):
            DirectionalMeasure(q2, [-q2.v_frak, -q2.v_frak], [1.0, 1.0])

    def test_nonpositive_mass(self, q2):
        with pytest.raises(InvalidMeasure):
            DirectionalMeasure(q2, [-q2.v_frak], [0.0])

    def test_margin(self, single_atom):
        assert single_atom.margin == pytest.approx(np.pi / 4)
        assert single_atom.scaled(3.0).total == pytest.approx(3.0)


def test_support_bound_quadrant_radial(q2_radial, cfg2):
    assert support_bound(q2_radial.cone, q2_radial, cfg2) == pytest.approx(np.pi ** -2, rel=1e-10)


def test_support_bound_violation(q2):
    pc = PseudoCone(q2, [-q2.v_frak], [1.0], tightened=True)
    with pytest.raises(SupportBoundViolation):
        check_support_bound(pc, 0.5)
    assert check_support_bound(pc, 2.0) == pytest.approx(0.5)


def test_phi_is_scale_invariant(single_atom, q2_height, cfg2):
    a = phi_functional([1.0], single_atom, q2_height, cfg2)
    b = phi_functional([9.0], single_atom, q2_height, cfg2)
    assert a == pytest.approx(1.0 / 16.0, rel=1e-12)
    assert b == pytest.approx(a, rel=1e-12)


class TestSolve:
    def test_single_atom_closed_form(self, q2, q2_height, single_atom, cfg2):
        report = solve_minkowski(q2, q2_height, single_atom, cfg=cfg2)
        assert report.converged
        assert report.solution.support_numbers[0] == pytest.approx(4.0, rel=1e-8)
        assert report.max_residual <= 1e-8
        assert report.lam == pytest.approx(0.125, rel=1e-10)
        assert report.covolume["euler"] == pytest.approx(8.0, rel=1e-8)
        assert report.covolume["radial"] == pytest.approx(8.0, rel=1e-8)
        assert report.b_of_K == pytest.approx(4.0, rel=1e-8)
        assert report.max_bound_ratio <= 1.0 + 1e-9

    def test_rejects_q_outside_range(self, q2, single_atom):
        with pytest.raises(InvalidExponent):
            solve_minkowski(q2, WeightFunction(HEIGHT_POWER, 2.5, q2), single_atom)

    @pytest.mark.parametrize("seed", range(3))
    def test_round_trip_quadrant(self, q2, q2_radial, cfg2, seed):
        body = random_tight_fixture(q2, 5, seed)
        target = surface_measure(body, q2_radial, cfg2)
        phi = DirectionalMeasure(q2, target.directions, target.masses)
        report = solve_minkowski(q2, q2_radial, phi, cfg=cfg2)
        assert report.converged
        npt.assert_allclose(surface_measure(report.solution, q2_radial, cfg2).masses, target.masses,
                            rtol=1e-7)

    def test_deterministic(self, q2, q2_radial, cfg2):
        body = random_tight_fixture(q2, 4, 21)
        phi = DirectionalMeasure.from_surface(q2, surface_measure(body, q2_radial, cfg2))
        a = solve_minkowski(q2, q2_radial, phi, cfg=cfg2)
        b = solve_minkowski(q2, q2_radial, phi, cfg=cfg2)
        npt.assert_array_equal(a.solution.support_numbers, b.solution.support_numbers)
        assert a.phi_trace == b.phi_trace

    def test_raise_on_failure(self, q2, q2_radial, cfg2):
        body = random_tight_fixture(q2, 5, 2)
        phi = DirectionalMeasure.from_surface(q2, surface_measure(body, q2_radial, cfg2))
        opts = SolverOptions(max_iter=1, max_restarts=0, polish_threshold=1e-12, tolerance=1e-14)
        with pytest.raises(NotConverged) as info:
            solve_minkowski(q2, q2_radial, phi, opts, cfg2, raise_on_failure=True)
        assert info.value.report is not None
        assert not info.value.report.converged

    def test_pyramid_single_atom(self, o3, o3_height, cfg3):
        phi = DirectionalMeasure(o3, [[0.0, 0.0, -1.0]], [2.0])
        report = solve_minkowski(o3, o3_height, phi, cfg=cfg3)
        # S(C(t) + C) = 4 t^(-1/2) = 2 at t = 4
        assert report.converged
        assert report.solution.support_numbers[0] == pytest.approx(4.0, rel=1e-6)

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(50))
    def test_round_trip_many(self, q2, q2_height, cfg2, seed):
        body = random_tight_fixture(q2, 6, seed)
        phi = DirectionalMeasure.from_surface(q2, surface_measure(body, q2_height, cfg2))
        report = solve_minkowski(q2, q2_height, phi, cfg=cfg2)
        assert report.converged
        npt.assert_allclose(surface_measure(report.solution, q2_height, cfg2).masses, phi.masses,
                            rtol=1e-7)


def round_trip(cone, kind, offset, seed, m, cfg):
    w = WeightFunction(kind, cone.dim - offset, cone)
    body = random_tight_fixture(cone, m, seed)
    phi = DirectionalMeasure.from_surface(cone, surface_measure(body, w, cfg))
    return w, phi, solve_minkowski(cone, w, phi, cfg=cfg)


class TestRoundTripExponents:
    @pytest.mark.parametrize("kind", KINDS)
    @pytest.mark.parametrize("offset", OFFSETS)
    def test_quadrant(self, q2, cfg2, kind, offset):
        w, phi, report = round_trip(q2, kind, offset, 5, 4, cfg2)
        assert report.converged
        assert np.all(report.solution.support_numbers > 0.0)
        npt.assert_allclose(surface_measure(report.solution, w, cfg2).masses, phi.masses, rtol=1e-7)
        assert report.max_bound_ratio <= 1.0 + 1e-9

    @pytest.mark.parametrize("kind", KINDS)
    @pytest.mark.parametrize("offset", OFFSETS)
    def test_pyramid(self, o3, cfg3, kind, offset):
        w, phi, report = round_trip(o3, kind, offset, 1, 4, cfg3)
        assert report.converged
        npt.assert_allclose(surface_measure(report.solution, w, cfg3).masses, phi.masses, rtol=1e-5)
        assert report.max_bound_ratio <= 1.0 + 1e-9

    @pytest.mark.parametrize("seed", [0, 1, 5])
    def test_close_to_n(self, q2, cfg2, seed):
        # q = n - 0.1: the unit covolume rescale is V^-10
        w, phi, report = round_trip(q2, HEIGHT_POWER, 0.1, seed, 6, cfg2)
        assert report.converged
        assert report.lam > 0.0
        npt.assert_allclose(report.covolume["euler"], report.covolume["radial"], rtol=1e-8)


@pytest.mark.parametrize("cone_name, kind", [("q2", HEIGHT_POWER), ("q2", RADIAL_POWER),
                                             ("o3", HEIGHT_POWER)])
def test_phi_trace_ascends(request, cone_name, kind):
    cone = request.getfixturevalue(cone_name)
    cfg = request.getfixturevalue("cfg2" if cone.dim == 2 else "cfg3")
    _, _, report = round_trip(cone, kind, 0.5, 3, 4, cfg)
    trace = np.array(report.phi_trace)
    steps = np.diff(trace) / np.abs(trace[:-1])
    assert report.converged
    assert np.all(steps >= -(1e-8 if cone.dim == 2 else 1e-6))


def test_options_per_dimension():
    assert SolverOptions.for_dim(3).tolerance == 1e-6
    assert SolverOptions.for_dim(2, seed=4).seed == 4
    with pytest.raises(ValueError):
        SolverOptions(backtrack=1.5)
