import numpy as np
import numpy.testing as npt
import pytest
from hypothesis import given, settings, strategies as st

from pcmk import (PseudoCone, radial_function, support_function, tighten, restrict,
                  distance_from_origin)
from pcmk.pseudocone import facet_complex, radial_values
from pcmk.system.errors import (InvalidPseudoCone, OutsideDomain, OutsideDualInterior,
                                EmptySubset, UnsupportedDimension)
from pcmk.verify import random_tight_fixture, sample_directions
from pcmk.verify.fixtures import sample_dual_directions

SQRT2 = np.sqrt(2.0)
U2 = np.array([-1.0, -2.0]) / np.sqrt(5.0)


@pytest.fixture
def q2_slack(q2):
    return PseudoCone(q2, [-q2.v_frak, U2], [1.0, 0.1])


class TestValidation:
    def test_nonpositive_support(self, q2):
        with pytest.raises(InvalidPseudoCone):
            PseudoCone(q2, [-q2.v_frak], [0.0])

    def test_direction_on_dual_boundary(self, q2):
        with pytest.raises(InvalidPseudoCone):
            PseudoCone(q2, [[0.0, -1.0]], [1.0])

    def test_repeated_direction(self, q2):
        with pytest.raises(InvalidPseudoCone):
            PseudoCone(q2, [-q2.v_frak, -q2.v_frak], [1.0, 2.0])

    def test_directions_normalized(self, q2):
        pc = PseudoCone(q2, [[-3.0, -3.0]], [1.0])
        npt.assert_allclose(pc.directions[0], -q2.v_frak)


class TestRadialFunction:
    def test_on_facet(self, q2_single, q2):
        rho, argmax = radial_function(q2_single, q2.v_frak)
        assert rho == pytest.approx(1.0)
        assert argmax == (0,)

    def test_closed_form(self, q2_single):
        rho, _ = radial_function(q2_single, np.array([0.6, 0.8]))
        assert rho == pytest.approx(5 * SQRT2 / 7)

    def test_outside_domain(self, q2_single):
        with pytest.raises(OutsideDomain):
            radial_function(q2_single, np.array([1.0, 0.0]))

    def test_tie_breaks_to_lowest_index(self, q2):
        a = np.array([-1.0, -0.5]) / np.linalg.norm([1.0, 0.5])
        b = np.array([-0.5, -1.0]) / np.linalg.norm([1.0, 0.5])
        pc = PseudoCone(q2, [b, a], [1.0, 1.0])
        rho, argmax = radial_function(pc, q2.v_frak)
        assert argmax == (0, 1)
        assert radial_values(pc, q2.v_frak)[1][0] == 0

    @given(st.floats(min_value=0.05, max_value=np.pi / 2 - 0.05),
           st.floats(min_value=0.1, max_value=10.0))
    @settings(max_examples=50, deadline=None)
    def test_boundary_point_on_body(self, angle, scale):
        from pcmk import quadrant_cone
        q2 = quadrant_cone()
        pc = PseudoCone(q2, [-q2.v_frak, U2], [scale, 0.5 * scale])
        v = np.array([np.cos(angle), np.sin(angle)])
        rho, _ = radial_function(pc, v)
        A, b = pc.halfspaces()
        assert np.all(A @ (rho * v) <= b + 1e-9 * scale)
        assert np.max(A @ (rho * v) - b) == pytest.approx(0.0, abs=1e-9 * scale)


class TestSupportFunction:
    def test_defining_direction(self, q2_single, q2):
        assert support_function(q2_single, -q2.v_frak) == pytest.approx(-1.0)

    def test_vertex_direction(self, q2_single):
        assert support_function(q2_single, U2) == pytest.approx(-SQRT2 / np.sqrt(5.0))

    def test_outside_dual(self, q2_single):
        with pytest.raises(OutsideDualInterior):
            support_function(q2_single, np.array([0.0, -1.0]))


class TestFacets:
    def test_single_segment(self, q2_single):
        (facet,) = facet_complex(q2_single).facets
        npt.assert_allclose(sorted(map(tuple, facet.points)), [(0.0, SQRT2), (SQRT2, 0.0)], atol=1e-12)

    def test_slack_facet_empty(self, q2_slack):
        fc = q2_slack.facets
        assert not fc.facets[0].empty
        assert fc.facets[1].empty

    def test_pyramid_square(self, o3_square):
        (facet,) = o3_square.facets.facets
        assert len(facet.points) == 4
        npt.assert_allclose(np.abs(facet.points), np.ones((4, 3)), atol=1e-12)

    def test_neighbours(self, q2):
        pc = PseudoCone(q2, [-q2.v_frak, U2, U2[::-1]], [1.0, 0.7, 0.7])
        fc = tighten(pc).facets
        assert fc.neighbours(0) == {1, 2}
        assert fc.neighbours(1) == {0}

    def test_dimension_four_unsupported(self):
        from pcmk import build_cone
        cone = build_cone(4, facet_normals=-np.eye(4))
        pc = PseudoCone(cone, [-np.ones(4) / 2.0], [1.0])
        with pytest.raises(UnsupportedDimension):
            facet_complex(pc)

    def test_support_by_linear_program_in_dimension_four(self):
        from pcmk import build_cone
        cone = build_cone(4, facet_normals=-np.eye(4))
        pc = PseudoCone(cone, [-np.ones(4) / 2.0], [1.0])
        assert support_function(pc, -np.ones(4) / 2.0) == pytest.approx(-1.0)


class TestTighten:
    def test_slack_number_grows(self, q2_slack):
        tight = tighten(q2_slack)
        npt.assert_allclose(tight.support_numbers, [1.0, SQRT2 / np.sqrt(5.0)])
        assert tight.tightened

    def test_idempotent(self, q2_single):
        once = tighten(q2_single)
        npt.assert_array_equal(tighten(once).support_numbers, once.support_numbers)
        npt.assert_array_equal(once.support_numbers, q2_single.support_numbers)

    @pytest.mark.parametrize("seed", range(5))
    def test_point_set_unchanged(self, q2, seed):
        pc = random_tight_fixture(q2, 6, seed)
        h = pc.support_numbers.copy()
        h[0] *= 0.5
        slack = pc.with_support(h)
        tight = tighten(slack)
        assert np.all(tight.support_numbers >= slack.support_numbers)
        fresh = facet_complex(PseudoCone(q2, tight.directions, tight.support_numbers)).vertices
        gaps = np.linalg.norm(fresh[:, None, :] - slack.facets.vertices[None, :, :], axis=2)
        assert gaps.min(axis=1).max() < 1e-9
        assert gaps.min(axis=0).max() < 1e-9


class TestRestrict:
    def test_all_directions(self, q2_slack):
        npt.assert_allclose(restrict(q2_slack, [0, 1]).support_numbers,
                            tighten(q2_slack).support_numbers)

    def test_single_direction(self, q2):
        pc = tighten(PseudoCone(q2, [-q2.v_frak, U2], [1.0, 0.7]))
        sub = restrict(pc, [0])
        assert len(sub) == 1
        assert sub.support_numbers[0] == pytest.approx(1.0)

    def test_empty(self, q2_single):
        with pytest.raises(EmptySubset):
            restrict(q2_single, [])


def test_distance_from_origin(q2_single, o3_square):
    assert distance_from_origin(q2_single) == pytest.approx(1.0)
    assert distance_from_origin(o3_square) == pytest.approx(1.0)


def section_points(cone, coords):
    """x in [0, 1] maps onto the segment (x, 1 - x) of the quadrant, (x, y) in [-1, 1]^2
    onto the section z = 1 of the pyramid."""
    if cone.dim == 2:
        return np.column_stack([coords[:, 0], 1.0 - coords[:, 0]])
    return np.column_stack([coords, np.ones(len(coords))])


def dense_sup(pc, u, rounds=8, size=101, reach=5):
    """sup of <u, rho_K(p) p> over section points p, on grids refined around the best sample."""
    k = pc.dim - 1
    lo0, hi0 = (0.0, 1.0) if pc.dim == 2 else (-1.0, 1.0)
    lo, hi = np.full(k, lo0), np.full(k, hi0)
    best = -np.inf
    for _ in range(rounds):
        axes = [np.linspace(a, b, size) for a, b in zip(lo, hi)]
        coords = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, k)
        p = section_points(pc.cone, coords)
        values = radial_values(pc, p)[0] * (p @ u)
        j = int(np.argmax(values))
        best = max(best, float(values[j]))
        span = reach * (hi - lo) / (size - 1)
        lo, hi = np.maximum(coords[j] - span, lo0), np.minimum(coords[j] + span, hi0)
    return best


class TestDuality:
    @pytest.mark.parametrize("cone_name, seed", [("q2", 0), ("q2", 3), ("o3", 0), ("o3", 2)])
    def test_support_is_sup_of_radial(self, request, cone_name, seed):
        cone = request.getfixturevalue(cone_name)
        pc = random_tight_fixture(cone, 6, seed)
        rng = np.random.default_rng(seed)
        for u in list(pc.directions[:2]) + list(sample_dual_directions(cone, 2, rng, margin=0.2)):
            h = support_function(pc, u)
            assert dense_sup(pc, u) == pytest.approx(h, abs=1e-6 * max(1.0, abs(h)))


class TestScaling:
    @pytest.mark.parametrize("cone_name", ["q2", "o3"])
    def test_linear_in_scale(self, request, cone_name):
        cone = request.getfixturevalue(cone_name)
        pc = random_tight_fixture(cone, 5, 7)
        big = PseudoCone(cone, pc.directions, 2.0 * pc.support_numbers)
        v = sample_directions(cone, 500, seed=7)
        npt.assert_allclose(radial_values(big, v)[0], 2.0 * radial_values(pc, v)[0], rtol=1e-12)
        for u in sample_dual_directions(cone, 3, np.random.default_rng(7), margin=0.2):
            assert support_function(big, u) == pytest.approx(2.0 * support_function(pc, u), rel=1e-12)
        npt.assert_allclose(tighten(big).support_numbers, 2.0 * pc.support_numbers, rtol=1e-12)
        for mine, theirs in zip(big.facets.facets, pc.facets.facets):
            npt.assert_allclose(mine.points, 2.0 * theirs.points, rtol=1e-9, atol=1e-12)


class TestInteriorPoint:
    @pytest.mark.parametrize("seed", range(4))
    def test_fixtures_have_interior(self, q2, o3, seed):
        for cone in (q2, o3):
            pc = random_tight_fixture(cone, 6, seed)
            p = pc.interior_point()
            A, b = pc.halfspaces()
            assert np.all(A @ p < b)
            assert cone.in_interior(p)
            assert pc.strictly_contains(p)

    def test_tiny_body_keeps_its_facets(self, q2):
        pc = random_tight_fixture(q2, 6, 0)
        tiny = tighten(PseudoCone(q2, pc.directions, 1e-16 * pc.support_numbers))
        assert all(not f.empty for f in tiny.facets.facets)
        npt.assert_allclose(tiny.support_numbers, 1e-16 * pc.support_numbers, rtol=1e-9)

    def test_tiny_pyramid_body(self, o3):
        pc = random_tight_fixture(o3, 5, 1)
        tiny = tighten(PseudoCone(o3, pc.directions, 1e-16 * pc.support_numbers))
        assert [f.empty for f in tiny.facets.facets] == [f.empty for f in pc.facets.facets]
