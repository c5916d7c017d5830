import numpy as np
import numpy.testing as npt
import pytest

from pcmk import truncate, hausdorff_distance, PseudoCone
from pcmk.truncation import truncate_polyhedron, point_to_hull_distance
from pcmk.system.errors import EmptyTruncation

SQRT2 = np.sqrt(2.0)


def test_facet_at_cap_height(q2_single):
    body = truncate(q2_single, 1.0)
    npt.assert_allclose(sorted(map(tuple, body.vertices)), [(0.0, SQRT2), (SQRT2, 0.0)], atol=1e-12)


def test_quadrilateral(q2_single):
    body = truncate(q2_single, 2.0)
    assert len(body.vertices) == 4
    assert body.contains(np.array([1.5, 1.0]))
    assert not body.contains(np.array([0.3, 0.3]))


def test_below_body(q2_single):
    with pytest.raises(EmptyTruncation):
        truncate(q2_single, 0.5)


def test_pyramid_frustum(o3_square):
    body = truncate(o3_square, 2.0)
    assert len(body.vertices) == 8
    heights = sorted(set(np.round(body.vertices[:, 2], 12)))
    assert heights == [1.0, 2.0]


def test_raw_halfspaces(q2):
    A = np.vstack([q2.facet_normals, [[-1.0, -1.0]]])
    b = np.array([0.0, 0.0, -1.0])
    body = truncate_polyhedron(A, b, q2.v_frak, SQRT2)
    assert len(body.vertices) == 4


class TestHausdorff:
    def test_zero_for_same_body(self, q2_single):
        body = truncate(q2_single, 3.0)
        assert hausdorff_distance(body, body) == pytest.approx(0.0, abs=1e-12)

    def test_parallel_shift(self, q2):
        a = truncate(PseudoCone(q2, [-q2.v_frak], [1.0]), 3.0)
        b = truncate(PseudoCone(q2, [-q2.v_frak], [1.5]), 3.0)
        # parallel facet planes 0.5 apart; b lies inside a
        assert hausdorff_distance(a, b) == pytest.approx(0.5, rel=1e-9)

    def test_symmetric(self, q2):
        a = truncate(PseudoCone(q2, [-q2.v_frak], [1.0]), 3.0)
        b = truncate(PseudoCone(q2, [[-1.0, -2.0]], [0.9]), 3.0)
        assert hausdorff_distance(a, b) == pytest.approx(hausdorff_distance(b, a))


def test_point_to_hull_distance_square():
    square = np.array([[1, 1, 1], [-1, 1, 1], [-1, -1, 1], [1, -1, 1]], dtype=float)
    assert point_to_hull_distance(np.zeros(3), square) == pytest.approx(1.0)
    assert point_to_hull_distance(np.array([3.0, 0.0, 1.0]), square) == pytest.approx(2.0)
