import numpy as np
import numpy.testing as npt
import pytest

from pcmk.cone import delta_C_many
from pcmk.verify import random_tight_fixture, sample_dual_directions, facet_size


@pytest.mark.parametrize("seed", range(5))
def test_reproducible(q2, seed):
    a = random_tight_fixture(q2, 8, seed)
    b = random_tight_fixture(q2, 8, seed)
    npt.assert_array_equal(a.support_numbers, b.support_numbers)
    assert a.tightened
    assert all(not f.empty for f in a.facets.facets)


def test_margin(o3):
    dirs = sample_dual_directions(o3, 20, np.random.default_rng(0), margin=0.2)
    assert np.all(delta_C_many(o3, dirs) >= 0.2)


def test_facet_size():
    square = np.array([[1, 1, 1], [-1, 1, 1], [-1, -1, 1], [1, -1, 1]], dtype=float)
    assert facet_size(square) == pytest.approx(4.0)
    assert facet_size(np.array([[1.0, 0.0], [0.0, 1.0]])) == pytest.approx(np.sqrt(2.0))
    assert facet_size(np.empty((0, 2))) == 0.0
