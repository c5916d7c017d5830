import numpy as np
import pytest

from pcmk import (quadrant_cone, pyramid_cone, PseudoCone, WeightFunction, QuadratureConfig,
                  RADIAL_POWER, HEIGHT_POWER)

SQRT2 = np.sqrt(2.0)


@pytest.fixture(scope="session")
def q2():
    return quadrant_cone()


@pytest.fixture(scope="session")
def o3():
    return pyramid_cone()


@pytest.fixture(scope="session")
def q2_single(q2):
    """Single facet x + y = sqrt(2): the section C(1) plus C."""
    return PseudoCone(q2, [-q2.v_frak], [1.0])


@pytest.fixture(scope="session")
def o3_square(o3):
    """Single facet at height 1: the square with vertices (+-1, +-1, 1)."""
    return PseudoCone(o3, [[0.0, 0.0, -1.0]], [1.0])


@pytest.fixture(scope="session")
def q2_height(q2):
    return WeightFunction(HEIGHT_POWER, 1.5, q2)


@pytest.fixture(scope="session")
def q2_radial(q2):
    return WeightFunction(RADIAL_POWER, 1.5, q2)


@pytest.fixture(scope="session")
def o3_height(o3):
    return WeightFunction(HEIGHT_POWER, 2.5, o3)


@pytest.fixture(scope="session")
def o3_radial(o3):
    return WeightFunction(RADIAL_POWER, 2.5, o3)


@pytest.fixture(scope="session")
def cfg2():
    return QuadratureConfig.for_dim(2, workers=1)


@pytest.fixture(scope="session")
def cfg3():
    return QuadratureConfig.for_dim(3, workers=1)
