"""
pcmk - Weighted Minkowski problems for pseudo-cones. For more info visit https://github.com/pcmk-dev/pcmk
Copyright (C) 2026-present pcmk developers (MIT)

Visit https://github.com/pcmk-dev/pcmk

MIT License

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""
import itertools
import logging
from dataclasses import dataclass, field

import numpy as np

from .system.errors import NotPointed, NotFullDimensional, BadVFrak
from .system.sysfunc import as_unit_rows, unit, dedup_points, UNIT_TOL, DEDUP_TOL

logger = logging.getLogger("pcmk.Cone")


@dataclass(frozen=True, eq=False)
class Cone:
    """
    Pointed, full-dimensional polyhedral cone C = {y : <y, w_j> <= 0 for all j}.

    Attributes:
        dim (int): ambient dimension n >= 2.
        facet_normals (np.ndarray): irredundant unit outer normals w_j, shape (f, n).
        rays (np.ndarray): unit extreme-ray generators, shape (r, n). They are also the
            outer facet normals of the dual cone C°.
        v_frak (np.ndarray): unit vector in int C with -v_frak in int C°; heights are
            measured as <y, v_frak>.
    """
    dim: int
    facet_normals: np.ndarray
    rays: np.ndarray
    v_frak: np.ndarray
    _ray_cycle: tuple = field(default=(), repr=False)

    @property
    def dual_facet_normals(self):
        return self.rays

    def contains(self, y, tol=UNIT_TOL):
        y = np.asarray(y, dtype=float)
        return bool(np.all(self.facet_normals @ y <= tol * float(np.linalg.norm(y))))

    def in_interior(self, v, margin=UNIT_TOL):
        v = np.asarray(v, dtype=float)
        return bool(np.all(self.facet_normals @ v < -margin * np.linalg.norm(v)))

    def height(self, y):
        """<y, v_frak> for a point or rows of points."""
        return np.asarray(y, dtype=float) @ self.v_frak

    def ray_cycle(self):
        """Extreme rays in counter-clockwise order around v_frak (n in {2, 3})."""
        return self.rays[list(self._ray_cycle)] if self._ray_cycle else self.rays

    def __repr__(self):
        return f"Cone(dim={self.dim}, facets={len(self.facet_normals)}, rays={len(self.rays)})"


def _extreme_directions(normals, dim, tol=DEDUP_TOL):
    """
    Extreme rays of {y : <y, a> <= 0 for a in normals} by enumeration of (n-1)-subsets.

    Returns (rays, has_line): has_line is True when some candidate direction and its
    negative are both feasible, i.e. the cone contains a line.
    """
    found = []
    has_line = False
    for subset in itertools.combinations(range(len(normals)), dim - 1):
        block = normals[list(subset)]
        if np.linalg.matrix_rank(block, tol=1e-10) < dim - 1:
            continue
        _, _, vt = np.linalg.svd(block)
        r = vt[-1]
        plus = np.all(normals @ r <= tol)
        minus = np.all(normals @ -r <= tol)
        if plus and minus:
            has_line = True
            continue
        if plus:
            found.append(r)
        elif minus:
            found.append(-r)
    if not found:
        return np.empty((0, dim)), has_line
    rays, _ = dedup_points(as_unit_rows(found), tol)
    return rays, has_line


def _cycle_order(rays, axis):
    if len(rays) < 3 or rays.shape[1] != 3:
        if rays.shape[1] == 2:
            # order so the pair runs counter-clockwise
            a, b = rays
            return (0, 1) if a[0] * b[1] - a[1] * b[0] > 0 else (1, 0)
        return tuple(range(len(rays)))
    basis = np.linalg.svd(axis[None, :])[2][1:]
    angles = np.arctan2(rays @ basis[1], rays @ basis[0])
    order = np.argsort(angles)
    # keep counter-clockwise orientation as seen from the tip of axis
    e1, e2 = basis
    if np.dot(np.cross(e1, e2), axis) < 0:
        order = order[::-1]
    return tuple(int(i) for i in order)


def build_cone(dim, facet_normals=None, rays=None, v_frak=None):
    """
    Build and validate a Cone from either its facet normals or its generating rays.

    Raises:
        NotPointed: the described set contains a line.
        NotFullDimensional: the described set has empty interior.
        BadVFrak: the supplied (or default) v_frak fails an interiority test.
    """
    if (facet_normals is None) == (rays is None):
        raise ValueError("give exactly one of facet_normals or rays")
    if dim < 2:
        raise NotFullDimensional("cone dimension must be at least 2")

    if facet_normals is not None:
        normals = as_unit_rows(facet_normals, "facet_normals")
        if normals.shape[1] != dim:
            raise ValueError(f"facet normals must have {dim} coordinates")
        if np.linalg.matrix_rank(normals, tol=1e-10) < dim:
            raise NotPointed("facet normals do not span R^n; the cone contains a line")
        ray_set, has_line = _extreme_directions(normals, dim)
        if has_line:
            raise NotPointed("the cone contains a line")
        if len(ray_set) == 0 or np.linalg.matrix_rank(ray_set, tol=1e-10) < dim:
            raise NotFullDimensional("the cone has empty interior")
    else:
        generators = as_unit_rows(rays, "rays")
        if generators.shape[1] != dim:
            raise ValueError(f"rays must have {dim} coordinates")
        if np.linalg.matrix_rank(generators, tol=1e-10) < dim:
            raise NotFullDimensional("rays do not span R^n")
        # facet normals of cone(rays) are the extreme rays of its dual {x : <x, r> <= 0}
        normals, has_line = _extreme_directions(generators, dim)
        if has_line or len(normals) == 0 or np.linalg.matrix_rank(normals, tol=1e-10) < dim:
            raise NotPointed("the rays generate a cone containing a line")
        ray_set, _ = _extreme_directions(normals, dim)

    # canonical irredundant normals from the canonical rays
    normals, _ = _extreme_directions(ray_set, dim)

    if v_frak is None:
        v = unit(ray_set.sum(axis=0))
    else:
        v = unit(v_frak)
        if v.shape[0] != dim:
            raise BadVFrak(f"v_frak must have {dim} coordinates")
    if not np.all(normals @ v < 0.0):
        raise BadVFrak("v_frak is not in the interior of C")
    if not np.all(ray_set @ -v < 0.0):
        raise BadVFrak("-v_frak is not in the interior of the dual cone")

    cone = Cone(dim=dim, facet_normals=normals, rays=ray_set, v_frak=v,
                _ray_cycle=_cycle_order(ray_set, v) if dim in (2, 3) else ())
    logger.debug(f"built {cone!r}")
    return cone


def delta_C(cone, u):
    """
    Spherical distance of the unit vector u from the boundary of the dual direction set.

    Positive exactly for u in the interior; zero on the boundary and negative outside
    (then it is minus the distance to the nearest facet great-sphere that u violates).
    """
    u = unit(u)
    return float(np.min(np.arcsin(np.clip(-(cone.rays @ u), -1.0, 1.0))))


def delta_C_many(cone, directions):
    directions = np.atleast_2d(np.asarray(directions, dtype=float))
    return np.min(np.arcsin(np.clip(-(directions @ cone.rays.T), -1.0, 1.0)), axis=1)


def omega_alpha(cone, directions, alpha):
    """Membership mask of the compact set {u : delta_C(u) >= alpha}."""
    return delta_C_many(cone, directions) >= alpha


def quadrant_cone():
    """The positive quadrant of R^2."""
    return build_cone(2, facet_normals=[[0.0, -1.0], [-1.0, 0.0]])


def pyramid_cone():
    """The square pyramid {z >= |x|, z >= |y|} in R^3 with axis (0, 0, 1)."""
    s = 1.0 / np.sqrt(2.0)
    return build_cone(3, facet_normals=[[s, 0, -s], [-s, 0, -s], [0, s, -s], [0, -s, -s]])
