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
import logging
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.optimize import linprog

from .cone import delta_C_many
from .system.errors import (InvalidPseudoCone, OutsideDomain, OutsideDualInterior,
                            UnsupportedDimension, EmptySubset)
from .system.sysfunc import (as_unit_rows, orthonormal_complement, dedup_points, clip_polygon,
                             polygon_area, UNIT_TOL, DEDUP_TOL)

logger = logging.getLogger("pcmk.PseudoCone")

DISTINCT_ANGLE = 1e-9


@dataclass(frozen=True)
class Facet:
    """Facet of a pseudo-cone in direction u_i; points is empty when the constraint only touches."""
    index: int
    points: np.ndarray
    vertex_ids: tuple

    @property
    def empty(self):
        return len(self.vertex_ids) == 0


@dataclass(frozen=True, eq=False)
class FacetComplex:
    """
    Bounded part of the boundary of a polyhedral pseudo-cone.

    vertices are deduplicated at 1e-9 times the largest support number; facets[i] belongs to direction i; ridge_set
    lists the faces of dimension <= n-2 as tuples of vertex ids (single ids for
    vertices, sorted pairs for edges when n = 3).
    """
    vertices: np.ndarray
    facets: tuple
    ridge_set: tuple

    def neighbours(self, i):
        """Directions whose facet shares a ridge with facet i."""
        mine = self.facets[i]
        if mine.empty:
            return set()
        dim = self.vertices.shape[1]
        result = set()
        for other in self.facets:
            if other.index == i or other.empty:
                continue
            shared = set(mine.vertex_ids) & set(other.vertex_ids)
            if len(shared) >= dim - 1:
                result.add(other.index)
        return result


@dataclass(frozen=True, eq=False)
class PseudoCone:
    """
    Wulff shape [h] = C ∩ ⋂_i {y : <y, u_i> <= -h_i} for finitely many directions.

    Attributes:
        cone (Cone): the recession cone C.
        directions (np.ndarray): distinct unit vectors u_i in the interior of the dual
            direction set, shape (m, n).
        support_numbers (np.ndarray): h_i > 0, shape (m,).
        tightened (bool): h_i equals the absolute support function of the body at u_i.
    """
    cone: object
    directions: np.ndarray
    support_numbers: np.ndarray
    tightened: bool = False
    _checked: bool = field(default=False, repr=False)

    def __post_init__(self):
        if self._checked:
            return
        dirs = as_unit_rows(self.directions, "directions")
        h = np.asarray(self.support_numbers, dtype=float).reshape(-1)
        if dirs.shape[1] != self.cone.dim:
            raise InvalidPseudoCone(f"directions must have {self.cone.dim} coordinates")
        if len(h) != len(dirs):
            raise InvalidPseudoCone("one support number per direction is required")
        if not np.all(np.isfinite(h)) or np.any(h <= 0.0):
            raise InvalidPseudoCone("support numbers must be finite and positive")
        if np.any(delta_C_many(self.cone, dirs) <= 0.0):
            raise InvalidPseudoCone("every direction must lie in the interior of the dual cone")
        for i in range(len(dirs)):
            chords = np.linalg.norm(dirs[i + 1:] - dirs[i], axis=1)
            if np.any(2.0 * np.arcsin(np.minimum(chords / 2.0, 1.0)) <= DISTINCT_ANGLE):
                raise InvalidPseudoCone(f"direction {i} is repeated")
        object.__setattr__(self, "directions", dirs)
        object.__setattr__(self, "support_numbers", h)
        if not self.strictly_contains(self.interior_point()):
            raise InvalidPseudoCone("the represented set has no interior point")
        object.__setattr__(self, "_checked", True)

    @property
    def dim(self):
        return self.cone.dim

    def __len__(self):
        return len(self.support_numbers)

    def with_support(self, support_numbers, tightened=False):
        """Same directions, new support numbers (validated)."""
        return PseudoCone(self.cone, self.directions, np.asarray(support_numbers, dtype=float),
                          tightened=tightened)

    def scaled(self, t):
        """The body t*K; the tightened flag survives scaling."""
        if t <= 0:
            raise ValueError("scale factor must be positive")
        return PseudoCone(self.cone, self.directions, self.support_numbers * t,
                          tightened=self.tightened, _checked=True)

    def halfspaces(self):
        """H-representation (A, b) with K = {y : A y <= b}: cone rows first, then directions."""
        A = np.vstack([self.cone.facet_normals, self.directions])
        b = np.concatenate([np.zeros(len(self.cone.facet_normals)), -self.support_numbers])
        return A, b

    def interior_point(self):
        """A point of int K: far enough along v_frak every direction constraint holds."""
        v = self.cone.v_frak
        return v * float(np.max(self.support_numbers / -(self.directions @ v))) * 2.0

    def strictly_contains(self, y):
        A, b = self.halfspaces()
        return bool(np.all(A @ np.asarray(y, dtype=float) < b))

    @cached_property
    def facets(self):
        return facet_complex(self)


def radial_values(pc, points):
    """
    Vectorized radial function for rows of points in int C (no domain check).

    Returns (rho, argmax) with ties resolved to the lowest direction index.
    """
    points = np.atleast_2d(points)
    ratios = pc.support_numbers[None, :] / -(points @ pc.directions.T)
    idx = np.argmax(ratios, axis=1)
    return ratios[np.arange(len(points)), idx], idx


def radial_function(pc, v):
    """
    Radial function rho_K(v) = max_i h_i / |<v, u_i>| for v in the interior of C.

    Returns:
        tuple[float, tuple[int, ...]]: rho and the set of maximizing direction indices;
        the radial Gauss map value is pc.directions[i] when that set is a singleton.

    Raises:
        OutsideDomain: v is not strictly inside C (margin 1e-12).
    """
    v = np.asarray(v, dtype=float)
    if v.shape != (pc.dim,) or not pc.cone.in_interior(v, UNIT_TOL):
        raise OutsideDomain("radial function is only evaluated on the interior of C")
    ratios = pc.support_numbers / -(pc.directions @ v)
    rho = float(np.max(ratios))
    argmax = tuple(int(i) for i in np.flatnonzero(ratios >= rho * (1.0 - 1e-12)))
    return rho, argmax


def length_tolerance(pc):
    """Merge distance for vertices of pc, relative to its largest support number."""
    return DEDUP_TOL * float(np.max(pc.support_numbers))


def _facet_in_plane(pc, i, tol):
    """Points of K ∩ {<y, u_i> = -h_i}, ordered; empty array when degenerate."""
    u, h = pc.directions[i], pc.support_numbers[i]
    A, b = pc.halfspaces()
    keep = np.ones(len(A), dtype=bool)
    keep[len(pc.cone.facet_normals) + i] = False
    A, b = A[keep], b[keep]
    origin = -h * u
    basis = orthonormal_complement(u)
    coeff = A @ basis.T
    rhs = b - A @ origin

    if pc.dim == 2:
        lo, hi = -np.inf, np.inf
        for c, d in zip(coeff[:, 0], rhs):
            if abs(c) < 1e-15:
                if d < -tol:
                    return np.empty((0, 2))
                continue
            if c > 0:
                hi = min(hi, d / c)
            else:
                lo = max(lo, d / c)
        if not np.isfinite(lo) or not np.isfinite(hi) or hi - lo <= tol:
            return np.empty((0, 2))
        return origin + np.outer([lo, hi], basis[0])

    hits = h / -(pc.cone.rays @ u)
    radius = 4.0 * float(np.max(hits))
    polygon = radius * np.array([[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]])
    for a, d in zip(coeff, rhs):
        polygon = clip_polygon(polygon, a, d, tol)
        if len(polygon) == 0:
            return np.empty((0, 3))
    polygon, _ = dedup_points(polygon, tol)
    if len(polygon) < 3 or abs(polygon_area(polygon)) <= tol ** 2:
        return np.empty((0, 3))
    return origin + polygon @ basis


def facet_complex(pc):
    """
    Enumerate the facets of a polyhedral pseudo-cone for n in {2, 3}.

    Each facet is obtained by intersecting the remaining halfspaces inside the facet
    hyperplane (an interval for n = 2, a halfplane intersection for n = 3).

    Raises:
        UnsupportedDimension: n is not 2 or 3.
    """
    if pc.dim not in (2, 3):
        raise UnsupportedDimension(f"facet enumeration needs n in {{2, 3}}, got n={pc.dim}")
    tol = length_tolerance(pc)
    raw = [_facet_in_plane(pc, i, tol) for i in range(len(pc))]
    every = [p for pts in raw for p in pts]
    vertices, index_map = dedup_points(every, tol) if every else (np.empty((0, pc.dim)), [])
    facets = []
    ridges = set()
    cursor = 0
    for i, pts in enumerate(raw):
        ids = []
        for _ in range(len(pts)):
            k = index_map[cursor]
            cursor += 1
            if k not in ids:
                ids.append(k)
        facets.append(Facet(index=i, points=vertices[ids] if ids else pts, vertex_ids=tuple(ids)))
        if pc.dim == 2:
            ridges.update((k,) for k in ids)
        elif ids:
            ridges.update((k,) for k in ids)
            ridges.update(tuple(sorted((ids[j], ids[(j + 1) % len(ids)]))) for j in range(len(ids)))
    ridge_set = tuple(sorted(ridges, key=lambda r: (len(r), r)))
    return FacetComplex(vertices=vertices, facets=tuple(facets), ridge_set=ridge_set)


def _support_lp(pc, u):
    A, b = pc.halfspaces()
    res = linprog(-u, A_ub=A, b_ub=b, bounds=[(None, None)] * pc.dim, method="highs")
    if res.status != 0:
        raise OutsideDualInterior(f"support function linear program failed: {res.message}")
    return float(u @ res.x)


def support_function(pc, u):
    """
    Support function h_K(u) = max_{y in K} <u, y> (negative); the absolute support
    function is its negative.

    For n in {2, 3} the maximum is taken over the vertices of the bounded part of the
    boundary; in higher dimension a linear program is solved.

    Raises:
        OutsideDualInterior: u is not in the interior of the dual direction set.
    """
    u = np.asarray(u, dtype=float)
    if u.shape != (pc.dim,) or abs(np.linalg.norm(u) - 1.0) > 1e-9:
        raise OutsideDualInterior("u must be a unit vector")
    if delta_C_many(pc.cone, u[None, :])[0] <= 0.0:
        raise OutsideDualInterior("u is not in the interior of the dual direction set")
    if pc.dim not in (2, 3):
        return _support_lp(pc, u)
    vertices = pc.facets.vertices
    if len(vertices) == 0:
        return _support_lp(pc, u)
    return float(np.max(vertices @ u))


def tighten(pc):
    """
    Replace each h_i by the absolute support function of [h] at u_i.

    The point set is unchanged; h_i only grows on directions whose facet is empty.
    """
    if pc.tightened:
        return pc
    h = pc.support_numbers.copy()
    if pc.dim in (2, 3) and pc.facets.vertices.size:
        fc = pc.facets
        for facet in fc.facets:
            if facet.empty:
                h[facet.index] = -float(np.max(fc.vertices @ pc.directions[facet.index]))
    else:
        h = np.array([-_support_lp(pc, u) for u in pc.directions])
    h = np.maximum(h, pc.support_numbers)
    tight = PseudoCone(pc.cone, pc.directions, h, tightened=True, _checked=True)
    if pc.dim in (2, 3) and pc.facets.vertices.size:
        # same point set: the facet complex carries over
        tight.__dict__["facets"] = pc.facets
    return tight


def restrict(pc, beta):
    """
    The C-determined set K^(beta) = C ∩ ⋂_{u in beta} H^-(K, u) for a subset of directions.

    Args:
        pc (PseudoCone): the body K.
        beta (Iterable[int]): indices into pc.directions.

    Raises:
        EmptySubset: beta is empty.
    """
    beta = sorted(set(int(i) for i in beta))
    if not beta:
        raise EmptySubset("restriction needs at least one direction")
    if beta[0] < 0 or beta[-1] >= len(pc):
        raise IndexError("restriction index out of range")
    tight = tighten(pc)
    return tighten(PseudoCone(pc.cone, tight.directions[beta], tight.support_numbers[beta],
                              _checked=True))


def distance_from_origin(pc):
    """b(K): Euclidean distance of K from the origin."""
    from .truncation import truncate, point_to_hull_distance

    vertices = tighten(pc).facets.vertices if pc.dim in (2, 3) else None
    if vertices is None or len(vertices) == 0:
        raise UnsupportedDimension("distance from the origin needs n in {2, 3}")
    top = float(np.max(pc.cone.height(vertices)))
    reach = float(np.max(np.linalg.norm(vertices, axis=1)))
    body = truncate(pc, max(top, reach) + 1.0)
    return point_to_hull_distance(np.zeros(pc.dim), body.vertices)
