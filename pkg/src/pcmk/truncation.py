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
from dataclasses import dataclass

import numpy as np
from scipy.spatial import ConvexHull

from .system.errors import EmptyTruncation
from .system.sysfunc import dedup_points, DEDUP_TOL

logger = logging.getLogger("pcmk.Truncation")


@dataclass(frozen=True, eq=False)
class TruncatedBody:
    """
    Bounded polytope K ∩ C^-(t), kept as its vertex set and the H-representation
    it was cut from (rows A y <= b, the last row being the height cap).
    """
    vertices: np.ndarray
    height: float
    A: np.ndarray
    b: np.ndarray

    @property
    def dim(self):
        return self.vertices.shape[1]

    def contains(self, y, tol=DEDUP_TOL):
        return bool(np.all(self.A @ y <= self.b + tol * np.maximum(1.0, np.abs(self.b))))


def truncate_polyhedron(A, b, v_frak, t):
    """
    Vertices of {y : A y <= b, <y, v_frak> <= t} by enumeration of n-subsets of rows.

    Degenerate (lower-dimensional) results are allowed, which is the case when the cap
    coincides with a facet plane.

    Raises:
        EmptyTruncation: no feasible vertex exists.
    """
    A = np.vstack([np.asarray(A, dtype=float), v_frak])
    b = np.concatenate([np.asarray(b, dtype=float), [float(t)]])
    n = A.shape[1]
    combos = np.array(list(itertools.combinations(range(len(A)), n)))
    M = A[combos]
    rhs = b[combos]
    regular = np.abs(np.linalg.det(M)) > 1e-12
    if not np.any(regular):
        raise EmptyTruncation(f"no vertex of the truncation at height {t}")
    points = np.linalg.solve(M[regular], rhs[regular][..., None])[..., 0]
    slack = points @ A.T - b[None, :]
    feasible = np.all(slack <= DEDUP_TOL * np.maximum(1.0, np.abs(b))[None, :], axis=1)
    if not np.any(feasible):
        raise EmptyTruncation(f"the body does not reach below height {t}")
    vertices, _ = dedup_points(points[feasible])
    return TruncatedBody(vertices=vertices, height=float(t), A=A, b=b)


def truncate(pc, t):
    """K ∩ C^-(t) for a pseudo-cone K."""
    A, b = pc.halfspaces()
    body = truncate_polyhedron(A, b, pc.cone.v_frak, t)
    logger.debug(f"truncated at height {t}: {len(body.vertices)} vertices")
    return body


def _closest_on_segment(p, a, b):
    ab = b - a
    denom = float(ab @ ab)
    if denom == 0.0:
        return a
    s = min(1.0, max(0.0, float((p - a) @ ab) / denom))
    return a + s * ab


def _closest_on_triangle(p, a, b, c):
    ab, ac, ap = b - a, c - a, p - a
    d1, d2 = ab @ ap, ac @ ap
    if d1 <= 0 and d2 <= 0:
        return a
    bp = p - b
    d3, d4 = ab @ bp, ac @ bp
    if d3 >= 0 and d4 <= d3:
        return b
    vc = d1 * d4 - d3 * d2
    if vc <= 0 and d1 >= 0 and d3 <= 0:
        return a + (d1 / (d1 - d3)) * ab
    cp = p - c
    d5, d6 = ab @ cp, ac @ cp
    if d6 >= 0 and d5 <= d6:
        return c
    vb = d5 * d2 - d1 * d6
    if vb <= 0 and d2 >= 0 and d6 <= 0:
        return a + (d2 / (d2 - d6)) * ac
    va = d3 * d6 - d5 * d4
    if va <= 0 and (d4 - d3) >= 0 and (d5 - d6) >= 0:
        return b + ((d4 - d3) / ((d4 - d3) + (d5 - d6))) * (c - b)
    denom = 1.0 / (va + vb + vc)
    return a + ab * (vb * denom) + ac * (vc * denom)


def point_to_hull_distance(p, vertices):
    """Euclidean distance from p to the convex hull of vertices (any affine rank, n <= 3)."""
    p = np.asarray(p, dtype=float)
    V = np.asarray(vertices, dtype=float)
    if len(V) == 1:
        return float(np.linalg.norm(p - V[0]))
    center = V.mean(axis=0)
    _, s, vt = np.linalg.svd(V - center)
    rank = int(np.sum(s > 1e-10 * max(1.0, s[0])))
    if rank == 0:
        return float(np.linalg.norm(p - V[0]))
    if rank == 1:
        proj = (V - center) @ vt[0]
        a, b = center + proj.min() * vt[0], center + proj.max() * vt[0]
        return float(np.linalg.norm(p - _closest_on_segment(p, a, b)))
    if rank < V.shape[1]:
        basis = vt[:rank]
        local = (p - center) @ basis.T
        off = np.linalg.norm((p - center) - local @ basis)
        inplane = point_to_hull_distance(local, (V - center) @ basis.T)
        return float(np.hypot(off, inplane))

    hull = ConvexHull(V)
    if np.max(hull.equations[:, :-1] @ p + hull.equations[:, -1]) <= 1e-12:
        return 0.0
    best = np.inf
    for simplex in hull.simplices:
        pts = V[simplex]
        if len(pts) == 2:
            q = _closest_on_segment(p, pts[0], pts[1])
        else:
            q = _closest_on_triangle(p, pts[0], pts[1], pts[2])
        best = min(best, float(np.linalg.norm(p - q)))
    return best


def hausdorff_distance(a, b):
    """
    Hausdorff distance of two truncated bodies.

    For convex polytopes the directed distances are attained at vertices, so only the
    vertex sets are scanned.
    """
    forward = max(point_to_hull_distance(p, b.vertices) for p in a.vertices)
    backward = max(point_to_hull_distance(p, a.vertices) for p in b.vertices)
    return max(forward, backward)
