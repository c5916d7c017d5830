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
import numpy as np

UNIT_TOL = 1e-12
DEDUP_TOL = 1e-9


def as_unit_rows(vectors, name="vectors"):
    """Return a float (k, n) array with every row scaled to unit length."""
    arr = np.atleast_2d(np.asarray(vectors, dtype=float))
    if arr.ndim != 2 or arr.shape[0] == 0:
        raise ValueError(f"{name} must be a non-empty list of vectors")
    norms = np.linalg.norm(arr, axis=1)
    if np.any(norms == 0.0):
        raise ValueError(f"{name} contains a zero vector")
    return arr / norms[:, None]


def unit(vector):
    v = np.asarray(vector, dtype=float)
    norm = np.linalg.norm(v)
    if norm == 0.0:
        raise ValueError("zero vector has no direction")
    return v / norm


def orthonormal_complement(u):
    """Orthonormal basis (rows) of the hyperplane perpendicular to the unit vector u."""
    u = np.asarray(u, dtype=float)
    if u.shape[0] == 2:
        return np.array([[-u[1], u[0]]])
    # last rows of the full SVD basis span u-perp
    _, _, vt = np.linalg.svd(u[None, :])
    return vt[1:]


def dedup_points(points, tol=DEDUP_TOL):
    """Merge points closer than tol; returns (unique_points, index_map)."""
    unique = []
    index_map = []
    for p in points:
        for k, q in enumerate(unique):
            if np.max(np.abs(p - q)) <= tol:
                index_map.append(k)
                break
        else:
            unique.append(np.asarray(p, dtype=float))
            index_map.append(len(unique) - 1)
    if not unique:
        return np.empty((0, 0)), []
    return np.array(unique), index_map


def clip_polygon(polygon, a, b, tol=DEDUP_TOL):
    """
    Clip a convex polygon (k, 2) with counter-clockwise vertices by the halfplane a.x <= b.

    Sutherland-Hodgman against a single edge; returns the clipped vertex array,
    possibly empty.
    """
    if len(polygon) == 0:
        return polygon
    values = polygon @ a - b
    out = []
    k = len(polygon)
    for i in range(k):
        p, vp = polygon[i], values[i]
        q, vq = polygon[(i + 1) % k], values[(i + 1) % k]
        if vp <= tol:
            out.append(p)
        if (vp < -tol and vq > tol) or (vp > tol and vq < -tol):
            s = vp / (vp - vq)
            out.append(p + s * (q - p))
    if not out:
        return np.empty((0, 2))
    return np.array(out)


def polygon_area(polygon):
    """Signed shoelace area of a planar polygon (k, 2)."""
    x, y = polygon[:, 0], polygon[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def polygon_centroid(points):
    """Area centroid of a convex polygon given by ordered vertices in R^2 or R^3."""
    points = np.asarray(points, dtype=float)
    if len(points) < 3:
        return points.mean(axis=0)
    origin = points[0]
    total = 0.0
    acc = np.zeros(points.shape[1])
    for i in range(1, len(points) - 1):
        a, b = points[i] - origin, points[i + 1] - origin
        if points.shape[1] == 2:
            area = 0.5 * abs(a[0] * b[1] - a[1] * b[0])
        else:
            area = 0.5 * np.linalg.norm(np.cross(a, b))
        total += area
        acc += area * (origin + points[i] + points[i + 1]) / 3.0
    if total == 0.0:
        return points.mean(axis=0)
    return acc / total
