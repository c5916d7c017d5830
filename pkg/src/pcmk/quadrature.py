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
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss

from .system.errors import (ToleranceNotMet, SegmentThroughOrigin, DegeneratePolygon,
                            UnsupportedDimension, OutsideCone)
from .system.sysfunc import polygon_centroid
from .weight import HEIGHT_POWER

logger = logging.getLogger("pcmk.Quadrature")

# symmetric degree-8 rule on the triangle: (barycentric orbit generator, weight, orbit size)
_DUNAVANT8 = (
    ((1 / 3, 1 / 3, 1 / 3), 0.144315607677787, 1),
    ((0.081414823414554, 0.459292588292723, 0.459292588292723), 0.095091634267285, 3),
    ((0.658861384496480, 0.170569307751760, 0.170569307751760), 0.103217370534718, 3),
    ((0.898905543365938, 0.050547228317031, 0.050547228317031), 0.032458497623198, 3),
    ((0.008394777409958, 0.263112829634638, 0.728492392955404), 0.027230314174435, 6),
)


@lru_cache(maxsize=None)
def gauss_rule(order):
    """Gauss-Legendre nodes and weights on [0, 1]."""
    x, wts = leggauss(order)
    return 0.5 * (x + 1.0), 0.5 * wts


@lru_cache(maxsize=None)
def triangle_rule():
    """Barycentric points (16, 3) and weights summing to one of the degree-8 rule."""
    points, weights = [], []
    for (a, b, c), weight, orbit in _DUNAVANT8:
        if orbit == 1:
            perms = [(a, b, c)]
        elif orbit == 3:
            perms = [(a, b, c), (b, a, c), (b, c, a)]
        else:
            perms = [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)]
        for p in perms:
            points.append(p)
            weights.append(weight)
    weights = np.array(weights)
    return np.array(points), weights / weights.sum()


def adaptive_interval(f, lo, hi, tolerance, max_depth, order=16, absolute=None):
    """
    Adaptive Gauss-Legendre integration of a vectorized f over the union of intervals.

    Every panel is compared with its two halves; panels whose halves agree within their
    share of the tolerance are accepted. All panels of one level are evaluated at once.

    Returns:
        tuple[float, float]: integral and error estimate.

    Raises:
        ToleranceNotMet: panels remain unresolved after max_depth halvings.
    """
    nodes, weights = gauss_rule(order)
    lo = np.atleast_1d(np.asarray(lo, dtype=float))
    hi = np.atleast_1d(np.asarray(hi, dtype=float))

    def panel(a, b):
        x = a[:, None] + (b - a)[:, None] * nodes[None, :]
        return (f(x.reshape(-1)).reshape(x.shape) @ weights) * (b - a)

    est = panel(lo, hi)
    first = float(np.sum(est))
    target = absolute if absolute is not None else tolerance * max(abs(first), 1e-300)
    span = float(np.sum(hi - lo))
    total, error = 0.0, 0.0
    for _ in range(max_depth):
        mid = 0.5 * (lo + hi)
        left, right = panel(lo, mid), panel(mid, hi)
        fine = left + right
        diff = np.abs(fine - est)
        share = target * (hi - lo) / span
        done = diff <= share
        total += float(np.sum(fine[done]))
        error += float(np.sum(diff[done]))
        if np.all(done):
            return total, error
        keep = ~done
        lo = np.concatenate([lo[keep], mid[keep]])
        hi = np.concatenate([mid[keep], hi[keep]])
        est = np.concatenate([left[keep], right[keep]])
    remaining = float(np.sum(est))
    raise ToleranceNotMet(f"interval quadrature unresolved after {max_depth} levels",
                          estimate=total + remaining, error=error)


def adaptive_triangles(g, triangles, tolerance, max_depth, absolute=None):
    """
    Adaptive integration of a vectorized g over flat triangles (k, 3, d) by quadrisection.

    Returns:
        tuple[float, float]: integral and error estimate.

    Raises:
        ToleranceNotMet: triangles remain unresolved after max_depth levels.
    """
    bary, weights = triangle_rule()
    tris = np.asarray(triangles, dtype=float)

    def areas(t):
        e1, e2 = t[:, 1] - t[:, 0], t[:, 2] - t[:, 0]
        if t.shape[2] == 2:
            return 0.5 * np.abs(e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0])
        return 0.5 * np.linalg.norm(np.cross(e1, e2), axis=1)

    def rule(t):
        pts = np.einsum("qj,kjd->kqd", bary, t)
        vals = g(pts.reshape(-1, t.shape[2])).reshape(pts.shape[:2])
        return (vals @ weights) * areas(t)

    def split(t):
        a, b, c = t[:, 0], t[:, 1], t[:, 2]
        ab, bc, ca = 0.5 * (a + b), 0.5 * (b + c), 0.5 * (c + a)
        kids = np.stack([np.stack([a, ab, ca], 1), np.stack([ab, b, bc], 1),
                         np.stack([ca, bc, c], 1), np.stack([ab, bc, ca], 1)], 1)
        return kids

    est = rule(tris)
    first = float(np.sum(est))
    target = absolute if absolute is not None else tolerance * max(abs(first), 1e-300)
    whole = float(np.sum(areas(tris)))
    total, error = 0.0, 0.0
    for _ in range(max_depth):
        kids = split(tris)
        k = len(tris)
        flat = kids.reshape(4 * k, 3, tris.shape[2])
        kid_est = rule(flat).reshape(k, 4)
        fine = kid_est.sum(axis=1)
        diff = np.abs(fine - est)
        done = diff <= target * areas(tris) / whole
        total += float(np.sum(fine[done]))
        error += float(np.sum(diff[done]))
        if np.all(done):
            return total, error
        keep = ~done
        tris = kids[keep].reshape(-1, 3, tris.shape[2])
        est = kid_est[keep].reshape(-1)
    raise ToleranceNotMet(f"triangle quadrature unresolved after {max_depth} levels",
                          estimate=total + float(np.sum(est)), error=error)


def _height_power_segment(w, a, b):
    """Closed form of the height-power weight integrated along [a, b]."""
    alpha = float(a @ w.cone.v_frak)
    beta = float((b - a) @ w.cone.v_frak)
    length = float(np.linalg.norm(b - a))
    q = w.q
    ratio = beta / alpha
    if abs(ratio) < 1e-14:
        return length * alpha ** -q
    if q == 1.0:
        return length * np.log1p(ratio) / beta
    return length * alpha ** (1.0 - q) * np.expm1((1.0 - q) * np.log1p(ratio)) / (beta * (1.0 - q))


def segment_integral(w, a, b, cfg):
    """
    Integral of Theta along the segment [a, b] with respect to length.

    Raises:
        SegmentThroughOrigin: the segment meets the origin.
        OutsideCone: an endpoint lies outside C.
        ToleranceNotMet: adaptive refinement failed.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if not (w.cone.contains(a) and w.cone.contains(b)):
        raise OutsideCone("segment endpoints must lie in C")
    d = b - a
    length = float(np.linalg.norm(d))
    if length == 0.0:
        return 0.0
    s = np.clip(-(a @ d) / (d @ d), 0.0, 1.0)
    if np.linalg.norm(a + s * d) <= 1e-14 * (np.linalg.norm(a) + np.linalg.norm(b)):
        raise SegmentThroughOrigin("segment passes through the origin")

    def integrand(s):
        return w.values(a[None, :] + s[:, None] * d[None, :]) * length

    value, _ = adaptive_interval(integrand, 0.0, 1.0, cfg.tolerance, cfg.max_depth, cfg.gauss_order)
    if w.kind == HEIGHT_POWER:
        exact = _height_power_segment(w, a, b)
        if abs(exact - value) > max(100.0 * cfg.tolerance, 1e-12) * abs(exact):
            logger.warning(f"segment quadrature {value!r} disagrees with closed form {exact!r}")
    return value


def polygon_integral(w, polygon, cfg):
    """
    Integral of Theta over a planar convex polygon with ordered vertices (k, 3).

    The polygon is fanned from its centroid and each triangle refined by quadrisection.

    Raises:
        DegeneratePolygon: fewer than three vertices or zero area.
    """
    polygon = np.asarray(polygon, dtype=float)
    if len(polygon) < 3:
        raise DegeneratePolygon("a polygon needs at least three vertices")
    center = polygon_centroid(polygon)
    nxt = np.roll(polygon, -1, axis=0)
    tris = np.stack([np.broadcast_to(center, polygon.shape), polygon, nxt], axis=1)
    e1, e2 = tris[:, 1] - tris[:, 0], tris[:, 2] - tris[:, 0]
    reach = float(np.max(np.linalg.norm(polygon - center, axis=1)))
    if np.sum(np.linalg.norm(np.cross(e1, e2), axis=1)) <= 1e-14 * reach ** 2:
        raise DegeneratePolygon("polygon has zero area")
    value, _ = adaptive_triangles(w.values, tris, cfg.tolerance, cfg.max_depth)
    return value


def facet_integral(w, points, cfg):
    """Dispatch on dimension: segment for n = 2, polygon for n = 3."""
    if len(points) == 0:
        return 0.0
    if w.cone.dim == 2:
        return segment_integral(w, points[0], points[-1], cfg)
    return polygon_integral(w, points, cfg)


def cross_section(cone, t):
    """Ordered vertices of C(t) = C ∩ {<y, v_frak> = t}."""
    if t <= 0:
        raise ValueError("cross-section height must be positive")
    rays = cone.ray_cycle()
    return rays * (t / (rays @ cone.v_frak))[:, None]


def cross_section_theta(w, t, cfg):
    """theta(t): integral of Theta over the section C(t); homogeneous of degree n-1-q."""
    if w.cone.dim not in (2, 3):
        raise UnsupportedDimension("cross sections are integrated for n in {2, 3}")
    return facet_integral(w, cross_section(w.cone, t), cfg)


def _breakpoints(angle_fn, labels, lo, hi, samples=256, resolution=1e-12, candidates=()):
    grid = np.linspace(lo, hi, samples + 1)[1:-1]
    candidates = np.asarray(candidates, dtype=float).reshape(-1)
    if len(candidates):
        # every candidate angle sits between two grid points
        extra = np.concatenate([candidates - 1e-9, candidates, candidates + 1e-9])
        grid = np.unique(np.concatenate([grid, extra[(extra > lo) & (extra < hi)]]))
    lab = labels(angle_fn(grid))
    points = []

    def bisect(a, la, b, lb):
        if la == lb:
            return
        if b - a <= resolution:
            points.append(0.5 * (a + b))
            return
        m = 0.5 * (a + b)
        lm = int(labels(angle_fn(np.array([m])))[0])
        bisect(a, la, m, lm)
        bisect(m, lm, b, lb)

    for k in range(len(grid) - 1):
        bisect(grid[k], int(lab[k]), grid[k + 1], int(lab[k + 1]))
    return points


def sphere_quadrature(cone, integrand, cfg, labels=None, cells=None, breaks=None):
    """
    Integral of integrand over the open direction set of C on the unit sphere.

    Args:
        cone (Cone): n in {2, 3}.
        integrand (Callable): maps unit vectors (k, n) to values (k,).
        labels (Callable, optional): n = 2 only; maps unit vectors to integer cell labels
            (e.g. the radial Gauss map index). Label changes are located by bisection to
            1e-12 rad and become panel breakpoints.
        breaks (np.ndarray, optional): n = 2 only; unit vectors where labels may change.
            Their angles join the sampling grid of the label scan.
        cells (list, optional): n = 3 only; spherical polygons (ordered unit vertices)
            tiling the direction set, inside each of which the integrand is smooth.
    """
    if cone.dim == 2:
        a, b = cone.ray_cycle()
        start = np.arctan2(a[1], a[0])
        sweep = np.arctan2(a[0] * b[1] - a[1] * b[0], a @ b)

        def on_arc(phi):
            return np.stack([np.cos(phi), np.sin(phi)], axis=1)

        cuts = [start]
        if labels is not None:
            candidates = ()
            if breaks is not None and len(breaks):
                breaks = np.atleast_2d(breaks)
                candidates = start + np.arctan2(a[0] * breaks[:, 1] - a[1] * breaks[:, 0], breaks @ a)
            cuts += sorted(_breakpoints(on_arc, labels, start, start + sweep, candidates=candidates))
        cuts.append(start + sweep)
        value, _ = adaptive_interval(lambda phi: integrand(on_arc(phi)), cuts[:-1], cuts[1:],
                                     cfg.tolerance, cfg.max_depth, cfg.gauss_order)
        return value

    if cone.dim != 3:
        raise UnsupportedDimension("sphere quadrature supports n in {2, 3}")

    if cells is None:
        cells = [cone.ray_cycle()]
    tris = []
    for cell in cells:
        cell = np.asarray(cell, dtype=float)
        center = cell.sum(axis=0)
        center /= np.linalg.norm(center)
        for k in range(len(cell)):
            tris.append((center, cell[k], cell[(k + 1) % len(cell)]))
    tris = np.array(tris)

    # central projection of each flat chord triangle onto its geodesic triangle
    normals = np.cross(tris[:, 1] - tris[:, 0], tris[:, 2] - tris[:, 0])
    normals /= np.linalg.norm(normals, axis=1)[:, None]
    offsets = np.abs(np.einsum("kd,kd->k", normals, tris[:, 0]))
    areas = 0.5 * np.linalg.norm(np.cross(tris[:, 1] - tris[:, 0], tris[:, 2] - tris[:, 0]), axis=1)

    def projector(offset):
        def projected(x):
            r = np.linalg.norm(x, axis=1)
            return integrand(x / r[:, None]) * offset / r ** 3
        return projected

    # one coarse pass over all triangles fixes a common absolute target
    bary, wts = triangle_rule()
    coarse = sum(area * float(projector(o)(bary @ t) @ wts) for t, o, area in zip(tris, offsets, areas))
    target = cfg.tolerance * max(abs(coarse), 1e-300)
    total = 0.0
    for tri, offset, area in zip(tris, offsets, areas):
        value, _ = adaptive_triangles(projector(offset), tri[None], cfg.tolerance, cfg.max_depth,
                                      absolute=target * area / areas.sum())
        total += value
    return total


def ball_covolume_density(w, cfg):
    """
    Weighted measure of C ∩ B^n, computed as (1/(n-q)) times the integral of Theta over
    the direction set of C.

    Raises:
        InvalidExponent: q outside (n-1, n).
    """
    w.require_solver_range()
    n = w.cone.dim
    return sphere_quadrature(w.cone, w.values, cfg) / (n - w.q)
