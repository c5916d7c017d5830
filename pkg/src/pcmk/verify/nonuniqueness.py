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
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from ..measures import surface_measure
from ..pseudocone import PseudoCone, tighten
from ..quadrature import cross_section, cross_section_theta, facet_integral
from ..system.errors import RootBracketFailure, UnsupportedDimension
from ..system.sysfunc import polygon_centroid
from ..truncation import truncate, truncate_polyhedron, hausdorff_distance
from ..weight import QuadratureConfig

logger = logging.getLogger("pcmk.Nonuniqueness")


@dataclass(frozen=True, eq=False)
class TranslatedBody:
    """
    L = F + C for a convex set F inside a section C(t1): the cone translated to the apex
    of F, cut at height t1. Kept as halfspaces since its cone facets carry normals on the
    boundary of the dual cone.
    """
    cone: object
    apex: np.ndarray
    height: float
    base: np.ndarray

    def halfspaces(self):
        A = np.vstack([self.cone.facet_normals, -self.cone.v_frak])
        b = np.concatenate([self.cone.facet_normals @ self.apex, [-self.height]])
        return A, b


@dataclass
class NonuniquenessReport:
    t0: float
    t1: float
    shrink: float
    mass_K: float
    mass_L: float
    hausdorff: float
    truncation_height: float
    tolerance: float
    passed: bool


def nonuniqueness_pair(cone, w, cfg=None, tolerance=1e-8, min_distance=0.01):
    """
    Two different C-pseudo-cones with the same weighted surface area measure, a unit
    point mass at -v_frak. The pair passes when both masses are within tolerance of one
    and their truncations at 2 t0 are more than min_distance apart in Hausdorff distance.

    K = C(t0) + C where theta(t0) = 1. L = F + C where F is the centroid homothet of
    C(t0/2) scaled by s, chosen so that the integral of Theta over F is one.

    Returns:
        tuple[PseudoCone, TranslatedBody, NonuniquenessReport]

    Raises:
        RootBracketFailure: the mass equation in s has no sign change on (0, 1].
    """
    if cone.dim not in (2, 3):
        raise UnsupportedDimension("the non-uniqueness pair is built for n in {2, 3}")
    w.require_solver_range()
    cfg = cfg if cfg is not None else QuadratureConfig.for_dim(cone.dim)
    n, q = cone.dim, w.q

    t0 = cross_section_theta(w, 1.0, cfg) ** (1.0 / (q - n + 1))
    K = tighten(PseudoCone(cone, [-cone.v_frak], [t0]))
    t1 = t0 / 2.0

    section = cross_section(cone, t1)
    center = polygon_centroid(section) if n == 3 else section.mean(axis=0)

    def homothet(s):
        return center + s * (section - center)

    def excess(s):
        return facet_integral(w, homothet(s), cfg) - 1.0

    lo, hi = 1e-6, 1.0
    if not excess(lo) < 0.0 < excess(hi):
        raise RootBracketFailure(f"mass equation not bracketed on [{lo}, {hi}]")
    s = brentq(excess, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps)
    apex = (1.0 - s) * center
    L = TranslatedBody(cone=cone, apex=apex, height=t1, base=homothet(s))

    mass_K = float(surface_measure(K, w, cfg).masses[0])
    mass_L = facet_integral(w, L.base, cfg)
    T = 2.0 * t0
    A, b = L.halfspaces()
    d_H = hausdorff_distance(truncate(K, T), truncate_polyhedron(A, b, cone.v_frak, T))
    tol = max(tolerance, 10.0 * cfg.tolerance)
    passed = abs(mass_K - 1.0) <= tol and abs(mass_L - 1.0) <= tol and d_H > min_distance
    report = NonuniquenessReport(t0=t0, t1=t1, shrink=s, mass_K=mass_K, mass_L=mass_L,
                                 hausdorff=d_H, truncation_height=T, tolerance=tol, passed=passed)
    logger.info(f"non-uniqueness pair: t0={t0!r} s={s!r} d_H={d_H!r} passed={passed}")
    return K, L, report
