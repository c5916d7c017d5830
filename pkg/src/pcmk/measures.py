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
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .pseudocone import tighten, radial_values
from .quadrature import facet_integral, sphere_quadrature
from .system.errors import NotTightened, UnsupportedDimension
from .weight import QuadratureConfig

logger = logging.getLogger("pcmk.Measures")

EULER = "euler"
RADIAL = "radial"


@dataclass(frozen=True, eq=False)
class SurfaceMeasure:
    """
    Theta-weighted surface area measure of a polyhedral pseudo-cone.

    Attributes:
        masses (np.ndarray): S_i >= 0 aligned with directions; exactly 0 for empty facets.
        directions (np.ndarray): the pseudo-cone's direction list.
    """
    masses: np.ndarray
    directions: np.ndarray

    @property
    def total(self):
        return float(np.sum(self.masses))

    def __len__(self):
        return len(self.masses)

    def __getitem__(self, i):
        return float(self.masses[i])


@dataclass(frozen=True)
class CovolumeResult:
    value: float
    method: str
    error: float = 0.0

    def __float__(self):
        return self.value


def _prepare(pc, w, cfg):
    if pc.dim not in (2, 3):
        raise UnsupportedDimension(f"weighted measures need n in {{2, 3}}, got n={pc.dim}")
    w.require_solver_range()
    return cfg if cfg is not None else QuadratureConfig.for_dim(pc.dim)


def surface_measure(pc, w, cfg=None):
    """
    S_i = integral of Theta over the facet F_i, for every direction of pc.

    A slack representation is tightened first. Facets are independent, so they are
    integrated on a thread pool when cfg.workers > 1; the result does not depend on
    evaluation order.

    Raises:
        InvalidExponent: q outside (n-1, n).
        UnsupportedDimension: n not in {2, 3}.
    """
    cfg = _prepare(pc, w, cfg)
    pc = tighten(pc)
    facets = pc.facets.facets

    def mass(facet):
        return 0.0 if facet.empty else facet_integral(w, facet.points, cfg)

    if cfg.workers > 1 and len(facets) > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            masses = list(pool.map(mass, facets))
    else:
        masses = [mass(f) for f in facets]
    return SurfaceMeasure(masses=np.array(masses), directions=pc.directions)


def covolume_euler(pc, w, cfg=None, measure=None):
    """
    V_Theta(K) = (1/(n-q)) * sum_i hbar_i S_i for a tightened polyhedral pseudo-cone.

    Args:
        measure (SurfaceMeasure, optional): reuse an already computed surface measure.

    Raises:
        NotTightened: pc.tightened is False (slack numbers would overstate the covolume).
    """
    cfg = _prepare(pc, w, cfg)
    if not pc.tightened:
        raise NotTightened("the Euler covolume formula needs a tightened pseudo-cone; call tighten first")
    if measure is None:
        measure = surface_measure(pc, w, cfg)
    value = float(pc.support_numbers @ measure.masses) / (pc.dim - w.q)
    return CovolumeResult(value=value, method=EULER, error=cfg.tolerance * abs(value))


def _tie_directions(pc):
    """Unit vectors (n = 2) on which two directions give the same radial value."""
    u, h = pc.directions, pc.support_numbers
    i, j = np.triu_indices(len(h), k=1)
    w = h[i, None] * u[j] - h[j, None] * u[i]
    normal = np.stack([-w[:, 1], w[:, 0]], axis=1)
    normal /= np.linalg.norm(normal, axis=1)[:, None]
    return np.vstack([normal, -normal])


def _radial_cells(pc):
    """Central projections of the facets onto the sphere, as ordered unit vertices."""
    cells = []
    for facet in tighten(pc).facets.facets:
        if facet.empty:
            continue
        pts = facet.points
        cells.append(pts / np.linalg.norm(pts, axis=1)[:, None])
    return cells


def covolume_radial(pc, w, cfg=None):
    """
    V_Theta(K) = (1/(n-q)) * integral over the direction set of rho_K(v)^(n-q) Theta(v).

    Independent of the facet measure: n = 2 splits the arc where the radial Gauss map
    changes, n = 3 integrates over the radial projections of the facets.
    """
    cfg = _prepare(pc, w, cfg)
    e = pc.dim - w.q

    def integrand(v):
        rho, _ = radial_values(pc, v)
        return rho ** e * w.values(v)

    if pc.dim == 2:
        total = sphere_quadrature(pc.cone, integrand, cfg, labels=lambda v: radial_values(pc, v)[1],
                                  breaks=_tie_directions(pc))
    else:
        total = sphere_quadrature(pc.cone, integrand, cfg, cells=_radial_cells(pc))
    value = total / e
    return CovolumeResult(value=value, method=RADIAL, error=cfg.tolerance * abs(value))


def covolume_gradient(pc, w, cfg=None):
    """
    Partial derivatives of V_Theta in the support numbers.

    The derivative of the covolume along a support perturbation f is the integral of f
    against the weighted surface area measure, so the gradient is the vector S itself.
    """
    return surface_measure(pc, w, cfg).masses.copy()
