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
from math import comb

import numpy as np

from ..pseudocone import tighten, radial_values
from ..quadrature import sphere_quadrature, cross_section
from ..weight import QuadratureConfig
from .fixtures import facet_size

logger = logging.getLogger("pcmk.MonteCarlo")

CHUNK = 1 << 16


@dataclass(frozen=True)
class McEstimate:
    estimate: float
    stderr: float
    samples: int
    seed: int
    hits: int = 0
    tail_bound: float = 0.0

    def within(self, value, sigmas=3.0):
        """value lies within sigmas standard errors (exact agreement when stderr is 0)."""
        if self.stderr == 0.0:
            return abs(self.estimate - value) <= 1e-12 * max(1.0, abs(value))
        return abs(self.estimate - value) <= sigmas * self.stderr


def _chunk(cone, seed, index):
    # counter-based stream per chunk: the draws of chunk k never depend on other chunks
    gen = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(index,))))
    v = gen.standard_normal((CHUNK, cone.dim))
    v /= np.linalg.norm(v, axis=1)[:, None]
    return v[np.all(v @ cone.facet_normals.T < 0.0, axis=1)]


def sample_directions(cone, count, seed, workers=1):
    """
    count uniform samples of the open direction set of C, by rejection from the sphere.

    Bit-reproducible for fixed (seed, count) regardless of workers.
    """
    accepted, total, index = [], 0, 0
    while total < count:
        # estimate how many more chunks are needed from the running acceptance rate
        rate = total / (index * CHUNK) if index else 0.1
        batch = max(1, int(np.ceil((count - total) / max(rate, 1e-3) / CHUNK)))
        indices = range(index, index + batch)
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(lambda k: _chunk(cone, seed, k), indices))
        else:
            parts = [_chunk(cone, seed, k) for k in indices]
        for part in parts:
            accepted.append(part)
            total += len(part)
        index += batch
    return np.concatenate(accepted)[:count]


def direction_set_area(cone, cfg=None):
    cfg = cfg if cfg is not None else QuadratureConfig.for_dim(cone.dim)
    return sphere_quadrature(cone, lambda v: np.ones(len(v)), cfg)


def _estimate(values, area, samples, seed, hits):
    mean = float(np.sum(values)) / samples
    if hits == 0:
        return McEstimate(0.0, 0.0, samples, seed, hits)
    std = float(np.std(values, ddof=1))
    return McEstimate(area * mean, area * std / np.sqrt(samples), samples, seed, hits)


def mc_surface_measure(pc, w, N, seed, workers=1):
    """
    Monte-Carlo estimate of every S_i from the sphere side: the integral over the direction
    set of g(alpha_K(v)) Theta(rho v) rho^(n-1) / |<v, alpha_K(v)>| with g an indicator.

    Ties of the radial Gauss map go to the lowest index.

    Returns:
        list[McEstimate]: one per direction of pc.
    """
    pc = tighten(pc)
    v = sample_directions(pc.cone, N, seed, workers)
    area = direction_set_area(pc.cone)
    rho, idx = radial_values(pc, v)
    boundary = rho[:, None] * v
    cosines = np.abs(np.einsum("kd,kd->k", v, pc.directions[idx]))
    values = w.values(boundary) * rho ** (pc.dim - 1) / cosines
    result = []
    for i in range(len(pc)):
        mask = idx == i
        result.append(_estimate(np.where(mask, values, 0.0), area, N, seed, int(mask.sum())))
    return result


def covolume_tail_bound(pc, w, T):
    """
    Upper bound for the weighted covolume of C ∖ K above height T.

    c0 * c2 * sum_k C(n-1, k) (-1)^(k+1) t^k T^(n-k-q) / (k+q-n) with c0 = 1,
    c2 the (n-1)-measure of the unit section C(1) and t = rho_K(v_frak).
    """
    if T <= 0:
        raise ValueError("truncation height must be positive")
    w.require_solver_range()
    n, q = pc.dim, w.q
    c2 = facet_size(cross_section(pc.cone, 1.0))
    t = float(radial_values(pc, pc.cone.v_frak)[0][0])
    total = sum(comb(n - 1, k) * (-1) ** (k + 1) * t ** k * T ** (n - k - q) / (k + q - n)
                for k in range(1, n))
    return c2 * total


def mc_covolume(pc, w, N, seed, T=None, tail_error=1e-6, workers=1):
    """
    Radial Monte-Carlo estimate of V_Theta truncated at height T.

    The integrand is (1/(n-q)) Theta(v) min(rho(v), T/<v, v_frak>)^(n-q). When T is not
    given it is doubled from the body's top height until the analytic tail bound drops
    below tail_error; the bound is reported with the estimate.
    """
    w.require_solver_range()
    pc = tighten(pc)
    e = pc.dim - w.q
    if T is None:
        top = float(np.max(pc.cone.height(pc.facets.vertices)))
        T = 2.0 * top
        while covolume_tail_bound(pc, w, T) > tail_error:
            T *= 2.0
    v = sample_directions(pc.cone, N, seed, workers)
    area = direction_set_area(pc.cone)
    rho, _ = radial_values(pc, v)
    reach = np.minimum(rho, T / (v @ pc.cone.v_frak))
    values = w.values(v) * reach ** e / e
    est = _estimate(values, area, N, seed, N)
    tail = covolume_tail_bound(pc, w, T)
    logger.debug(f"covolume estimate {est.estimate!r} +- {est.stderr!r} at T={T} (tail <= {tail!r})")
    return McEstimate(est.estimate, est.stderr, N, seed, N, tail)
