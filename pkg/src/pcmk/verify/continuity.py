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

from ..measures import surface_measure
from ..pseudocone import tighten, restrict
from ..truncation import truncate, hausdorff_distance
from ..weight import QuadratureConfig

logger = logging.getLogger("pcmk.Continuity")


@dataclass
class ContinuityReport:
    """Discrepancy sequences for perturbations h + 2^-(j+2) delta, j = 0, 1, ..."""
    epsilons: list
    wulff: list
    restriction: list
    measure: list
    floor: float
    passed: bool

    @staticmethod
    def _monotone(seq, floor):
        return all(b <= a * (1.0 + 1e-9) or b <= floor for a, b in zip(seq, seq[1:]))


def continuity_check(pc, w, delta=None, beta=None, levels=20, seed=0, cfg=None, target=1e-6):
    """
    Track how Wulff shapes, restricted bodies and weighted surface area measures follow
    a shrinking support perturbation.

    Args:
        pc (PseudoCone): base body.
        w (WeightFunction): weight for the measure sequence.
        delta (np.ndarray, optional): perturbation direction; drawn from N(0, 0.1^2) clipped
            to half the support numbers when absent.
        beta (Iterable[int], optional): restriction subset; every other direction by default.
        levels (int): number of halvings.
        target (float): every sequence must end below this value.

    The sequences are Hausdorff distances of truncations at twice the top height and the
    largest change of a facet mass. Each must be non-increasing (up to the quadrature floor)
    and end below target.
    """
    cfg = cfg if cfg is not None else QuadratureConfig.for_dim(pc.dim)
    base = tighten(pc)
    h = base.support_numbers
    if delta is None:
        rng = np.random.default_rng(seed)
        delta = np.clip(0.1 * rng.standard_normal(len(h)), -0.5 * h, 0.5 * h)
    delta = np.asarray(delta, dtype=float)
    if beta is None:
        beta = range(0, len(h), 2)
    beta = sorted(set(beta))

    T = 2.0 * float(np.max(base.cone.height(base.facets.vertices)))
    body0 = truncate(base, T)
    restricted0 = truncate(restrict(base, beta), T)
    S0 = surface_measure(base, w, cfg).masses
    floor = 10.0 * cfg.tolerance * max(1.0, float(np.max(S0)))

    eps, wulff, restriction, measure = [], [], [], []
    for j in range(levels):
        e = 2.0 ** -(j + 2)
        perturbed = base.with_support(h + e * delta)
        eps.append(e)
        wulff.append(hausdorff_distance(truncate(perturbed, T), body0))
        restriction.append(hausdorff_distance(truncate(restrict(perturbed, beta), T), restricted0))
        measure.append(float(np.max(np.abs(surface_measure(perturbed, w, cfg).masses - S0))))
        logger.debug(f"level {j}: wulff={wulff[-1]:.3e} restriction={restriction[-1]:.3e} "
                     f"measure={measure[-1]:.3e}")

    passed = all(ContinuityReport._monotone(seq, floor) and seq[-1] < target
                 for seq in (wulff, restriction, measure))
    return ContinuityReport(epsilons=eps, wulff=wulff, restriction=restriction, measure=measure,
                            floor=floor, passed=passed)
