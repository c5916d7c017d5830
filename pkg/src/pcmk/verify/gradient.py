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

from ..measures import covolume_euler, covolume_gradient
from ..pseudocone import tighten
from ..weight import QuadratureConfig

logger = logging.getLogger("pcmk.Gradient")


@dataclass
class GradientReport:
    gradient: np.ndarray
    finite_difference: np.ndarray
    relative_errors: np.ndarray
    step: float
    rtol: float
    passed: bool


def covolume_gradient_check(pc, w, step=1e-5, rtol=1e-4, cfg=None):
    """
    Central differences of the Euler covolume in each support number against S_i.

    The step is relative to h_i. Directions with an empty facet are compared against the
    largest mass instead of their own.
    """
    cfg = cfg if cfg is not None else QuadratureConfig.for_dim(pc.dim)
    base = tighten(pc)
    h = base.support_numbers
    grad = covolume_gradient(base, w, cfg)
    fd = np.empty_like(h)
    for i in range(len(h)):
        s = step * h[i]
        up, down = h.copy(), h.copy()
        up[i] += s
        down[i] -= s
        v_up = covolume_euler(tighten(base.with_support(up)), w, cfg).value
        v_down = covolume_euler(tighten(base.with_support(down)), w, cfg).value
        fd[i] = (v_up - v_down) / (2.0 * s)
    scale = np.where(grad > 0.0, grad, float(np.max(grad)))
    errors = np.abs(fd - grad) / scale
    passed = bool(np.all(errors <= rtol))
    logger.debug(f"gradient check: max relative error {float(np.max(errors)):.3e}")
    return GradientReport(gradient=grad, finite_difference=fd, relative_errors=errors,
                          step=step, rtol=rtol, passed=passed)
