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
import os
from dataclasses import dataclass

import numpy as np

from .system.errors import OutsideCone, OriginArgument, InvalidExponent

logger = logging.getLogger("pcmk.Weight")

RADIAL_POWER = "radial-power"
HEIGHT_POWER = "height-power"
KINDS = (RADIAL_POWER, HEIGHT_POWER)


@dataclass(frozen=True, eq=False)
class WeightFunction:
    """
    Weight Theta, homogeneous of degree -q on C \\ {o}.

    radial-power: Theta(y) = |y|^-q;  height-power: Theta(y) = <y, v_frak>^-q.
    The kernel accepts any real q; solve and covolume routines call require_solver_range.
    """
    kind: str
    q: float
    cone: object

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"weight kind must be one of {KINDS}, got {self.kind!r}")
        object.__setattr__(self, "q", float(self.q))

    @property
    def solver_valid(self):
        n = self.cone.dim
        return n - 1 < self.q < n

    def require_solver_range(self):
        n = self.cone.dim
        if not self.solver_valid:
            raise InvalidExponent(f"q must lie in (n-1,n) = ({n - 1},{n}), got q={self.q}")

    def values(self, points):
        """Theta on rows of points (no domain checks)."""
        points = np.atleast_2d(points)
        if self.kind == RADIAL_POWER:
            base = np.linalg.norm(points, axis=1)
        else:
            base = self.cone.height(points)
        return base ** -self.q


def theta_eval(w, y):
    """
    Evaluate Theta at a single point of C \\ {o}.

    Raises:
        OriginArgument: y is the origin.
        OutsideCone: y violates a cone inequality beyond 1e-12 (relative).
    """
    y = np.asarray(y, dtype=float)
    if not np.any(y):
        raise OriginArgument("Theta is not defined at the origin")
    if not w.cone.contains(y, 1e-12):
        raise OutsideCone("Theta is only defined on the cone")
    return float(w.values(y[None, :])[0])


@dataclass(frozen=True)
class QuadratureConfig:
    """
    Adaptive quadrature settings.

    Attributes:
        tolerance (float): target relative tolerance.
        max_depth (int): maximum number of adaptive refinement levels.
        gauss_order (int): Gauss-Legendre points per panel for segments and arcs.
        workers (int): threads for per-facet evaluation (``pcmk_workers`` env var).
    """
    tolerance: float = 1e-10
    max_depth: int = 30
    gauss_order: int = 16
    workers: int = 1

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("quadrature tolerance must be positive")
        if self.max_depth < 1:
            raise ValueError("quadrature depth must be at least 1")
        if self.gauss_order < 2:
            raise ValueError("gauss order must be at least 2")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")

    @classmethod
    def for_dim(cls, dim, **overrides):
        defaults = {
            "tolerance": 1e-10 if dim == 2 else 1e-8,
            "max_depth": 30 if dim == 2 else 12,
            "workers": int(os.environ.get("pcmk_workers", "1")),
        }
        defaults.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**defaults)
