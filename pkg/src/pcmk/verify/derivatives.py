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

import numpy as np

from ..pseudocone import PseudoCone, radial_values
from ..system.errors import RidgeSample
from .montecarlo import sample_directions

logger = logging.getLogger("pcmk.Derivatives")


@dataclass(frozen=True, eq=False)
class LogFamily:
    """
    Wulff shapes [h_t] with h_t = h_0 exp(t f); exact exponentials, no remainder term.

    With linear=True the family is h_t = h_0 + t f instead, positive for |t| < delta.
    """
    base: PseudoCone
    f: np.ndarray
    linear: bool = False

    def __post_init__(self):
        f = np.asarray(self.f, dtype=float).reshape(-1)
        if len(f) != len(self.base):
            raise ValueError("one perturbation value per direction is required")
        object.__setattr__(self, "f", f)

    @property
    def delta(self):
        if not self.linear or not np.any(self.f):
            return np.inf
        return float(np.min(self.base.support_numbers[self.f != 0] / np.abs(self.f[self.f != 0])))

    def support(self, t):
        h0 = self.base.support_numbers
        return h0 + t * self.f if self.linear else h0 * np.exp(t * self.f)

    def body(self, t):
        return PseudoCone(self.base.cone, self.base.directions, self.support(t))

    def rho(self, t, v):
        return radial_values(self.body(t), v)

    def closed_form(self, v, idx, rho0):
        """d/dt log rho (log family) or d/dt rho (linear family) at t = 0."""
        if self.linear:
            return self.f[idx] * rho0 / self.base.support_numbers[idx]
        return self.f[idx]


@dataclass
class DerivativeReport:
    samples: int
    max_error: float
    errors: np.ndarray = field(repr=False)
    order: float
    lipschitz: float
    resampled: int
    step: float
    passed: bool


def _ridge_mask(family, v, t_max):
    _, a0 = family.rho(0.0, v)
    _, ap = family.rho(t_max, v)
    _, am = family.rho(-t_max, v)
    # second best ratio close to the best also marks the ridge
    pc = family.base
    ratios = pc.support_numbers[None, :] / -(v @ pc.directions.T)
    top2 = np.sort(ratios, axis=1)[:, -2:] if ratios.shape[1] > 1 else np.zeros((len(v), 2))
    near = (top2[:, 1] - top2[:, 0]) <= 1e-9 * top2[:, 1] if ratios.shape[1] > 1 else np.zeros(len(v), bool)
    return (a0 != ap) | (a0 != am) | near


def _derivative(family, v, s):
    rp, _ = family.rho(s, v)
    rm, _ = family.rho(-s, v)
    if family.linear:
        return (rp - rm) / (2.0 * s)
    return (np.log(rp) - np.log(rm)) / (2.0 * s)


def radial_derivative_check(family, samples, steps=(1e-4,), seed=0, rtol=1e-5,
                            order_steps=(1e-2, 5e-3)):
    """
    Compare central finite differences of the radial function along a family of Wulff
    shapes with the closed forms f(alpha(v)) and f(alpha(v)) rho / hbar(alpha(v)).

    Args:
        family (LogFamily): the perturbed family.
        samples (int | np.ndarray): direction count to draw, or explicit unit directions.
        steps (tuple[float]): finite-difference steps; errors are reported at steps[0].
        seed (int): seed for drawing and for replacing ridge samples.
        rtol (float): pass threshold on the relative error.
        order_steps (tuple[float, float]): step pair used to estimate the convergence order
            of log rho, nonlinear in t for the linear family.

    Ridge samples, whose radial Gauss map changes within the largest step, are replaced by
    fresh seeded draws and counted in the report.

    Raises:
        RidgeSample: replacements kept landing on the ridge set.
    """
    cone = family.base.cone
    reach = max(max(steps), max(order_steps))
    if family.linear:
        reach = min(reach, 0.5 * family.delta)
    if isinstance(samples, (int, np.integer)):
        v = sample_directions(cone, int(samples), seed)
    else:
        v = np.atleast_2d(np.asarray(samples, dtype=float))
        v = v / np.linalg.norm(v, axis=1)[:, None]
    count = len(v)

    resampled = 0
    bad = _ridge_mask(family, v, reach)
    attempt = 0
    while np.any(bad):
        attempt += 1
        if attempt > 20:
            raise RidgeSample(f"{int(bad.sum())} samples stay on the ridge set")
        fresh = sample_directions(cone, int(bad.sum()), seed + 7919 * attempt)
        v[bad] = fresh
        resampled += int(bad.sum())
        bad = _ridge_mask(family, v, reach)
    if resampled:
        logger.info(f"replaced {resampled} ridge samples")

    rho0, idx = family.rho(0.0, v)
    exact = family.closed_form(v, idx, rho0)
    scale = max(float(np.max(np.abs(exact))), 1e-300)
    step = steps[0]
    errors = np.abs(_derivative(family, v, step) - exact) / scale

    lipschitz = 0.0
    for s in steps:
        for t in (s, -s):
            rt, _ = family.rho(t, v)
            lipschitz = max(lipschitz, float(np.max(np.abs(rt - rho0) / s)))

    # convergence order of the log-radial derivative
    log_exact = exact / rho0 if family.linear else exact
    shrink = min(1.0, reach / max(order_steps))
    s1, s2 = (s * shrink for s in order_steps)

    def log_fd(s):
        rp, _ = family.rho(s, v)
        rm, _ = family.rho(-s, v)
        return (np.log(rp) - np.log(rm)) / (2.0 * s)

    e1 = np.abs(log_fd(s1) - log_exact)
    e2 = np.abs(log_fd(s2) - log_exact)
    usable = (e1 > 1e-11) & (e2 > 1e-13)
    order = float(np.median(np.log(e1[usable] / e2[usable]) / np.log(s1 / s2))) if np.any(usable) else float("nan")

    max_error = float(np.max(errors))
    report = DerivativeReport(samples=count, max_error=max_error, errors=errors, order=order,
                              lipschitz=lipschitz, resampled=resampled, step=step,
                              passed=bool(max_error <= rtol and np.isfinite(lipschitz)))
    logger.debug(f"radial derivative check: max error {max_error:.3e}, order {order:.3f}")
    return report
