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

from .cone import delta_C_many
from .measures import surface_measure, covolume_euler, covolume_radial
from .pseudocone import PseudoCone, tighten, distance_from_origin
from .quadrature import ball_covolume_density
from .system.errors import (InvalidMeasure, NotConverged, SupportBoundViolation,
                            UnsupportedDimension)
from .system.sysfunc import as_unit_rows
from .weight import QuadratureConfig

logger = logging.getLogger("pcmk.Solver")


@dataclass(frozen=True, eq=False)
class DirectionalMeasure:
    """
    Finitely supported measure sum_i phi_i * delta(u_i) on the dual direction set.

    Raises InvalidMeasure on non-positive or non-finite masses, repeated directions, or
    directions outside the interior of the dual direction set.
    """
    cone: object
    directions: np.ndarray
    masses: np.ndarray

    def __post_init__(self):
        try:
            dirs = as_unit_rows(self.directions, "measure directions")
        except ValueError as e:
            raise InvalidMeasure(str(e)) from e
        masses = np.asarray(self.masses, dtype=float).reshape(-1)
        if dirs.shape[1] != self.cone.dim:
            raise InvalidMeasure(f"measure directions must have {self.cone.dim} coordinates")
        if len(masses) != len(dirs):
            raise InvalidMeasure("one mass per direction is required")
        if not np.all(np.isfinite(masses)) or np.any(masses <= 0.0):
            raise InvalidMeasure("masses must be finite and positive")
        if np.any(delta_C_many(self.cone, dirs) <= 0.0):
            raise InvalidMeasure("measure directions must lie in the interior of the dual direction set")
        for i in range(len(dirs)):
            if np.any(np.linalg.norm(dirs[i + 1:] - dirs[i], axis=1) <= 1e-9):
                raise InvalidMeasure(f"direction {i} is repeated")
        object.__setattr__(self, "directions", dirs)
        object.__setattr__(self, "masses", masses)

    @property
    def margin(self):
        """alpha = min_i delta_C(u_i) > 0."""
        return float(np.min(delta_C_many(self.cone, self.directions)))

    @property
    def total(self):
        return float(np.sum(self.masses))

    def __len__(self):
        return len(self.masses)

    def scaled(self, c):
        return DirectionalMeasure(self.cone, self.directions, self.masses * c)

    @classmethod
    def from_surface(cls, cone, measure):
        """Measure with the atoms of a SurfaceMeasure that carry positive mass."""
        keep = measure.masses > 0.0
        return cls(cone, measure.directions[keep], measure.masses[keep])


@dataclass
class SolverOptions:
    """
    Attributes:
        tolerance (float): target max relative residual |S_i - phi_i| / phi_i.
        max_iter (int): iteration budget over both phases and all restarts.
        armijo (float): sufficient-increase fraction.
        backtrack (float): step shrink factor.
        jitter (float): relative magnitude of the restart perturbation.
        max_restarts (int): restarts after a stalled run.
        seed (int): restart perturbations use default_rng(seed + restart).
        polish_threshold (float): residual below which Newton polishing takes over.
        fd_step (float): relative step of the finite-difference Jacobian.
    """
    tolerance: float = 1e-8
    max_iter: int = 2000
    armijo: float = 1e-4
    backtrack: float = 0.5
    jitter: float = 0.05
    max_restarts: int = 5
    seed: int = 0
    polish_threshold: float = 1e-2
    fd_step: float = 1e-6
    max_backtracks: int = 40

    def __post_init__(self):
        for name in ("tolerance", "armijo", "backtrack", "jitter", "polish_threshold", "fd_step"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if not self.tolerance < 1:
            raise ValueError("tolerance must be below 1")
        if not self.backtrack < 1:
            raise ValueError("backtrack factor must be below 1")
        if self.max_iter < 1 or self.max_restarts < 0 or self.max_backtracks < 1:
            raise ValueError("iteration limits must be positive")

    @classmethod
    def for_dim(cls, dim, **overrides):
        defaults = {
            "tolerance": 1e-8 if dim == 2 else 1e-6,
            "fd_step": 1e-6 if dim == 2 else 1e-4,
        }
        defaults.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**defaults)


@dataclass
class SolveReport:
    """
    Outcome of solve_minkowski. residuals are |S_i(K) - phi_i| / phi_i recomputed on the
    returned body; covolume holds both routes {"euler": ..., "radial": ...}.
    """
    solution: PseudoCone
    lam: float
    phi_trace: list
    residuals: np.ndarray
    b_of_K: float
    covolume: dict
    iterations: int
    converged: bool
    restarts: int = 0
    support_bound: float = float("nan")
    max_bound_ratio: float = 0.0
    measure: DirectionalMeasure = field(default=None, repr=False)

    @property
    def max_residual(self):
        return float(np.max(self.residuals))


def support_bound(cone, w, cfg=None):
    """
    c = (weighted measure of C ∩ B^n)^(-1/(n-q)).

    Every tightened body with V_Theta = 1 has absolute support values at most c, since
    C ∖ K contains C ∩ hbar B^n.
    """
    cfg = cfg if cfg is not None else QuadratureConfig.for_dim(cone.dim)
    density = ball_covolume_density(w, cfg)
    return density ** (-1.0 / (cone.dim - w.q))


def check_support_bound(pc, bound, rel=1e-9):
    """
    Assert hbar <= c on a body normalized to unit covolume; returns max hbar / c.

    Raises:
        SupportBoundViolation: some support number exceeds the bound.
    """
    ratio = float(np.max(pc.support_numbers)) / bound
    if ratio > 1.0 + rel:
        raise SupportBoundViolation(f"support number {ratio:.6g} times the bound {bound:.6g} at unit covolume")
    return ratio


def phi_functional(h, phi, w, cfg=None):
    """Phi(h) = V_Theta([h])^(-1/(n-q)) * sum_i h_i phi_i; homogeneous of degree 0."""
    h = np.asarray(h, dtype=float)
    cfg = cfg if cfg is not None else QuadratureConfig.for_dim(phi.cone.dim)
    pc = tighten(PseudoCone(phi.cone, phi.directions, h))
    volume = covolume_euler(pc, w, cfg).value
    return volume ** (-1.0 / (phi.cone.dim - w.q)) * float(h @ phi.masses)


@dataclass
class _Iterate:
    """Tightened body rescaled to the working covolume, with its measure and Phi there."""
    h: np.ndarray
    S: np.ndarray
    phi_value: float
    lam_hat: float
    gradient: np.ndarray
    residual: float


class _Problem:
    """
    Phi restricted to bodies of covolume volume_ref, the covolume of the first body seen.

    There Phi is h . phi / unit_factor with unit_factor = volume_ref^(1/(n-q)), and the
    iterates keep the size of the starting body for every q in (n-1, n).
    """

    def __init__(self, cone, w, phi, cfg, bound):
        self.cone = cone
        self.w = w
        self.phi = phi
        self.cfg = cfg
        self.bound = bound
        self.e = cone.dim - w.q
        self.d = cone.dim - 1 - w.q
        self.volume_ref = None
        self.unit_factor = 1.0
        self.max_bound_ratio = 0.0

    def measure(self, h):
        """Tightened support numbers and surface measure of [h] at its own scale."""
        pc = tighten(PseudoCone(self.cone, self.phi.directions, h, _checked=False))
        return pc, surface_measure(pc, self.w, self.cfg).masses

    def normalize(self, h):
        pc, S = self.measure(h)
        volume = float(pc.support_numbers @ S) / self.e
        if self.volume_ref is None:
            self.volume_ref = volume
            self.unit_factor = float(np.exp(np.log(volume) / self.e))
        t = (volume / self.volume_ref) ** (-1.0 / self.e)
        h0 = pc.support_numbers * t
        S0 = S * t ** self.d
        # the same body at unit covolume must respect the support bound
        self.max_bound_ratio = max(self.max_bound_ratio,
                                   check_support_bound(pc.scaled(t / self.unit_factor), self.bound))
        phi_value = float(h0 @ self.phi.masses)
        lam_hat = phi_value / (self.e * self.volume_ref)
        gradient = self.phi.masses - lam_hat * S0
        residual = float(np.max(np.abs(lam_hat * S0 - self.phi.masses) / self.phi.masses))
        return _Iterate(h0, S0, phi_value, lam_hat, gradient, residual)

    def true_phi(self, state):
        """Phi itself, undoing the working covolume."""
        return state.phi_value / self.unit_factor

    def residual_at(self, x):
        pc, S = self.measure(x)
        return pc, S, float(np.max(np.abs(S - self.phi.masses) / self.phi.masses))

    def phi_at(self, x, S):
        volume = float(x @ S) / self.e
        return volume ** (-1.0 / self.e) * float(x @ self.phi.masses)


def _ascent(problem, state, opts, budget, trace):
    """Barzilai-Borwein steps with Armijo backtracking; stops below the polish threshold."""
    iterations = 0
    prev = None
    while iterations < budget and state.residual > opts.polish_threshold:
        g = state.gradient
        gg = float(g @ g)
        if prev is None:
            tau = 0.1 * np.linalg.norm(state.h) / np.sqrt(gg)
        else:
            s = state.h - prev.h
            y = prev.gradient - g
            sy = float(s @ y)
            tau = float(s @ s) / sy if sy > 0 else 2.0 * tau
        tau = min(tau, 0.5 * np.linalg.norm(state.h) / np.sqrt(gg))

        accepted = None
        for _ in range(opts.max_backtracks):
            trial = state.h + tau * g
            if np.all(trial > 0.0):
                candidate = problem.normalize(trial)
                if candidate.phi_value >= state.phi_value + opts.armijo * tau * gg:
                    accepted = candidate
                    break
            tau *= opts.backtrack
        iterations += 1
        if accepted is None:
            logger.info(f"ascent stalled at residual {state.residual:.3e}")
            return state, iterations, True
        prev, state = state, accepted
        trace.append(problem.true_phi(state))
        logger.debug(f"ascent {len(trace)}: Phi={problem.true_phi(state)!r} residual={state.residual:.3e} step={tau:.3e}")
    return state, iterations, False


def _polish(problem, state, opts, budget, trace):
    """
    Newton iteration on S(x) = phi at the final scale with a central-difference Jacobian.

    Starts from lam_hat^(1/(n-1-q)) h, the rescaled ascent iterate.
    """
    target = opts.tolerance / 10.0
    x = state.lam_hat ** (1.0 / problem.d) * state.h
    pc, S, residual = problem.residual_at(x)
    x = pc.support_numbers
    phi_value = problem.phi_at(x, S)
    iterations = 0
    m = len(x)
    while residual > target and iterations < budget:
        iterations += 1
        J = np.empty((m, m))
        for j in range(m):
            step = opts.fd_step * x[j]
            up, down = x.copy(), x.copy()
            up[j] += step
            down[j] -= step
            J[:, j] = (problem.measure(up)[1] - problem.measure(down)[1]) / (2.0 * step)
        delta = np.linalg.lstsq(J, S - problem.phi.masses, rcond=None)[0]
        alpha = 1.0
        improved = False
        for _ in range(opts.max_backtracks):
            trial = x - alpha * delta
            if np.all(trial > 0.0):
                pc_t, S_t, res_t = problem.residual_at(trial)
                phi_t = problem.phi_at(pc_t.support_numbers, S_t)
                if res_t < residual and phi_t >= phi_value * (1.0 - 1e-9):
                    x, S, residual, phi_value = pc_t.support_numbers, S_t, res_t, phi_t
                    improved = True
                    break
            alpha *= 0.5
        if not improved:
            logger.info(f"newton polish stalled at residual {residual:.3e}")
            break
        trace.append(phi_value)
        logger.debug(f"newton {iterations}: residual={residual:.3e} damping={alpha}")
    return x, residual, iterations


def solve_minkowski(cone, w, phi, opts=None, cfg=None, raise_on_failure=False):
    """
    Find a C-pseudo-cone K whose Theta-weighted surface area measure is phi.

    The functional Phi is maximized over support vectors normalized to unit covolume by
    gradient ascent; once the stationarity residual is small a Newton iteration on
    S(K) = phi finishes. The body is returned as lambda^(1/(n-1-q)) K_0 where K_0 is the
    normalized maximizer and lambda = (1/(n-q)) sum_i hbar_i(K_0) phi_i.

    Args:
        cone (Cone): n in {2, 3}.
        w (WeightFunction): with n-1 < q < n.
        phi (DirectionalMeasure): the prescribed measure.
        opts (SolverOptions, optional): defaults per dimension.
        cfg (QuadratureConfig, optional): defaults per dimension.
        raise_on_failure (bool): raise NotConverged instead of returning the report.

    Raises:
        UnsupportedDimension, InvalidExponent, InvalidMeasure, NotConverged.
    """
    n = cone.dim
    if n not in (2, 3):
        raise UnsupportedDimension(f"the solver supports n in {{2, 3}}, got n={n}")
    w.require_solver_range()
    if phi.cone.dim != n:
        raise InvalidMeasure("measure and cone dimensions differ")
    opts = opts if opts is not None else SolverOptions.for_dim(n)
    cfg = cfg if cfg is not None else QuadratureConfig.for_dim(n)

    bound = support_bound(cone, w, cfg)
    problem = _Problem(cone, w, phi, cfg, bound)
    trace = []
    iterations = 0
    best_x, best_residual = None, np.inf
    h_start = np.ones(len(phi))
    restarts = 0

    for restart in range(opts.max_restarts + 1):
        restarts = restart
        if restart:
            rng = np.random.default_rng(opts.seed + restart)
            base = best_x if best_x is not None else np.ones(len(phi))
            h_start = base * np.maximum(1.0 + opts.jitter * rng.standard_normal(len(phi)), 0.1)
            logger.info(f"restart {restart} from best residual {best_residual:.3e}")
        state = problem.normalize(h_start)
        trace.append(problem.true_phi(state))
        state, used, stalled = _ascent(problem, state, opts, opts.max_iter - iterations, trace)
        iterations += used
        logger.info(f"polishing from residual {state.residual:.3e} after {iterations} iterations"
                    + (" (stalled)" if stalled else ""))
        x, residual, used = _polish(problem, state, opts, max(opts.max_iter - iterations, 1), trace)
        iterations += used
        if residual < best_residual:
            best_x, best_residual = x, residual
        if best_residual <= opts.tolerance or iterations >= opts.max_iter:
            break

    final = problem.normalize(best_x)
    # lambda belongs to the maximizer at unit covolume, final.h / unit_factor
    lam = final.phi_value / problem.unit_factor / problem.e
    solution = PseudoCone(cone, phi.directions, final.h * final.lam_hat ** (1.0 / problem.d),
                          tightened=True, _checked=True)
    measure = surface_measure(solution, w, cfg)
    residuals = np.abs(measure.masses - phi.masses) / phi.masses
    converged = bool(np.max(residuals) <= opts.tolerance)
    report = SolveReport(
        solution=solution,
        lam=lam,
        phi_trace=trace,
        residuals=residuals,
        b_of_K=distance_from_origin(solution),
        covolume={"euler": covolume_euler(solution, w, cfg, measure=measure).value,
                  "radial": covolume_radial(solution, w, cfg).value},
        iterations=iterations,
        converged=converged,
        restarts=restarts,
        support_bound=bound,
        max_bound_ratio=problem.max_bound_ratio,
        measure=phi,
    )
    if converged:
        logger.info(f"converged: residual {report.max_residual:.3e}, lambda {lam!r}, {iterations} iterations")
    else:
        logger.warning(f"not converged: residual {report.max_residual:.3e} after {iterations} iterations")
        if raise_on_failure:
            raise NotConverged(f"residual {report.max_residual:.3e} above tolerance {opts.tolerance:.1e}",
                               report=report)
    return report
