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

import numpy as np

from ..measures import surface_measure, covolume_euler
from ..pseudocone import tighten
from ..solver import DirectionalMeasure, solve_minkowski, support_bound
from ..verify import (mc_surface_measure, mc_covolume, covolume_gradient_check, continuity_check,
                      restriction_check, radial_derivative_check, LogFamily, random_tight_fixture)

logger = logging.getLogger("pcmk.Suites")

SUITES = ("mc", "gradient", "continuity", "lemma71", "lemma72", "bound", "restriction", "derivative")


def suite_body(problem, seed):
    """The problem's body, tightened, or a seeded random fixture when none is given."""
    if problem.body is not None:
        return tighten(problem.body)
    m = 8 if problem.cone.dim == 2 else 6
    return random_tight_fixture(problem.cone, m, seed)


def run_mc(problem, body, cfg, opts, seed, samples):
    w = problem.weight
    S = surface_measure(body, w, cfg).masses
    V = covolume_euler(body, w, cfg).value
    estimates = mc_surface_measure(body, w, samples, seed, workers=cfg.workers)
    cov = mc_covolume(body, w, samples, seed + 1, workers=cfg.workers)
    checks = [{"direction": i, "quadrature": S[i], "estimate": e.estimate, "stderr": e.stderr,
               "hits": e.hits, "passed": e.within(S[i])} for i, e in enumerate(estimates)]
    cov_check = {"quadrature": V, "estimate": cov.estimate, "stderr": cov.stderr,
                 "tail_bound": cov.tail_bound,
                 "passed": abs(cov.estimate - V) <= 3.0 * cov.stderr + cov.tail_bound}
    passed = all(c["passed"] for c in checks) and cov_check["passed"]
    return {"surface": checks, "covolume": cov_check, "samples": samples, "passed": passed}


def run_gradient(problem, body, cfg, opts, seed, samples):
    report = covolume_gradient_check(body, problem.weight, cfg=cfg)
    return {"gradient": report.gradient, "finite_difference": report.finite_difference,
            "relative_errors": report.relative_errors, "passed": report.passed}


def run_continuity(problem, body, cfg, opts, seed, samples):
    report = continuity_check(body, problem.weight, seed=seed, cfg=cfg)
    return {"epsilons": report.epsilons, "wulff": report.wulff, "restriction": report.restriction,
            "measure": report.measure, "passed": report.passed}


def run_bound(problem, body, cfg, opts, seed, samples):
    w = problem.weight
    if problem.measure is not None:
        phi = problem.measure
    else:
        phi = DirectionalMeasure.from_surface(problem.cone, surface_measure(body, w, cfg))
    report = solve_minkowski(problem.cone, w, phi, opts, cfg)
    bound = support_bound(problem.cone, w, cfg)
    return {"bound": bound, "max_ratio": report.max_bound_ratio, "converged": report.converged,
            "iterations": report.iterations,
            "passed": bool(report.converged and report.max_bound_ratio <= 1.0 + 1e-9)}


def run_restriction(problem, body, cfg, opts, seed, samples, margin=1e-3):
    omega = (0,)
    beta = {0} | body.facets.neighbours(0)
    angles = np.arccos(np.clip(body.directions @ body.directions[0], -1.0, 1.0))
    beta |= set(int(j) for j in np.flatnonzero(angles < margin))
    report = restriction_check(body, omega, sorted(beta), margin)
    return {"omega": report.omega, "beta": report.beta, "max_deviation": report.max_deviation,
            "contained": report.contained, "passed": report.matched and report.contained}


def run_derivative(problem, body, cfg, opts, seed, samples):
    rng = np.random.default_rng(seed)
    f = rng.standard_normal(len(body))
    count = int(min(max(samples, 100), 2000))
    results = {}
    for name, linear in (("log", False), ("linear", True)):
        report = radial_derivative_check(LogFamily(body, f, linear=linear), count, seed=seed)
        results[name] = {"max_error": report.max_error, "order": report.order,
                         "lipschitz": report.lipschitz, "resampled": report.resampled,
                         "passed": report.passed}
    results["samples"] = count
    results["passed"] = all(r["passed"] for r in results.values() if isinstance(r, dict))
    return results


RUNNERS = {
    "mc": run_mc,
    "gradient": run_gradient,
    "continuity": run_continuity,
    "lemma71": run_bound,
    "lemma72": run_restriction,
    "bound": run_bound,
    "restriction": run_restriction,
    "derivative": run_derivative,
}


def run_suite(name, problem, cfg, opts, seed, samples):
    body = suite_body(problem, seed)
    logger.info(f"running suite {name} on {len(body)} directions")
    result = RUNNERS[name](problem, body, cfg, opts, seed, samples)
    result["body"] = {"directions": body.directions, "support": body.support_numbers}
    return result
