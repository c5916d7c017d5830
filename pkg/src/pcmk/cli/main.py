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
import sys

import numpy as np

from ..cone import quadrant_cone, pyramid_cone
from ..measures import surface_measure, covolume_euler, covolume_radial
from .. import pseudocone
from ..solver import solve_minkowski
from ..system.errors import PcmkError, InputError, NotConverged, NotTightened
from ..system.info import system_banner
from ..truncation import truncate, truncate_polyhedron
from ..verify import nonuniqueness_pair
from ..weight import WeightFunction, QuadratureConfig, KINDS
from .handler import CommandHandler
from .problemfile import ProblemFile
from .render import render_pair_svg
from .report import ReportFile, Timing
from .suites import SUITES, run_suite

logger = logging.getLogger("pcmk.CLI")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_CONVERGED = 3
EXIT_VERIFY = 4

cli = CommandHandler(prog="pcmk", description=system_banner)


def _facets(pc):
    return [{"direction": pc.directions[f.index], "points": f.points} for f in pc.facets.facets]


def _finish(report, out, no_timing, timing):
    if not no_timing:
        report.timing = timing.result
    report.dump(out)


@cli.command(category="Problems")
def solve(problem, out: str = None, seed: int = None, tolerance: float = None, no_timing: bool = False):
    """
    Solve the weighted Minkowski problem for the measure in a problem file.

    Exit 0 on convergence, 3 when the residual stays above the tolerance (the report is
    still written), 2 on invalid input.
    """
    prob = ProblemFile.load(problem)
    if prob.measure is None:
        raise InputError("measure: missing; solve needs a measure")
    opts = prob.solver_options(seed=seed, tolerance=tolerance)
    cfg = prob.quadrature_config()
    with Timing() as timing:
        result = solve_minkowski(prob.cone, prob.weight, prob.measure, opts, cfg)
    K = result.solution
    report = ReportFile(
        command="solve",
        inputs=prob.source,
        seed=opts.seed,
        passed=result.converged,
        results={
            "converged": result.converged,
            "directions": K.directions,
            "support": K.support_numbers,
            "facets": _facets(K),
            "lambda": result.lam,
            "residuals": result.residuals,
            "max_residual": result.max_residual,
            "covolume": result.covolume,
            "b_of_K": result.b_of_K,
            "iterations": result.iterations,
            "restarts": result.restarts,
            "support_bound": result.support_bound,
            "max_bound_ratio": result.max_bound_ratio,
            "phi_trace": result.phi_trace,
            "tolerance": opts.tolerance,
        },
    )
    _finish(report, out, no_timing, timing)
    return EXIT_OK if result.converged else EXIT_NOT_CONVERGED


@cli.command(category="Problems")
def evaluate(problem, out: str = None, tolerance: float = None, tighten: bool = False,
             no_timing: bool = False):
    """
    Weighted surface area measure and covolume (both routes) of the body in a problem file.

    A slack body is only passed to the Euler covolume with --tighten; the radial route
    is always reported.
    """
    prob = ProblemFile.load(problem)
    if prob.body is None:
        raise InputError("body: missing; evaluate needs support numbers")
    cfg = prob.quadrature_config(tolerance=tolerance)
    w = prob.weight
    w.require_solver_range()
    messages = []
    with Timing() as timing:
        tight = pseudocone.tighten(prob.body)
        slack = not np.allclose(tight.support_numbers, prob.body.support_numbers, rtol=1e-12, atol=0.0)
        body = tight if (tighten or not slack) else prob.body
        S = surface_measure(tight, w, cfg)
        try:
            euler = covolume_euler(body, w, cfg, measure=S).value
        except NotTightened as e:
            euler = None
            messages.append(f"{e}; pass --tighten to tighten the slack support numbers")
        radial = covolume_radial(tight, w, cfg).value
    report = ReportFile(
        command="evaluate",
        inputs=prob.source,
        results={
            "directions": tight.directions,
            "support": body.support_numbers,
            "tightened_support": tight.support_numbers,
            "slack": slack,
            "surface_measure": S.masses,
            "facets": _facets(tight),
            "covolume": {"euler": euler, "radial": radial},
            "b_of_K": pseudocone.distance_from_origin(tight),
            "messages": messages,
        },
    )
    for message in messages:
        print(f"pcmk: {message}", file=sys.stderr)
    _finish(report, out, no_timing, timing)
    return EXIT_OK


@cli.command(category="Verification", choices={"suite": SUITES})
def verify(problem, suite: str = "mc", seed: int = 0, samples: int = 200000, out: str = None,
           tolerance: float = None, no_timing: bool = False):
    """
    Run an oracle suite (mc, gradient, continuity, lemma71, lemma72, derivative) on the
    body of a problem file, or on a seeded random fixture when it has none. bound and
    restriction are other names for lemma71 and lemma72.

    Exit 0 when every check passes, 4 otherwise.
    """
    prob = ProblemFile.load(problem)
    cfg = prob.quadrature_config(tolerance=tolerance)
    opts = prob.solver_options(seed=seed)
    with Timing() as timing:
        result = run_suite(suite, prob, cfg, opts, seed, samples)
    report = ReportFile(command="verify", inputs=prob.source, seed=seed, passed=result["passed"],
                        results={"suite": suite, **result})
    _finish(report, out, no_timing, timing)
    return EXIT_OK if result["passed"] else EXIT_VERIFY


@cli.command(category="Verification", name="demo-nonuniqueness",
             choices={"cone": ("q2", "o3"), "kind": KINDS})
def demo_nonuniqueness(cone: str = "q2", kind: str = "height-power", q: float = None,
                       out: str = None, report: str = None, no_timing: bool = False):
    """
    Build two different pseudo-cones with the same weighted surface area measure.

    For n = 2 the boundaries inside C^-(2 t0) are drawn to the SVG file given by --out.
    The JSON report goes to --report, or to standard output. Exit 4 if the equal-measure
    verification fails.
    """
    C = quadrant_cone() if cone == "q2" else pyramid_cone()
    w = WeightFunction(kind, q if q is not None else C.dim - 0.5, C)
    cfg = QuadratureConfig.for_dim(C.dim)
    with Timing() as timing:
        K, L, check = nonuniqueness_pair(C, w, cfg)
        T = check.truncation_height
        A, b = L.halfspaces()
        body_K, body_L = truncate(K, T), truncate_polyhedron(A, b, C.v_frak, T)
    if out is not None:
        if C.dim == 2:
            render_pair_svg(C, {"K": body_K, "L": body_L}, T, out)
        else:
            logger.warning("SVG output is only drawn for n = 2")
    result = ReportFile(
        command="demo-nonuniqueness",
        inputs={"cone": cone, "weight": {"kind": kind, "q": w.q}},
        passed=check.passed,
        results={
            "t0": check.t0,
            "t1": check.t1,
            "shrink": check.shrink,
            "mass_K": check.mass_K,
            "mass_L": check.mass_L,
            "hausdorff": check.hausdorff,
            "truncation_height": T,
            "K": {"support": K.support_numbers, "vertices": body_K.vertices},
            "L": {"apex": L.apex, "base": L.base, "vertices": body_L.vertices},
            "svg": out if (out is not None and C.dim == 2) else None,
        },
    )
    _finish(result, report, no_timing, timing)
    return EXIT_OK if check.passed else EXIT_VERIFY


def exit_code(error, command):
    """Exit status for a pcmk error raised while running command."""
    if isinstance(error, InputError):
        return EXIT_INPUT
    if isinstance(error, NotConverged) or command == "solve":
        return EXIT_NOT_CONVERGED
    return EXIT_VERIFY


def main(argv=None):
    args = cli.parse(argv)
    if args.verbose:
        logging.basicConfig(format="[{asctime}] [{levelname}] {name}: {message}", style="{",
                            level=logging.INFO)
        logging.getLogger("pcmk").setLevel(logging.INFO)
    try:
        code = cli.dispatch(args)
    except PcmkError as e:
        code = exit_code(e, args.command)
        logger.error(f"{args.command} failed with {type(e).__name__}: {e}")
        print(f"pcmk: error: {e}", file=sys.stderr)
        return code
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
