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

from ..pseudocone import tighten, restrict, length_tolerance
from ..system.errors import MarginViolation, EmptySubset

logger = logging.getLogger("pcmk.Restriction")


@dataclass
class RestrictionReport:
    omega: tuple
    beta: tuple
    deviations: dict
    max_deviation: float
    matched: bool
    contained: bool = True


def _vertex_distance(a, b):
    if len(a) == 0 and len(b) == 0:
        return 0.0
    if len(a) != len(b):
        return np.inf
    gaps = np.linalg.norm(a[:, None, :] - b[None, :, :], axis=2)
    return float(max(gaps.min(axis=1).max(), gaps.min(axis=0).max()))


def restriction_check(pc, omega, beta, margin=1e-3):
    """
    Facets in the directions of omega coincide for K and its restriction K^(beta).

    contained reports K ⊆ K^(beta), checked on the vertices of K since K^(beta) + C = K^(beta).

    omega must sit strictly inside beta: omega is a subset of beta, every facet
    neighbour of an omega facet belongs to beta, and every direction outside beta is at
    least margin radians away from omega.

    Raises:
        EmptySubset: omega is empty.
        MarginViolation: omega is not strictly inside beta.
    """
    omega = tuple(sorted(set(int(i) for i in omega)))
    beta = tuple(sorted(set(int(i) for i in beta)))
    if not omega:
        raise EmptySubset("omega must contain a direction")
    missing = set(omega) - set(beta)
    if missing:
        raise MarginViolation(f"directions {sorted(missing)} of omega are not in beta")
    tight = tighten(pc)
    for i in omega:
        outside = tight.facets.neighbours(i) - set(beta)
        if outside:
            raise MarginViolation(f"facet {i} borders facets {sorted(outside)} outside beta")
    excluded = [j for j in range(len(pc)) if j not in beta]
    if excluded:
        cosines = np.clip(tight.directions[list(omega)] @ tight.directions[excluded].T, -1.0, 1.0)
        gap = float(np.min(np.arccos(cosines)))
        if gap < margin:
            raise MarginViolation(f"excluded direction within {gap:.3e} rad of omega (margin {margin})")

    restricted = restrict(pc, beta)
    deviations = {}
    for i in omega:
        mine = tight.facets.facets[i].points
        theirs = restricted.facets.facets[beta.index(i)].points
        deviations[i] = _vertex_distance(mine, theirs)
    worst = max(deviations.values())
    tol = length_tolerance(tight)
    A, b = restricted.halfspaces()
    contained = bool(np.all(tight.facets.vertices @ A.T <= b + tol))
    report = RestrictionReport(omega=omega, beta=beta, deviations=deviations, max_deviation=worst,
                               matched=bool(worst <= tol), contained=contained)
    logger.debug(f"restriction check omega={omega} beta={beta}: deviation {worst:.3e}")
    return report
