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

from ..cone import delta_C_many
from ..pseudocone import PseudoCone, tighten

logger = logging.getLogger("pcmk.Fixtures")


def facet_size(points):
    """Length (n = 2) or area (n = 3) of a facet given by its ordered points."""
    if len(points) < 2:
        return 0.0
    if points.shape[1] == 2:
        return float(np.linalg.norm(points[-1] - points[0]))
    acc = np.zeros(3)
    for i in range(len(points)):
        acc += np.cross(points[i], points[(i + 1) % len(points)])
    return 0.5 * float(np.linalg.norm(acc))


def sample_dual_directions(cone, count, rng, margin=0.1, separation=1e-3):
    """Unit vectors u with delta_C(u) >= margin, pairwise at least separation apart."""
    found = []
    while len(found) < count:
        batch = rng.standard_normal((4096, cone.dim))
        batch /= np.linalg.norm(batch, axis=1)[:, None]
        batch = batch[delta_C_many(cone, batch) >= margin]
        for u in batch:
            if all(np.linalg.norm(u - v) > separation for v in found):
                found.append(u)
                if len(found) == count:
                    break
    return np.array(found)


def random_tight_fixture(cone, m, seed, margin=0.1, min_fraction=1e-3):
    """
    Reproducible random tightened pseudo-cone with nondegenerate facets.

    m directions are drawn with delta_C >= margin and support numbers uniform in
    [0.5, 1.5]. Directions whose facet is empty or smaller than min_fraction of the
    mean facet size are dropped and the body re-tightened until every facet is kept,
    so the result may carry fewer than m directions.
    """
    rng = np.random.default_rng(seed)
    dirs = sample_dual_directions(cone, m, rng, margin)
    h = rng.uniform(0.5, 1.5, size=m)
    while True:
        pc = tighten(PseudoCone(cone, dirs, h))
        sizes = np.array([facet_size(f.points) for f in pc.facets.facets])
        keep = sizes > min_fraction * sizes[sizes > 0].mean()
        if np.all(keep):
            logger.debug(f"fixture seed={seed}: {len(pc)} of {m} directions kept")
            return pc
        dirs, h = dirs[keep], pc.support_numbers[keep]
