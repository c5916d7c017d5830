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

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from ..quadrature import cross_section  # noqa: E402
from ..system.errors import UnsupportedDimension  # noqa: E402

logger = logging.getLogger("pcmk.Render")


def ordered_outline(vertices):
    """Vertices of a planar convex polygon in counter-clockwise order, closed."""
    center = vertices.mean(axis=0)
    angles = np.arctan2(vertices[:, 1] - center[1], vertices[:, 0] - center[0])
    ring = vertices[np.argsort(angles)]
    return np.vstack([ring, ring[:1]])


def render_pair_svg(cone, bodies, height, path):
    """
    Overlay the truncated bodies inside C^-(height) and write an SVG.

    Args:
        cone (Cone): a two-dimensional cone.
        bodies (dict[str, TruncatedBody]): label -> truncation; each outline gets the
            SVG id "boundary-<label>".
        height (float): the truncation height fixing the viewport.
    """
    if cone.dim != 2:
        raise UnsupportedDimension("SVG rendering is available for n = 2 only")
    corners = np.vstack([np.zeros(2), cross_section(cone, height)])
    lo, hi = corners.min(axis=0), corners.max(axis=0)
    pad = 0.05 * float(np.max(hi - lo))

    fig, ax = plt.subplots(figsize=(6, 6))
    try:
        section = cross_section(cone, height)
        for ray_end in section:
            ax.plot([0.0, ray_end[0]], [0.0, ray_end[1]], color="0.6", linestyle="--", linewidth=0.8)
        ax.plot(section[:, 0], section[:, 1], color="0.6", linestyle=":", linewidth=0.8)
        for (label, body), color in zip(bodies.items(), ("tab:blue", "tab:red", "tab:green")):
            outline = ordered_outline(body.vertices)
            ax.plot(outline[:, 0], outline[:, 1], color=color, linewidth=1.5, label=label,
                    gid=f"boundary-{label}")
        ax.set_xlim(lo[0] - pad, hi[0] + pad)
        ax.set_ylim(lo[1] - pad, hi[1] + pad)
        ax.set_aspect("equal")
        ax.legend(loc="upper right")
        fig.savefig(path, format="svg")
    finally:
        plt.close(fig)
    logger.info(f"SVG written to {path}")
