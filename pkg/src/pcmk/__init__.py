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
import os
import logging

from .cone import Cone, build_cone, quadrant_cone, pyramid_cone, delta_C, omega_alpha
from .pseudocone import (PseudoCone, FacetComplex, radial_function, support_function, tighten,
                         restrict, distance_from_origin)
from .truncation import TruncatedBody, truncate, hausdorff_distance
from .weight import WeightFunction, QuadratureConfig, RADIAL_POWER, HEIGHT_POWER
from .measures import (SurfaceMeasure, CovolumeResult, surface_measure, covolume_euler,
                       covolume_radial, covolume_gradient)
from .solver import DirectionalMeasure, SolverOptions, SolveReport, solve_minkowski, support_bound
from .system.errors import *
from .system.info import system_banner, version

try:
    os.environ["pcmk_log"]
except KeyError:
    os.environ["pcmk_log"] = "NO"

if os.environ["pcmk_log"] == "NO":
    logging.getLogger("pcmk").setLevel(logging.CRITICAL)

__url__ = "https://github.com/pcmk-dev/pcmk"
__copyright__ = "2026-present"
__license__ = "MIT"
__version__ = version
