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
import json
import logging
from dataclasses import dataclass, field

import numpy as np

from ..cone import build_cone, quadrant_cone, pyramid_cone
from ..pseudocone import PseudoCone
from ..solver import DirectionalMeasure, SolverOptions
from ..system.errors import InputError, ProblemFileError
from ..system.info import problem_format_version
from ..weight import WeightFunction, QuadratureConfig, KINDS

logger = logging.getLogger("pcmk.ProblemFile")

PRESETS = {"q2": quadrant_cone, "o3": pyramid_cone}
SOLVER_KEYS = {"tolerance": float, "max_iter": int, "armijo": float, "backtrack": float,
               "jitter": float, "max_restarts": int, "seed": int, "polish_threshold": float,
               "fd_step": float}
QUADRATURE_KEYS = {"tolerance": float, "max_depth": int, "gauss_order": int, "workers": int}


def _vector(value, path, dim=None):
    try:
        arr = np.asarray(value, dtype=float)
    except (TypeError, ValueError):
        raise ProblemFileError(path, "expected a list of numbers") from None
    if arr.ndim != 1 or (dim is not None and len(arr) != dim):
        raise ProblemFileError(path, f"expected {dim if dim else 'a list of'} numbers")
    if not np.all(np.isfinite(arr)):
        raise ProblemFileError(path, "numbers must be finite")
    return arr


def _matrix(value, path, dim):
    if not isinstance(value, list) or not value:
        raise ProblemFileError(path, "expected a non-empty list of vectors")
    return np.array([_vector(row, f"{path}[{i}]", dim) for i, row in enumerate(value)])


def _number(value, path, kind=float):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ProblemFileError(path, "expected a number")
    if kind is int and int(value) != value:
        raise ProblemFileError(path, "expected an integer")
    return kind(value)


def _options(section, path, keys):
    if section is None:
        return {}
    if not isinstance(section, dict):
        raise ProblemFileError(path, "expected an object")
    unknown = set(section) - set(keys)
    if unknown:
        raise ProblemFileError(f"{path}.{sorted(unknown)[0]}", "unknown option")
    return {k: _number(v, f"{path}.{k}", keys[k]) for k, v in section.items()}


def parse_cone(node):
    if isinstance(node, str):
        node = {"preset": node}
    if not isinstance(node, dict):
        raise ProblemFileError("cone", "expected an object")
    try:
        if "preset" in node:
            name = node["preset"]
            if name not in PRESETS:
                raise ProblemFileError("cone.preset", f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
            return PRESETS[name]()
        if "dim" not in node:
            raise ProblemFileError("cone.dim", "missing")
        dim = _number(node["dim"], "cone.dim", int)
        if ("normals" in node) == ("rays" in node):
            raise ProblemFileError("cone", "give exactly one of 'normals' or 'rays'")
        key = "normals" if "normals" in node else "rays"
        rows = _matrix(node[key], f"cone.{key}", dim)
        v_frak = _vector(node["v_frak"], "cone.v_frak", dim) if node.get("v_frak") is not None else None
        if key == "normals":
            return build_cone(dim, facet_normals=rows, v_frak=v_frak)
        return build_cone(dim, rays=rows, v_frak=v_frak)
    except ProblemFileError:
        raise
    except (InputError, ValueError) as e:
        raise ProblemFileError("cone", str(e)) from e


def parse_weight(node, cone):
    if not isinstance(node, dict):
        raise ProblemFileError("weight", "expected an object")
    kind = node.get("kind")
    if kind not in KINDS:
        raise ProblemFileError("weight.kind", f"expected one of {list(KINDS)}")
    if "q" not in node:
        raise ProblemFileError("weight.q", "missing")
    return WeightFunction(kind, _number(node["q"], "weight.q"), cone)


def parse_measure(node, cone):
    if not isinstance(node, list) or not node:
        raise ProblemFileError("measure", "expected a non-empty list of atoms")
    dirs, masses = [], []
    for i, atom in enumerate(node):
        if not isinstance(atom, dict):
            raise ProblemFileError(f"measure[{i}]", "expected an object with 'direction' and 'mass'")
        u = _vector(atom.get("direction"), f"measure[{i}].direction", cone.dim)
        norm = np.linalg.norm(u)
        if norm == 0.0:
            raise ProblemFileError(f"measure[{i}].direction", "zero vector")
        dirs.append(u / norm)
        masses.append(_number(atom.get("mass"), f"measure[{i}].mass"))
    dirs = np.array(dirs)
    for i in range(len(dirs)):
        for j in range(i):
            if np.linalg.norm(dirs[i] - dirs[j]) <= 1e-9:
                raise ProblemFileError(f"measure[{i}].direction", f"repeats measure[{j}].direction")
    try:
        return DirectionalMeasure(cone, dirs, np.array(masses))
    except InputError as e:
        raise ProblemFileError("measure", str(e)) from e


def parse_body(node, cone):
    if not isinstance(node, dict):
        raise ProblemFileError("body", "expected an object")
    dirs = _matrix(node.get("directions"), "body.directions", cone.dim)
    h = _vector(node.get("support"), "body.support", len(dirs))
    try:
        return PseudoCone(cone, dirs / np.linalg.norm(dirs, axis=1)[:, None], h)
    except InputError as e:
        raise ProblemFileError("body", str(e)) from e


@dataclass
class ProblemFile:
    """
    Parsed problem document.

    Layout (JSON, "version": "1")::

        {"version": "1",
         "cone": {"dim": 2, "normals": [[0, -1], [-1, 0]], "v_frak": null} | {"preset": "q2"},
         "weight": {"kind": "height-power", "q": 1.5},
         "measure": [{"direction": [-0.7071, -0.7071], "mass": 1.0}],
         "body": {"directions": [[...]], "support": [...]},
         "solver": {"tolerance": 1e-8, "seed": 0},
         "quadrature": {"tolerance": 1e-10}}

    measure is needed by solve, body by evaluate; the rest is optional.
    """
    cone: object
    weight: WeightFunction
    measure: DirectionalMeasure = None
    body: PseudoCone = None
    solver: dict = field(default_factory=dict)
    quadrature: dict = field(default_factory=dict)
    source: dict = field(default_factory=dict, repr=False)

    @classmethod
    def parse(cls, data):
        if not isinstance(data, dict):
            raise ProblemFileError("<root>", "expected an object")
        if str(data.get("version")) != problem_format_version:
            raise ProblemFileError("version", f"expected {problem_format_version!r}, got {data.get('version')!r}")
        for key in ("cone", "weight"):
            if key not in data:
                raise ProblemFileError(key, "missing")
        cone = parse_cone(data["cone"])
        weight = parse_weight(data["weight"], cone)
        measure = parse_measure(data["measure"], cone) if data.get("measure") is not None else None
        body = parse_body(data["body"], cone) if data.get("body") is not None else None
        return cls(cone=cone, weight=weight, measure=measure, body=body,
                   solver=_options(data.get("solver"), "solver", SOLVER_KEYS),
                   quadrature=_options(data.get("quadrature"), "quadrature", QUADRATURE_KEYS),
                   source=data)

    @classmethod
    def load(cls, path):
        logger.info(f"loading problem from {path}")
        try:
            with open(path, "r", encoding="utf-8") as file:
                data = json.load(file)
        except FileNotFoundError:
            raise ProblemFileError("<file>", f"{path} not found") from None
        except json.JSONDecodeError as e:
            raise ProblemFileError(f"line {e.lineno}", e.msg) from None
        return cls.parse(data)

    def solver_options(self, **overrides):
        merged = dict(self.solver)
        merged.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return SolverOptions.for_dim(self.cone.dim, **merged)
        except ValueError as e:
            raise ProblemFileError("solver", str(e)) from e

    def quadrature_config(self, **overrides):
        merged = dict(self.quadrature)
        merged.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return QuadratureConfig.for_dim(self.cone.dim, **merged)
        except ValueError as e:
            raise ProblemFileError("quadrature", str(e)) from e
