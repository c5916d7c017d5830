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
import sys
import time
from dataclasses import dataclass, field, is_dataclass, fields

import numpy as np
import psutil

from ..system.errors import ProblemFileError
from ..system.info import version, problem_format_version

logger = logging.getLogger("pcmk.Report")


def plain(obj):
    """Convert numpy values, tuples and dataclasses to JSON-ready Python values."""
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return plain(obj.tolist())
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        value = float(obj)
        return value if np.isfinite(value) else str(value)
    if is_dataclass(obj):
        return {f.name: plain(getattr(obj, f.name)) for f in fields(obj) if f.repr}
    return obj


class Timing:
    """Wall time, process CPU time and resident memory over a block."""

    def __enter__(self):
        self.process = psutil.Process()
        self._wall = time.perf_counter()
        cpu = self.process.cpu_times()
        self._cpu = cpu.user + cpu.system
        return self

    def __exit__(self, *exc):
        cpu = self.process.cpu_times()
        self.result = {
            "wall_seconds": time.perf_counter() - self._wall,
            "cpu_seconds": cpu.user + cpu.system - self._cpu,
            "rss_bytes": self.process.memory_info().rss,
        }
        return False


@dataclass
class ReportFile:
    """
    Machine-readable command output.

    Keys are sorted and floats written in shortest round-trip form, so reading a report back
    gives the identical numbers; timing is left out with --no-timing.
    """
    command: str
    inputs: dict
    results: dict
    passed: bool = True
    seed: int = None
    timing: dict = None
    tool_version: str = version
    version: str = problem_format_version
    extra: dict = field(default_factory=dict)

    def to_dict(self):
        data = {
            "version": self.version,
            "tool_version": self.tool_version,
            "command": self.command,
            "seed": self.seed,
            "inputs": plain(self.inputs),
            "results": plain(self.results),
            "passed": bool(self.passed),
        }
        if self.timing is not None:
            data["timing"] = plain(self.timing)
        if self.extra:
            data.update(plain(self.extra))
        return data

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, allow_nan=False) + "\n"

    def dump(self, path=None):
        """Write to path, or to standard output when path is None."""
        text = self.to_json()
        if path is None:
            sys.stdout.write(text)
            return
        with open(path, "w", encoding="utf-8") as file:
            file.write(text)
        logger.info(f"report written to {path}")

    @classmethod
    def from_dict(cls, data):
        if str(data.get("version")) != problem_format_version:
            raise ProblemFileError("version", f"expected {problem_format_version!r}")
        known = {"version", "tool_version", "command", "seed", "inputs", "results", "passed", "timing"}
        for key in ("command", "inputs", "results"):
            if key not in data:
                raise ProblemFileError(key, "missing")
        return cls(command=data["command"], inputs=data["inputs"], results=data["results"],
                   passed=bool(data.get("passed", True)), seed=data.get("seed"),
                   timing=data.get("timing"), tool_version=data.get("tool_version", version),
                   version=str(data["version"]),
                   extra={k: v for k, v in data.items() if k not in known})

    @classmethod
    def load(cls, path):
        logger.info(f"loading report from {path}")
        try:
            with open(path, "r", encoding="utf-8") as file:
                data = json.load(file)
        except FileNotFoundError:
            raise ProblemFileError("<file>", f"{path} not found") from None
        except json.JSONDecodeError as e:
            raise ProblemFileError(f"line {e.lineno}", e.msg) from None
        return cls.from_dict(data)
