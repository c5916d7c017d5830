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

class PcmkError(Exception):
    """Base class of every error raised by pcmk."""


class InputError(PcmkError, ValueError):
    """Invalid user input. Also a ValueError so plain callers can catch it."""


# cone geometry
class NotPointed(InputError):
    pass

class NotFullDimensional(InputError):
    pass

class BadVFrak(InputError):
    pass

class InvalidPseudoCone(InputError):
    pass

class OutsideDomain(InputError):
    pass

class OutsideDualInterior(InputError):
    pass

class UnsupportedDimension(InputError):
    pass

class EmptySubset(InputError):
    pass

class EmptyTruncation(InputError):
    pass

# weight kernel / quadrature
class OutsideCone(InputError):
    pass

class OriginArgument(InputError):
    pass

class SegmentThroughOrigin(InputError):
    pass

class DegeneratePolygon(InputError):
    pass

class InvalidExponent(InputError):
    pass

class ToleranceNotMet(PcmkError):
    def __init__(self, message, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error

# measures / solver
class NotTightened(InputError):
    pass

class InvalidMeasure(InputError):
    pass

class NotConverged(PcmkError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report

class SupportBoundViolation(PcmkError):
    pass

# oracles
class RootBracketFailure(PcmkError):
    pass

class MarginViolation(InputError):
    pass

class RidgeSample(PcmkError):
    pass

# cli
class ProblemFileError(InputError):
    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field
