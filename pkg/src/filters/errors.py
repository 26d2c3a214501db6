"""
Exception types shared by the filter engines, codecs and harness.
"""

from typing import Optional


class OilBenchError(Exception):
    """Base class for every error raised by oilbench."""


class ParameterError(OilBenchError, ValueError):
    """Invalid filter, generator or benchmark parameters."""


class InputError(OilBenchError, ValueError):
    """Malformed input data, e.g. a pixel buffer of the wrong length."""


class ImageParseError(InputError):
    """A raster file could not be decoded.

    ``field`` names the header field or section that failed
    ("magic", "width", "height", "maxval", "dimensions", "payload", ...).
    """

    def __init__(self, field: str, message: str, path: Optional[str] = None):
        self.field = field
        self.message = message
        self.path = path
        location = f"{path}: " if path else ""
        super().__init__(f"{location}{field}: {message}")


class WorkerPoolError(OilBenchError, RuntimeError):
    """The parallel engine could not start or use its worker pool."""


class ContractViolation(OilBenchError, RuntimeError):
    """A caller broke a documented precondition."""


class ClockError(OilBenchError, RuntimeError):
    """The timing clock misbehaved (e.g. went backwards)."""
