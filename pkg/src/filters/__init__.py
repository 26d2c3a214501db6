"""
Oil-paint filter engines.
"""

from .errors import (
    ClockError,
    ContractViolation,
    ImageParseError,
    InputError,
    OilBenchError,
    ParameterError,
    WorkerPoolError,
)
from .oil_paint import (
    BorderPolicy,
    FilterParams,
    HistogramAccumulator,
    Image,
    apply_sequential,
    filter_pixel,
    intensity_bin,
    select_max_bin,
)
from .parallel import ParallelConfig, ParallelEngine, apply_parallel, plan_row_bands

__all__ = [
    "BorderPolicy",
    "ClockError",
    "ContractViolation",
    "FilterParams",
    "HistogramAccumulator",
    "Image",
    "ImageParseError",
    "InputError",
    "OilBenchError",
    "ParallelConfig",
    "ParallelEngine",
    "ParameterError",
    "WorkerPoolError",
    "apply_parallel",
    "apply_sequential",
    "filter_pixel",
    "intensity_bin",
    "plan_row_bands",
    "select_max_bin",
]
