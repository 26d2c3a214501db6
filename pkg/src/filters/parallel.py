"""
Data-parallel oil-paint engine.

Interior rows are cut into contiguous bands and handed to a thread pool.
``filter_rows`` releases the GIL, so bands run concurrently; each band
reads the shared input and writes only its own output rows.
"""

import logging
import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np

from config import get_settings, resolve_worker_count

from .errors import ParameterError, WorkerPoolError
from .oil_paint import FilterParams, Image, check_image, filter_rows, output_buffer

logger = logging.getLogger(__name__)

Band = Tuple[int, int]

# bands per worker; more than one lets fast workers pick up slack
TASKS_PER_WORKER = 4


@dataclass(frozen=True)
class ParallelConfig:
    """Scheduling knobs. ``worker_count=None`` means Auto."""

    worker_count: Optional[int] = None
    min_rows_per_task: int = 4

    def __post_init__(self):
        for name in ("worker_count", "min_rows_per_task"):
            value = getattr(self, name)
            if name == "worker_count" and value is None:
                continue
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise ParameterError(f"{name} must be an integer, got {value!r}")
        if self.worker_count is not None and self.worker_count < 1:
            raise ParameterError(f"worker_count must be >= 1, got {self.worker_count}")
        if self.min_rows_per_task < 1:
            raise ParameterError(f"min_rows_per_task must be >= 1, got {self.min_rows_per_task}")

    @classmethod
    def from_settings(cls, worker_count: Optional[int] = None) -> "ParallelConfig":
        return cls(worker_count=worker_count, min_rows_per_task=get_settings().min_rows_per_task)

    def resolved_workers(self) -> int:
        return resolve_worker_count(self.worker_count)


def plan_row_bands(row_start: int, row_end: int, worker_count: int, min_rows_per_task: int) -> List[Band]:
    """Split [row_start, row_end) into disjoint contiguous bands."""
    rows = row_end - row_start
    if rows <= 0:
        return []

    chunk = max(min_rows_per_task, math.ceil(rows / (TASKS_PER_WORKER * worker_count)))
    return [(start, min(start + chunk, row_end)) for start in range(row_start, row_end, chunk)]


class ParallelEngine:
    """
    Owns a worker pool and applies the filter band by band.

    Usable as a context manager; reuse one engine across calls to keep pool
    start-up out of timings. Concurrent ``apply`` calls are allowed and
    simply share the pool.
    """

    def __init__(self, config: Optional[ParallelConfig] = None):
        self.config = config or ParallelConfig()
        self.worker_count = self.config.resolved_workers()
        self._executor: Optional[ThreadPoolExecutor] = None
        self._lock = threading.Lock()

    def __enter__(self) -> "ParallelEngine":
        return self

    def __exit__(self, exc_type, exc, tb):
        self.close()

    def _pool(self) -> ThreadPoolExecutor:
        with self._lock:
            if self._executor is None:
                try:
                    self._executor = ThreadPoolExecutor(
                        max_workers=self.worker_count,
                        thread_name_prefix="oilpaint",
                    )
                except (RuntimeError, OSError, ValueError) as e:
                    logger.error(f"Failed to start worker pool with {self.worker_count} workers: {e}")
                    raise WorkerPoolError(f"cannot start {self.worker_count} workers: {e}") from e
                logger.info(f"Started oil paint worker pool with {self.worker_count} workers")
            return self._executor

    def close(self):
        with self._lock:
            if self._executor is not None:
                self._executor.shutdown(wait=True)
                self._executor = None

    def map_bands(self, fn: Callable[[int, int], None], bands: List[Band]):
        """Run ``fn(start, end)`` for every band and wait for all of them."""
        if self.worker_count == 1 or len(bands) <= 1:
            for start, end in bands:
                fn(start, end)
            return

        try:
            futures = [self._pool().submit(fn, start, end) for start, end in bands]
        except RuntimeError as e:
            # submit after shutdown
            raise WorkerPoolError(f"worker pool unavailable: {e}") from e

        for future in futures:
            future.result()

    def apply(self, img: Image, params: FilterParams) -> Image:
        check_image(img)
        params.validate_for(img)

        src = img.pixels
        dst = output_buffer(img, params.border_policy)
        row_start, row_end = params.interior_rows(img)
        bands = plan_row_bands(row_start, row_end, self.worker_count, self.config.min_rows_per_task)

        levels = params.intensity_levels
        radius = params.radius

        def run_band(start: int, end: int):
            filter_rows(src, dst, levels, radius, start, end)

        self.map_bands(run_band, bands)

        logger.debug(
            f"Parallel oil paint on {img.width}x{img.height}: {len(bands)} bands "
            f"over {self.worker_count} workers"
        )
        return Image.from_array(dst, copy=False)


def apply_parallel(img: Image, params: FilterParams, cfg: Optional[ParallelConfig] = None) -> Image:
    """One-shot parallel filter; the pool lives for this call only."""
    with ParallelEngine(cfg) as engine:
        return engine.apply(img, params)
