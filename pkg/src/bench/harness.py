"""
Benchmark harness: size x radius sweeps of the sequential and parallel
engines, repetition statistics and the two-section CSV report.
"""

import io
import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import pandas as pd
from tqdm import tqdm

from config import get_settings
from data.synthetic import SyntheticImageGenerator
from filters.errors import ClockError, ParameterError
from filters.oil_paint import BorderPolicy, FilterParams, Image, apply_sequential
from filters.parallel import ParallelConfig, ParallelEngine

logger = logging.getLogger(__name__)

RECORD_COLUMNS = [
    "label", "width", "height", "radius", "levels", "engine",
    "reps", "median_ms", "min_ms", "max_ms",
]
PAIR_COLUMNS = ["label", "radius", "t1_ms", "t2_ms", "improvement_pct"]
CSV_FLOAT_FORMAT = "%.6f"

DEFAULT_SIZES = ["vga", "svga", "xga", "fhd", "wqxga"]
DEFAULT_RADII = [2, 4, 6, 8]
DEFAULT_THREAD_COUNTS = [1, 2, 4, 8]


class Engine(str, Enum):
    SEQUENTIAL = "sequential"
    PARALLEL = "parallel"


def improvement_pct(t1: float, t2: float) -> float:
    """Relative time saved by the second run: 100 * (t1 - t2) / t1."""
    if t1 <= 0:
        raise ParameterError(f"t1 must be positive, got {t1}")
    return 100.0 * (t1 - t2) / t1


def lower_median(values: Sequence[float]) -> float:
    ordered = sorted(values)
    return ordered[(len(ordered) - 1) // 2]


@dataclass
class BenchRecord:
    """One (size, radius, engine) measurement."""

    label: str
    width: int
    height: int
    radius: int
    intensity_levels: int
    engine: Engine
    times_ms: List[float] = field(default_factory=list)

    def __post_init__(self):
        self.engine = Engine(self.engine)
        if not self.times_ms:
            raise ParameterError(f"record {self.label} r={self.radius} has no timings")

    @property
    def reps(self) -> int:
        return len(self.times_ms)

    @property
    def median_ms(self) -> float:
        return lower_median(self.times_ms)

    @property
    def min_ms(self) -> float:
        return min(self.times_ms)

    @property
    def max_ms(self) -> float:
        return max(self.times_ms)

    def to_dict(self) -> Dict:
        return {
            "label": self.label,
            "width": self.width,
            "height": self.height,
            "radius": self.radius,
            "levels": self.intensity_levels,
            "engine": self.engine.value,
            "reps": self.reps,
            "median_ms": self.median_ms,
            "min_ms": self.min_ms,
            "max_ms": self.max_ms,
        }


@dataclass(frozen=True)
class ImprovementPair:
    """Sequential (t1) against parallel (t2) for one cell of a sweep."""

    label: str
    radius: int
    t1_ms: float
    t2_ms: float

    @property
    def improvement_pct(self) -> float:
        return improvement_pct(self.t1_ms, self.t2_ms)

    @property
    def speedup(self) -> float:
        return self.t1_ms / self.t2_ms if self.t2_ms > 0 else float("inf")

    def to_dict(self) -> Dict:
        return {
            "label": self.label,
            "radius": self.radius,
            "t1_ms": self.t1_ms,
            "t2_ms": self.t2_ms,
            "improvement_pct": self.improvement_pct,
        }


@dataclass
class BenchReport:
    records: List[BenchRecord] = field(default_factory=list)
    pairs: List[ImprovementPair] = field(default_factory=list)

    def mean_improvement(self) -> float:
        if not self.pairs:
            return 0.0
        return sum(p.improvement_pct for p in self.pairs) / len(self.pairs)

    def records_frame(self) -> pd.DataFrame:
        return pd.DataFrame([r.to_dict() for r in self.records], columns=RECORD_COLUMNS)

    def pairs_frame(self) -> pd.DataFrame:
        return pd.DataFrame([p.to_dict() for p in self.pairs], columns=PAIR_COLUMNS)

    def find(self, label: str, radius: int, engine: Engine) -> Optional[BenchRecord]:
        for record in self.records:
            if record.label == label and record.radius == radius and record.engine == Engine(engine):
                return record
        return None


def write_csv(report: BenchReport) -> bytes:
    """Records section, blank line, pairs section. Sweep order, '.' decimals."""
    buffer = io.StringIO()
    report.records_frame().to_csv(buffer, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
    buffer.write("\n")
    report.pairs_frame().to_csv(buffer, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
    return buffer.getvalue().encode("ascii")


def read_csv(data: bytes) -> Tuple[pd.DataFrame, pd.DataFrame]:
    """Parse ``write_csv`` output back into (records, pairs) frames."""
    text = data.decode("ascii")
    records_text, sep, pairs_text = text.partition("\n\n")
    if not sep:
        raise ParameterError("benchmark CSV is missing the blank line between sections")

    records = pd.read_csv(io.StringIO(records_text + "\n"), float_precision="round_trip")
    pairs = pd.read_csv(io.StringIO(pairs_text), float_precision="round_trip")
    return records, pairs


def _time_call(fn: Callable[[], Image]) -> float:
    start = time.perf_counter_ns()
    fn()
    elapsed = time.perf_counter_ns() - start
    if elapsed < 0:
        raise ClockError(f"monotonic clock went backwards by {-elapsed} ns")
    return elapsed / 1e6


def time_engine(fn: Callable[[], Image], reps: int, warmup: int) -> List[float]:
    """Warm-up calls, then ``reps`` timed calls; only ``fn`` is inside the clock."""
    for _ in range(warmup):
        fn()
    return [_time_call(fn) for _ in range(reps)]


def _check_sweep_args(reps: int, warmup: int):
    if reps < 1:
        raise ParameterError(f"reps must be >= 1, got {reps}")
    if warmup < 0:
        raise ParameterError(f"warmup must be >= 0, got {warmup}")


def run_sweep(
    sizes: Sequence[str] = tuple(DEFAULT_SIZES),
    radii: Sequence[int] = tuple(DEFAULT_RADII),
    levels: int = 20,
    reps: int = 5,
    cfg: Optional[ParallelConfig] = None,
    pattern: str = "noise",
    seed: int = 1,
    warmup: Optional[int] = None,
    progress: bool = False,
) -> BenchReport:
    """
    Time both engines over every (size, radius) cell.

    Each size's workload image is generated once. Per cell and engine:
    ``warmup`` untimed calls, then ``reps`` timed calls. Pairs compare the
    medians.
    """
    warmup = get_settings().warmup if warmup is None else warmup
    _check_sweep_args(reps, warmup)

    generator = SyntheticImageGenerator(seed=seed)
    workloads = [generator.workload(size, pattern) for size in sizes]

    cells = []
    for label, img in workloads:
        for radius in radii:
            params = FilterParams(radius, levels, BorderPolicy.ZERO_FILL)
            params.validate_for(img)
            cells.append((label, img, params))

    report = BenchReport()
    with ParallelEngine(cfg) as engine:
        logger.info(f"Sweeping {len(cells)} cells, reps={reps}, workers={engine.worker_count}")

        for label, img, params in tqdm(cells, desc="oil paint sweep", unit="cell", disable=not progress):
            seq_times = time_engine(lambda: apply_sequential(img, params), reps, warmup)
            par_times = time_engine(lambda: engine.apply(img, params), reps, warmup)

            seq = BenchRecord(label, img.width, img.height, params.radius, levels, Engine.SEQUENTIAL, seq_times)
            par = BenchRecord(label, img.width, img.height, params.radius, levels, Engine.PARALLEL, par_times)
            report.records.extend([seq, par])

            pair = ImprovementPair(label, params.radius, seq.median_ms, par.median_ms)
            report.pairs.append(pair)
            logger.info(
                f"{label} r={params.radius}: seq {seq.median_ms:.3f} ms, "
                f"par {par.median_ms:.3f} ms, improvement {pair.improvement_pct:.2f}%"
            )

    return report


def run_thread_scaling(
    size: str = "xga",
    radius: int = 8,
    thread_counts: Sequence[int] = tuple(DEFAULT_THREAD_COUNTS),
    levels: int = 20,
    reps: int = 5,
    min_rows_per_task: int = 4,
    pattern: str = "noise",
    seed: int = 1,
    warmup: Optional[int] = None,
) -> BenchReport:
    """
    One sequential baseline against the parallel engine at several worker
    counts. Parallel records and pairs are labelled ``<size>@<n>t``.
    """
    warmup = get_settings().warmup if warmup is None else warmup
    _check_sweep_args(reps, warmup)

    label, img = SyntheticImageGenerator(seed=seed).workload(size, pattern)
    params = FilterParams(radius, levels, BorderPolicy.ZERO_FILL)
    params.validate_for(img)

    seq_times = time_engine(lambda: apply_sequential(img, params), reps, warmup)
    baseline = BenchRecord(label, img.width, img.height, radius, levels, Engine.SEQUENTIAL, seq_times)
    report = BenchReport(records=[baseline])

    for count in thread_counts:
        cfg = ParallelConfig(worker_count=count, min_rows_per_task=min_rows_per_task)
        with ParallelEngine(cfg) as engine:
            par_times = time_engine(lambda: engine.apply(img, params), reps, warmup)

        cell = f"{label}@{count}t"
        record = BenchRecord(cell, img.width, img.height, radius, levels, Engine.PARALLEL, par_times)
        report.records.append(record)
        report.pairs.append(ImprovementPair(cell, radius, baseline.median_ms, record.median_ms))
        logger.info(f"{cell} r={radius}: {record.median_ms:.3f} ms (baseline {baseline.median_ms:.3f} ms)")

    return report
