"""
Benchmark harness for the oil-paint engines.
"""

from .harness import (
    BenchRecord,
    BenchReport,
    Engine,
    ImprovementPair,
    improvement_pct,
    read_csv,
    run_sweep,
    run_thread_scaling,
    write_csv,
)
from .reference import reference_report

__all__ = [
    "BenchRecord",
    "BenchReport",
    "Engine",
    "ImprovementPair",
    "improvement_pct",
    "read_csv",
    "reference_report",
    "run_sweep",
    "run_thread_scaling",
    "write_csv",
]
