"""
Published single-run timings (milliseconds) of the oil-paint filter on a
4-core/8-thread Core i7-3630QM, sequential (T1) and parallel (T2).

The intensity level used for these runs was never stated; ``reference_report``
tags the records with the level it is given.
"""

from typing import List, Tuple

from .harness import BenchRecord, BenchReport, Engine, ImprovementPair

# (label, width, height, radius, t1_ms, t2_ms)
PUBLISHED_TIMINGS: List[Tuple[str, int, int, int, int, int]] = [
    ("VGA", 640, 480, 2, 218, 94),
    ("VGA", 640, 480, 4, 531, 156),
    ("VGA", 640, 480, 6, 1046, 281),
    ("VGA", 640, 480, 8, 1685, 483),
    ("SVGA", 800, 600, 2, 297, 78),
    ("SVGA", 800, 600, 4, 826, 234),
    ("SVGA", 800, 600, 6, 1606, 452),
    ("SVGA", 800, 600, 8, 2652, 734),
    ("XGA", 1024, 768, 2, 499, 140),
    ("XGA", 1024, 768, 4, 1326, 375),
    ("XGA", 1024, 768, 6, 2621, 733),
    ("XGA", 1024, 768, 8, 4383, 1248),
    ("FHD", 1920, 1080, 2, 1466, 343),
    ("FHD", 1920, 1080, 4, 3526, 967),
    ("FHD", 1920, 1080, 6, 7020, 1935),
    ("FHD", 1920, 1080, 8, 11716, 3261),
    ("WQXGA", 2560, 1600, 2, 2559, 686),
    ("WQXGA", 2560, 1600, 4, 6973, 1872),
    ("WQXGA", 2560, 1600, 6, 14008, 3915),
    ("WQXGA", 2560, 1600, 8, 23229, 6490),
]

# Improvement column as printed alongside the timings
PUBLISHED_IMPROVEMENT_PCT: List[float] = [
    56.88073394, 70.62146893, 73.13575526, 71.33531157,
    73.73737374, 71.67070218, 71.85554172, 72.32277526,
    71.94388778, 71.71945701, 72.03357497, 71.52635181,
    76.60300136, 72.57515598, 72.43589744, 72.16626835,
    73.19265338, 73.15359243, 72.05168475, 72.06078609,
]

PUBLISHED_MEAN_IMPROVEMENT_PCT = 71.6


def reference_report(levels: int = 20) -> BenchReport:
    """The published tables as a single-repetition BenchReport."""
    report = BenchReport()
    for label, width, height, radius, t1, t2 in PUBLISHED_TIMINGS:
        report.records.append(
            BenchRecord(label, width, height, radius, levels, Engine.SEQUENTIAL, [float(t1)])
        )
        report.records.append(
            BenchRecord(label, width, height, radius, levels, Engine.PARALLEL, [float(t2)])
        )
        report.pairs.append(ImprovementPair(label, radius, float(t1), float(t2)))
    return report
