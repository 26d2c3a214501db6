#!/usr/bin/env python3
"""
Tests for the benchmark harness and the published reference tables.
"""

from collections import Counter

import pytest

from bench import harness
from bench.harness import (
    PAIR_COLUMNS,
    RECORD_COLUMNS,
    BenchRecord,
    BenchReport,
    Engine,
    ImprovementPair,
    improvement_pct,
    lower_median,
    read_csv,
    run_sweep,
    run_thread_scaling,
    time_engine,
    write_csv,
)
from bench.reference import PUBLISHED_IMPROVEMENT_PCT, PUBLISHED_TIMINGS, reference_report
from config import hardware_concurrency
from filters import ClockError, ParallelConfig, ParallelEngine, ParameterError


class TestImprovement:
    def test_published_examples(self):
        assert improvement_pct(218, 94) == pytest.approx(56.88073394, abs=1e-6)
        assert improvement_pct(23229, 6490) == pytest.approx(72.06078609, abs=1e-6)
        assert improvement_pct(6973, 1872) == pytest.approx(73.15359243, abs=1e-6)

    def test_all_published_rows(self):
        assert len(PUBLISHED_TIMINGS) == 20
        for (label, _, _, radius, t1, t2), expected in zip(PUBLISHED_TIMINGS, PUBLISHED_IMPROVEMENT_PCT):
            assert improvement_pct(t1, t2) == pytest.approx(expected, abs=1e-6), f"{label} r={radius}"

    def test_published_mean(self):
        assert reference_report().mean_improvement() == pytest.approx(71.65, abs=0.1)

    def test_no_improvement(self):
        for t in (0.5, 1.0, 1234.0):
            assert improvement_pct(t, t) == 0

    def test_scale_invariant(self):
        for k in (0.001, 3.0, 1e6):
            assert improvement_pct(k * 218, k * 94) == pytest.approx(improvement_pct(218, 94), rel=1e-12)

    @pytest.mark.parametrize("t1", [0, -5])
    def test_non_positive_t1(self, t1):
        with pytest.raises(ParameterError):
            improvement_pct(t1, 1)


class TestRecords:
    def test_lower_median(self):
        assert lower_median([5.0, 1.0, 3.0]) == 3.0
        assert lower_median([4.0, 1.0, 3.0, 2.0]) == 2.0
        assert lower_median([7.5]) == 7.5

    def test_statistics(self):
        record = BenchRecord("VGA", 640, 480, 2, 20, "sequential", [3.0, 1.0, 2.0, 9.0])
        assert record.engine is Engine.SEQUENTIAL
        assert record.reps == 4
        assert (record.median_ms, record.min_ms, record.max_ms) == (2.0, 1.0, 9.0)

    def test_requires_timings(self):
        with pytest.raises(ParameterError):
            BenchRecord("VGA", 640, 480, 2, 20, Engine.PARALLEL, [])

    def test_pair(self):
        pair = ImprovementPair("VGA", 2, 218.0, 94.0)
        assert pair.improvement_pct == pytest.approx(56.88073394, abs=1e-6)
        assert pair.speedup == pytest.approx(218 / 94)

    def test_find(self):
        report = reference_report()
        record = report.find("XGA", 8, Engine.PARALLEL)
        assert record.median_ms == 1248.0
        assert report.find("XGA", 3, Engine.PARALLEL) is None


class TestCsv:
    def test_empty_report(self):
        expected = ",".join(RECORD_COLUMNS) + "\n\n" + ",".join(PAIR_COLUMNS) + "\n"
        assert write_csv(BenchReport()) == expected.encode("ascii")

    def test_headers(self):
        assert ",".join(RECORD_COLUMNS) == "label,width,height,radius,levels,engine,reps,median_ms,min_ms,max_ms"
        assert ",".join(PAIR_COLUMNS) == "label,radius,t1_ms,t2_ms,improvement_pct"

    def test_pair_row(self):
        report = BenchReport(pairs=[ImprovementPair("VGA", 2, 218.0, 94.0)])
        lines = write_csv(report).decode("ascii").splitlines()
        assert lines[-1] == "VGA,2,218.000000,94.000000,56.880734"

    def test_record_row(self):
        report = BenchReport(records=[BenchRecord("XGA", 1024, 768, 4, 20, Engine.PARALLEL, [1.5, 0.25, 2.0])])
        lines = write_csv(report).decode("ascii").splitlines()
        assert lines[1] == "XGA,1024,768,4,20,parallel,3,1.500000,0.250000,2.000000"

    def test_round_trip_medians(self):
        report = BenchReport()
        for i, (label, width, height, radius, t1, t2) in enumerate(PUBLISHED_TIMINGS):
            seq_times = [t1 / 7.0, t1 / 3.0 + i, t1 / 11.0]
            par_times = [t2 / 9.0, t2 / 13.0, t2 / 5.0 + 0.123456]
            seq = BenchRecord(label, width, height, radius, 20, Engine.SEQUENTIAL, [round(t, 6) for t in seq_times])
            par = BenchRecord(label, width, height, radius, 20, Engine.PARALLEL, [round(t, 6) for t in par_times])
            report.records.extend([seq, par])
            report.pairs.append(ImprovementPair(label, radius, seq.median_ms, par.median_ms))

        records, pairs = read_csv(write_csv(report))
        assert list(records.columns) == RECORD_COLUMNS
        assert list(pairs.columns) == PAIR_COLUMNS
        assert len(records) == 40
        assert len(pairs) == 20
        assert records["median_ms"].tolist() == [r.median_ms for r in report.records]
        assert pairs["t1_ms"].tolist() == [p.t1_ms for p in report.pairs]
        assert pairs["t2_ms"].tolist() == [p.t2_ms for p in report.pairs]

    def test_missing_separator(self):
        with pytest.raises(ParameterError):
            read_csv(b"label,radius\nVGA,2\n")


class TestSweep:
    def test_minimal_shape(self):
        report = run_sweep(sizes=["32x24"], radii=[1], reps=1, cfg=ParallelConfig(worker_count=2))
        assert len(report.records) == 2
        assert len(report.pairs) == 1
        seq, par = report.records
        assert (seq.engine, par.engine) == (Engine.SEQUENTIAL, Engine.PARALLEL)
        assert (seq.label, seq.width, seq.height, seq.radius, seq.intensity_levels) == ("32x24", 32, 24, 1, 20)
        assert seq.reps == par.reps == 1
        pair = report.pairs[0]
        assert (pair.t1_ms, pair.t2_ms) == (seq.median_ms, par.median_ms)

    def test_sweep_order(self):
        report = run_sweep(sizes=["20x20", "24x16"], radii=[2, 1], levels=10, reps=2,
                           cfg=ParallelConfig(worker_count=2))
        assert [(p.label, p.radius) for p in report.pairs] == [
            ("20x20", 2), ("20x20", 1), ("24x16", 2), ("24x16", 1),
        ]
        assert all(r.reps == 2 and r.intensity_levels == 10 for r in report.records)

    def test_invalid_cell_fails_before_timing(self):
        with pytest.raises(ParameterError):
            run_sweep(sizes=["32x32", "8x8"], radii=[4], reps=1)

    def test_invalid_reps(self):
        with pytest.raises(ParameterError):
            run_sweep(sizes=["16x16"], radii=[1], reps=0)

    def test_thread_scaling_shape(self):
        report = run_thread_scaling(size="48x32", radius=2, thread_counts=[1, 2], reps=1)
        assert [r.label for r in report.records] == ["48x32", "48x32@1t", "48x32@2t"]
        assert [p.label for p in report.pairs] == ["48x32@1t", "48x32@2t"]


class FakeClock:
    """Stand-in for time.perf_counter_ns that only moves when told to."""

    def __init__(self, start_ns: int = 10**12, step_ns: int = 0):
        self.now = start_ns
        self.step_ns = step_ns
        self.reads = 0

    def __call__(self) -> int:
        self.reads += 1
        value = self.now
        self.now += self.step_ns
        return value


class TestTimingProtocol:
    def test_time_engine_warmup_and_reps(self, monkeypatch):
        clock = FakeClock()
        monkeypatch.setattr(harness.time, "perf_counter_ns", clock)
        calls = []

        def work():
            calls.append(clock.reads)
            clock.now += 1_500_000

        times = time_engine(work, reps=3, warmup=2)
        assert len(calls) == 5
        assert times == [1.5, 1.5, 1.5]
        # warmups never touch the clock; each timed call reads it twice
        assert calls[:2] == [0, 0]
        assert clock.reads == 6

    def test_time_engine_zero_warmup(self, monkeypatch):
        clock = FakeClock()
        monkeypatch.setattr(harness.time, "perf_counter_ns", clock)
        calls = Counter()

        def work():
            calls["n"] += 1

        assert time_engine(work, reps=4, warmup=0) == [0.0] * 4
        assert calls["n"] == 4

    def test_sweep_calls_each_engine_warmup_plus_reps(self, monkeypatch):
        seq_calls, par_calls = Counter(), Counter()
        original_seq = harness.apply_sequential
        original_par = ParallelEngine.apply

        def counting_seq(img, params):
            seq_calls[(img.width, img.height, params.radius)] += 1
            return original_seq(img, params)

        def counting_par(self, img, params):
            par_calls[(img.width, img.height, params.radius)] += 1
            return original_par(self, img, params)

        monkeypatch.setattr(harness, "apply_sequential", counting_seq)
        monkeypatch.setattr(ParallelEngine, "apply", counting_par)

        run_sweep(sizes=["24x16", "20x20"], radii=[1, 2], reps=3, warmup=1, cfg=ParallelConfig(worker_count=2))
        cells = {(24, 16, 1), (24, 16, 2), (20, 20, 1), (20, 20, 2)}
        assert seq_calls == {cell: 4 for cell in cells}
        assert par_calls == {cell: 4 for cell in cells}

    def test_thread_scaling_call_counts(self, monkeypatch):
        seq_calls = Counter()
        par_calls = Counter()
        original_seq = harness.apply_sequential
        original_par = ParallelEngine.apply

        def counting_seq(img, params):
            seq_calls["seq"] += 1
            return original_seq(img, params)

        def counting_par(self, img, params):
            par_calls[self.worker_count] += 1
            return original_par(self, img, params)

        monkeypatch.setattr(harness, "apply_sequential", counting_seq)
        monkeypatch.setattr(ParallelEngine, "apply", counting_par)

        run_thread_scaling(size="32x24", radius=1, thread_counts=[1, 2, 3], reps=2, warmup=2)
        assert seq_calls == {"seq": 4}
        assert par_calls == {1: 4, 2: 4, 3: 4}

    def test_recorded_times_come_from_the_clock(self, monkeypatch):
        monkeypatch.setattr(harness.time, "perf_counter_ns", FakeClock(step_ns=2_000_000))
        report = run_sweep(sizes=["16x16"], radii=[1], reps=2, warmup=0, cfg=ParallelConfig(worker_count=1))
        for record in report.records:
            assert record.times_ms == [2.0, 2.0]
        assert report.pairs[0].improvement_pct == 0.0


class TestClock:
    def test_backwards_clock_raises(self, monkeypatch):
        monkeypatch.setattr(harness.time, "perf_counter_ns", FakeClock(step_ns=-1000))
        with pytest.raises(ClockError, match="backwards by 1000 ns"):
            time_engine(lambda: None, reps=1, warmup=0)

    def test_stalled_clock_is_zero_not_error(self, monkeypatch):
        monkeypatch.setattr(harness.time, "perf_counter_ns", FakeClock())
        assert time_engine(lambda: None, reps=2, warmup=1) == [0.0, 0.0]

    def test_sweep_propagates_clock_error(self, monkeypatch):
        monkeypatch.setattr(harness.time, "perf_counter_ns", FakeClock(step_ns=-1))
        with pytest.raises(ClockError):
            run_sweep(sizes=["16x16"], radii=[1], reps=1, warmup=0, cfg=ParallelConfig(worker_count=1))


@pytest.mark.slow
class TestTimingProperties:
    def test_radius_trend(self):
        report = run_sweep(sizes=["xga"], radii=[2, 4, 6, 8], reps=3)
        medians = [report.find("XGA", r, Engine.SEQUENTIAL).median_ms for r in (2, 4, 6, 8)]
        assert medians == sorted(medians)
        assert len(set(medians)) == 4
        assert medians[3] / medians[0] >= 3

    def test_parallel_speedup(self):
        if hardware_concurrency() < 4:
            pytest.skip(f"needs >= 4 hardware threads, found {hardware_concurrency()}")
        report = run_sweep(sizes=["xga"], radii=[8], reps=3)
        assert report.pairs[0].improvement_pct >= 40

    def test_content_independence(self):
        noise = run_sweep(sizes=["svga"], radii=[4], reps=3, pattern="noise")
        uniform = run_sweep(sizes=["svga"], radii=[4], reps=3, pattern="uniform")
        t_noise = noise.find("SVGA", 4, Engine.SEQUENTIAL).median_ms
        t_uniform = uniform.find("SVGA", 4, Engine.SEQUENTIAL).median_ms
        assert abs(t_noise - t_uniform) / max(t_noise, t_uniform) < 0.2
