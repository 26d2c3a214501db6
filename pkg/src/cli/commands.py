"""
oilbench command line: apply, gen, bench and scale.

Exit codes: 0 success, 1 usage error, 2 I/O or parse error,
3 filter parameter error.
"""

import logging
import sys
import time
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import click

from bench.harness import (
    DEFAULT_RADII,
    DEFAULT_SIZES,
    DEFAULT_THREAD_COUNTS,
    BenchReport,
    run_sweep,
    run_thread_scaling,
    write_csv,
)
from config import get_settings, setup_logging
from data.codecs import load_image, save_image
from data.synthetic import SyntheticImageGenerator, parse_pattern, parse_size
from filters.errors import ClockError, InputError, ParameterError, WorkerPoolError
from filters.oil_paint import BorderPolicy, FilterParams, apply_sequential
from filters.parallel import ParallelConfig, apply_parallel

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_PARAMETER = 3

ENGINE_CHOICES = ["seq", "par"]
BORDER_CHOICES = [policy.value for policy in BorderPolicy]
PATTERN_CHOICES = ["uniform", "gradient", "checker", "noise"]


def _split_list(value: str) -> List[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def _parse_color(ctx, param, value: Optional[str]) -> Optional[Tuple[int, int, int]]:
    if value is None:
        return None
    parts = _split_list(value)
    try:
        color = tuple(int(p) for p in parts)
    except ValueError:
        raise click.BadParameter(f"expected R,G,B integers, got {value!r}")
    if len(color) != 3 or any(not 0 <= c <= 255 for c in color):
        raise click.BadParameter(f"expected three values in [0, 255], got {value!r}")
    return color


def _parse_radii(ctx, param, value: str) -> List[int]:
    try:
        radii = [int(item) for item in _split_list(value)]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")
    if not radii:
        raise click.BadParameter("at least one radius is required")
    if any(r < 0 for r in radii):
        raise click.BadParameter(f"radii must be >= 0, got {value!r}")
    return radii


def _parse_sizes(ctx, param, value: str) -> List[str]:
    sizes = _split_list(value)
    if not sizes:
        raise click.BadParameter("at least one size is required")
    for size in sizes:
        try:
            parse_size(size)
        except ParameterError as e:
            raise click.BadParameter(str(e))
    return sizes


def _parse_size(ctx, param, value: str) -> str:
    try:
        parse_size(value)
    except ParameterError as e:
        raise click.BadParameter(str(e))
    return value


def _parse_thread_counts(ctx, param, value: str) -> List[int]:
    try:
        counts = [int(item) for item in _split_list(value)]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")
    if not counts:
        raise click.BadParameter("at least one thread count is required")
    if any(n < 1 for n in counts):
        raise click.BadParameter(f"thread counts must be >= 1, got {value!r}")
    return counts


def _elapsed_ms(start_ns: int) -> float:
    return (time.perf_counter_ns() - start_ns) / 1e6


def _emit_report(report: BenchReport, out_path: Optional[Path]):
    payload = write_csv(report)
    if out_path is None:
        click.echo(payload.decode("ascii"), nl=False)
    else:
        out_path.write_bytes(payload)
        logger.info(f"Wrote {len(report.records)} records and {len(report.pairs)} pairs to {out_path}")


@click.group(help="Histogram-based oil-paint filter: apply, generate test images, benchmark, thread scaling.")
def cli():
    pass


@cli.command("apply", help="Filter one PPM (or PNG) file.")
@click.option("--input", "input_path", required=True, type=click.Path(dir_okay=False, path_type=Path),
              help="Input image (.ppm, or .png)")
@click.option("--output", "output_path", required=True, type=click.Path(dir_okay=False, path_type=Path),
              help="Output image; format follows the suffix")
@click.option("--radius", required=True, type=click.IntRange(min=0), help="Neighbourhood half-width")
@click.option("--levels", type=click.IntRange(1, 255), default=None, help="Intensity levels L (default 20)")
@click.option("--engine", type=click.Choice(ENGINE_CHOICES), default="seq", show_default=True)
@click.option("--border", type=click.Choice(BORDER_CHOICES), default="copy", show_default=True)
@click.option("--threads", type=click.IntRange(min=1), default=None,
              help="Parallel workers (default OILBENCH_THREADS or hardware threads)")
def apply_command(input_path, output_path, radius, levels, engine, border, threads):
    settings = get_settings()
    params = FilterParams(radius, levels or settings.default_levels, BorderPolicy(border))

    start = time.perf_counter_ns()
    img = load_image(input_path)
    decode_ms = _elapsed_ms(start)

    params.validate_for(img)

    start = time.perf_counter_ns()
    if engine == "par":
        cfg = ParallelConfig(worker_count=threads, min_rows_per_task=settings.min_rows_per_task)
        result = apply_parallel(img, params, cfg)
    else:
        result = apply_sequential(img, params)
    process_ms = _elapsed_ms(start)

    start = time.perf_counter_ns()
    save_image(output_path, result)
    encode_ms = _elapsed_ms(start)

    click.echo(f"width={img.width} height={img.height} time_process_ms={process_ms:.3f}", err=True)
    logger.info(f"Time(Decode)={decode_ms:.3f} ms Time(Process)={process_ms:.3f} ms Time(Encode)={encode_ms:.3f} ms")


@cli.command("gen", help="Write a deterministic synthetic image.")
@click.option("--pattern", required=True, type=click.Choice(PATTERN_CHOICES))
@click.option("--width", required=True, type=click.IntRange(min=1))
@click.option("--height", required=True, type=click.IntRange(min=1))
@click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True, help="Noise seed")
@click.option("--output", "output_path", required=True, type=click.Path(dir_okay=False, path_type=Path))
@click.option("--color", callback=_parse_color, default=None,
              help="R,G,B fill for uniform, first colour for checker (default 128,128,128)")
@click.option("--cell-size", type=click.IntRange(min=1), default=8, show_default=True, help="Checker cell size")
def gen_command(pattern, width, height, seed, output_path, color, cell_size):
    spec = parse_pattern(pattern, width, height, seed=seed, color=color or (128, 128, 128), cell_size=cell_size)
    img = SyntheticImageGenerator(seed=seed).generate(spec)
    save_image(output_path, img)


@cli.command("bench", help="Time both engines over a size x radius grid and write CSV.")
@click.option("--sizes", default=",".join(DEFAULT_SIZES), show_default=True, callback=_parse_sizes,
              help="Comma list of vga/svga/xga/fhd/wqxga or WxH")
@click.option("--radii", default=",".join(str(r) for r in DEFAULT_RADII), show_default=True,
              callback=_parse_radii)
@click.option("--levels", type=click.IntRange(1, 255), default=None, help="Intensity levels L (default 20)")
@click.option("--reps", type=click.IntRange(min=1), default=None, help="Timed repetitions (default 5)")
@click.option("--out", "out_path", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="CSV destination (default stdout)")
@click.option("--threads", type=click.IntRange(min=1), default=None)
def bench_command(sizes, radii, levels, reps, out_path, threads):
    settings = get_settings()
    cfg = ParallelConfig(worker_count=threads, min_rows_per_task=settings.min_rows_per_task)

    report = run_sweep(
        sizes=sizes,
        radii=radii,
        levels=levels or settings.default_levels,
        reps=reps or settings.default_reps,
        cfg=cfg,
        progress=sys.stderr.isatty(),
    )
    _emit_report(report, out_path)
    logger.info(f"Mean improvement over {len(report.pairs)} cells: {report.mean_improvement():.2f}%")


@cli.command("scale", help="Time the parallel engine at several worker counts against one sequential baseline.")
@click.option("--size", default="xga", show_default=True, callback=_parse_size,
              help="vga/svga/xga/fhd/wqxga or WxH")
@click.option("--radius", type=click.IntRange(min=0), default=8, show_default=True)
@click.option("--thread-counts", default=",".join(str(n) for n in DEFAULT_THREAD_COUNTS), show_default=True,
              callback=_parse_thread_counts)
@click.option("--levels", type=click.IntRange(1, 255), default=None, help="Intensity levels L (default 20)")
@click.option("--reps", type=click.IntRange(min=1), default=None, help="Timed repetitions (default 5)")
@click.option("--out", "out_path", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="CSV destination (default stdout)")
def scale_command(size, radius, thread_counts, levels, reps, out_path):
    settings = get_settings()
    report = run_thread_scaling(
        size=size,
        radius=radius,
        thread_counts=thread_counts,
        levels=levels or settings.default_levels,
        reps=reps or settings.default_reps,
        min_rows_per_task=settings.min_rows_per_task,
    )
    _emit_report(report, out_path)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and translate failures into exit codes."""
    setup_logging()
    args = list(argv) if argv is not None else sys.argv[1:]

    try:
        rv = cli.main(args=args, prog_name="oilbench", standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE
    except click.FileError as e:
        e.show()
        return EXIT_IO
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_USAGE
    except ParameterError as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_PARAMETER
    except (InputError, OSError, WorkerPoolError, ClockError) as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_IO

    return rv if isinstance(rv, int) else EXIT_OK
