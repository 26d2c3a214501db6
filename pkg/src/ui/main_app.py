"""
Main Streamlit application for the oilbench dashboard.
"""

import logging
import time

import streamlit as st

from bench.harness import (
    DEFAULT_RADII,
    DEFAULT_SIZES,
    DEFAULT_THREAD_COUNTS,
    BenchReport,
    run_sweep,
    run_thread_scaling,
    write_csv,
)
from bench.plots import create_improvement_figure, create_timing_figure
from bench.reference import PUBLISHED_MEAN_IMPROVEMENT_PCT, reference_report
from config import get_settings, hardware_concurrency, setup_logging
from data.synthetic import SIZE_PRESETS, SyntheticImageGenerator, parse_pattern
from filters.errors import OilBenchError
from filters.oil_paint import BorderPolicy, FilterParams, apply_sequential
from filters.parallel import ParallelConfig, apply_parallel

from .components import create_metric_card, decode_upload, image_preview, improvement_summary

logger = logging.getLogger(__name__)


def initialize_session_state():
    """Initialize Streamlit session state variables."""
    if 'source_image' not in st.session_state:
        st.session_state.source_image = None

    if 'bench_report' not in st.session_state:
        st.session_state.bench_report = None

    if 'scaling_report' not in st.session_state:
        st.session_state.scaling_report = None


def create_parameter_controls() -> dict:
    """Create sidebar controls for filter parameters."""
    settings = get_settings()

    st.sidebar.markdown("## 🎛️ Filter Parameters")
    radius = st.sidebar.slider("Radius", min_value=0, max_value=16, value=4)
    levels = st.sidebar.slider("Intensity levels", min_value=1, max_value=255, value=settings.default_levels)
    border = st.sidebar.radio("Border", [p.value for p in BorderPolicy], horizontal=True)

    st.sidebar.markdown("### Parallel Engine")
    threads = st.sidebar.number_input(
        "Worker threads",
        min_value=1, max_value=256, value=hardware_concurrency(), step=1,
    )

    return {
        "radius": int(radius),
        "levels": int(levels),
        "border": BorderPolicy(border),
        "threads": int(threads),
    }


def create_source_controls():
    """Generate a synthetic image or accept an upload."""
    st.markdown("## 🖼️ Source Image")
    mode = st.radio("Source", ["Generate", "Upload"], horizontal=True)

    if mode == "Generate":
        col1, col2, col3, col4 = st.columns(4)
        with col1:
            pattern = st.selectbox("Pattern", ["noise", "gradient", "checker", "uniform"])
        with col2:
            width = st.number_input("Width", min_value=1, max_value=4096, value=256)
        with col3:
            height = st.number_input("Height", min_value=1, max_value=4096, value=256)
        with col4:
            seed = st.number_input("Seed", min_value=0, value=0)

        if st.button("Generate", type="primary"):
            spec = parse_pattern(pattern, int(width), int(height), seed=int(seed))
            st.session_state.source_image = SyntheticImageGenerator(seed=int(seed)).generate(spec)
    else:
        upload = st.file_uploader("PPM (P6) or RGB PNG", type=["ppm", "png"])
        if upload is not None:
            try:
                st.session_state.source_image = decode_upload(upload.name, upload.getvalue())
            except OilBenchError as e:
                st.error(f"Could not read {upload.name}: {e}")


def display_filter_tab(params: dict):
    create_source_controls()

    img = st.session_state.source_image
    if img is None:
        st.info("Generate or upload an image to preview the filter.")
        return

    engine = st.radio("Engine", ["sequential", "parallel"], horizontal=True)
    if not st.button("Apply filter"):
        image_preview(img, "Input")
        return

    try:
        filter_params = FilterParams(params["radius"], params["levels"], params["border"])
        start = time.perf_counter_ns()
        if engine == "parallel":
            result = apply_parallel(img, filter_params, ParallelConfig(worker_count=params["threads"]))
        else:
            result = apply_sequential(img, filter_params)
        process_ms = (time.perf_counter_ns() - start) / 1e6
    except OilBenchError as e:
        st.error(str(e))
        return

    col1, col2 = st.columns(2)
    with col1:
        image_preview(img, "Input")
    with col2:
        image_preview(result, "Oil paint")

    create_metric_card("Process time", f"{process_ms:.3f} ms", help_text=f"{engine} engine")


def display_benchmark_tab(params: dict):
    st.markdown("## ⏱️ Benchmark Sweep")
    st.caption("Large sizes take a while; the first run also compiles the kernel.")

    sizes = st.multiselect("Sizes", list(SIZE_PRESETS), default=DEFAULT_SIZES[:1])
    radii = st.multiselect("Radii", list(range(1, 17)), default=DEFAULT_RADII)
    reps = st.number_input("Repetitions", min_value=1, max_value=50, value=get_settings().default_reps)

    if st.button("Run sweep", type="primary"):
        if not sizes or not radii:
            st.warning("Pick at least one size and one radius.")
        else:
            with st.spinner("Running sweep..."):
                try:
                    st.session_state.bench_report = run_sweep(
                        sizes=sizes,
                        radii=sorted(radii),
                        levels=params["levels"],
                        reps=int(reps),
                        cfg=ParallelConfig(worker_count=params["threads"]),
                    )
                except OilBenchError as e:
                    st.error(str(e))

    report: BenchReport = st.session_state.bench_report
    if report is None:
        st.info("No sweep results yet.")
        return

    create_metric_card("Mean improvement", f"{report.mean_improvement():.2f}%",
                       delta=f"published {PUBLISHED_MEAN_IMPROVEMENT_PCT:.1f}%")
    st.dataframe(report.records_frame(), use_container_width=True)
    st.dataframe(improvement_summary(report), use_container_width=True)
    st.plotly_chart(create_timing_figure(report), use_container_width=True)
    st.plotly_chart(create_improvement_figure(report, reference_report(params["levels"])), use_container_width=True)
    st.download_button("Download CSV", write_csv(report), file_name="oilbench.csv", mime="text/csv")


def display_scaling_section(params: dict):
    st.markdown("### 🧵 Thread Scaling")
    st.caption("One sequential baseline against the parallel engine at each worker count.")

    col1, col2 = st.columns(2)
    with col1:
        size = st.selectbox("Size", list(SIZE_PRESETS), index=list(SIZE_PRESETS).index("xga"), key="scaling_size")
    with col2:
        counts = st.multiselect("Worker counts", [1, 2, 4, 8, 16, 32], default=DEFAULT_THREAD_COUNTS,
                                key="scaling_counts")

    if st.button("Run thread scaling"):
        if not counts:
            st.warning("Pick at least one worker count.")
        else:
            with st.spinner("Timing worker counts..."):
                try:
                    st.session_state.scaling_report = run_thread_scaling(
                        size=size,
                        radius=params["radius"],
                        thread_counts=sorted(counts),
                        levels=params["levels"],
                        reps=get_settings().default_reps,
                    )
                except OilBenchError as e:
                    st.error(str(e))

    report: BenchReport = st.session_state.scaling_report
    if report is None:
        return

    st.dataframe(improvement_summary(report), use_container_width=True)
    st.plotly_chart(create_improvement_figure(report), use_container_width=True)
    st.download_button("Download scaling CSV", write_csv(report), file_name="oilbench-scaling.csv",
                       mime="text/csv")


def display_reference_tab():
    st.markdown("## 📚 Published Timings")
    report = reference_report()

    create_metric_card("Published mean improvement", f"{report.mean_improvement():.2f}%")
    st.dataframe(improvement_summary(report), use_container_width=True)
    st.plotly_chart(create_timing_figure(report, title="Published time vs radius"), use_container_width=True)
    st.plotly_chart(create_improvement_figure(report), use_container_width=True)


def main():
    """Main application entry point."""
    st.set_page_config(
        page_title="oilbench - Oil Paint Filter",
        page_icon="🎨",
        layout="wide",
        initial_sidebar_state="expanded"
    )
    setup_logging()
    initialize_session_state()

    st.title("🎨 oilbench")
    st.markdown("Histogram-based oil-paint filter: sequential and parallel engines.")

    params = create_parameter_controls()

    tab1, tab2, tab3 = st.tabs(["🖌️ Filter", "⏱️ Benchmark", "📚 Reference"])

    with tab1:
        display_filter_tab(params)

    with tab2:
        display_benchmark_tab(params)
        st.divider()
        display_scaling_section(params)

    with tab3:
        display_reference_tab()


if __name__ == "__main__":
    main()
