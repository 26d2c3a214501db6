"""
Plotly figures for benchmark reports.
"""

from typing import Optional

import plotly.graph_objects as go

from .harness import BenchReport, Engine

ENGINE_COLORS = {Engine.SEQUENTIAL: "#1f77b4", Engine.PARALLEL: "#ff7f0e"}


def create_timing_figure(report: BenchReport, title: str = "Median filter time vs radius") -> go.Figure:
    """One line per (size, engine): median milliseconds against radius."""
    fig = go.Figure()
    df = report.records_frame()
    if df.empty:
        return fig

    for (label, engine), group in df.groupby(["label", "engine"], sort=False):
        group = group.sort_values("radius")
        fig.add_trace(go.Scatter(
            x=group["radius"],
            y=group["median_ms"],
            mode="lines+markers",
            name=f"{label} {engine}",
            line=dict(
                color=ENGINE_COLORS[Engine(engine)],
                dash="solid" if engine == Engine.SEQUENTIAL.value else "dash",
            ),
        ))

    fig.update_layout(
        title=title,
        xaxis_title="Radius (px)",
        yaxis_title="Median time (ms)",
        height=450,
    )
    return fig


def create_improvement_figure(
    report: BenchReport,
    reference: Optional[BenchReport] = None,
) -> go.Figure:
    """Improvement % per (size, radius), optionally beside published values."""
    fig = go.Figure()
    measured = report.pairs_frame()
    if not measured.empty:
        fig.add_trace(go.Bar(
            x=[f"{l} r{r}" for l, r in zip(measured["label"], measured["radius"])],
            y=measured["improvement_pct"],
            name="measured",
        ))

    if reference is not None:
        published = reference.pairs_frame()
        if not published.empty:
            fig.add_trace(go.Bar(
                x=[f"{l} r{r}" for l, r in zip(published["label"], published["radius"])],
                y=published["improvement_pct"],
                name="published",
                opacity=0.6,
            ))

    fig.update_layout(
        title="Parallel improvement over sequential",
        barmode="group",
        yaxis_title="Improvement (%)",
        height=450,
    )
    return fig
