"""
Streamlit dashboard for the oilbench filter and benchmarks.
"""

from .main_app import main

__all__ = ["main"]
