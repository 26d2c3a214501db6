"""
Shared pytest fixtures for the oilbench test suites.
"""

import os
import sys

import numpy as np
import pytest

# Add the src directory to the path
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), 'src'))

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data', 'golden')


@pytest.fixture
def golden_gradient_bytes() -> bytes:
    with open(os.path.join(GOLDEN_DIR, 'gradient_8x8_r2_l20_zero.ppm'), 'rb') as f:
        return f.read()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20121)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Tests never inherit oilbench settings from the shell."""
    for name in ("OILBENCH_THREADS", "OILBENCH_LOG_LEVEL", "OILBENCH_MIN_ROWS", "OILBENCH_REPS"):
        monkeypatch.delenv(name, raising=False)
