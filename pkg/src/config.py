"""
Runtime configuration for oilbench.

Values come from the process environment, optionally seeded from a local
``.env`` file (see ``.env.example``).
"""

import logging
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

THREADS_ENV_VAR = "OILBENCH_THREADS"
LOG_LEVEL_ENV_VAR = "OILBENCH_LOG_LEVEL"
MIN_ROWS_ENV_VAR = "OILBENCH_MIN_ROWS"
REPS_ENV_VAR = "OILBENCH_REPS"

LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'


@dataclass
class Settings:
    """Defaults used by the CLI, the harness and the dashboard."""

    default_levels: int = 20
    default_reps: int = 5
    warmup: int = 1
    min_rows_per_task: int = 4
    log_level: str = "WARNING"


def _positive_int_from_env(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw.strip())
    except ValueError:
        logger.warning(f"Ignoring {name}={raw!r}: not an integer")
        return None
    if value < 1:
        logger.warning(f"Ignoring {name}={raw!r}: must be a positive integer")
        return None
    return value


def get_settings() -> Settings:
    """Build settings from ``.env`` and the environment."""
    load_dotenv()

    settings = Settings()

    min_rows = _positive_int_from_env(MIN_ROWS_ENV_VAR)
    if min_rows is not None:
        settings.min_rows_per_task = min_rows

    reps = _positive_int_from_env(REPS_ENV_VAR)
    if reps is not None:
        settings.default_reps = reps

    level = os.getenv(LOG_LEVEL_ENV_VAR)
    if level:
        settings.log_level = level.strip().upper()

    return settings


def hardware_concurrency() -> int:
    return os.cpu_count() or 1


def resolve_worker_count(explicit: Optional[int] = None) -> int:
    """Worker count for the parallel engine.

    An explicit count wins, then ``OILBENCH_THREADS``, then the number of
    hardware threads. The environment is read on every call.
    """
    if explicit is not None:
        return explicit

    from_env = _positive_int_from_env(THREADS_ENV_VAR)
    if from_env is not None:
        return from_env

    return hardware_concurrency()


def setup_logging(level: Optional[str] = None):
    """Configure root logging on stderr."""
    level_name = (level or get_settings().log_level).upper()
    numeric = getattr(logging, level_name, None)
    if not isinstance(numeric, int):
        numeric = logging.WARNING

    logging.basicConfig(level=numeric, format=LOG_FORMAT)
    logging.getLogger().setLevel(numeric)
