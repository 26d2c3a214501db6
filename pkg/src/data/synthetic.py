"""
Deterministic synthetic images for golden tests and benchmark workloads.
"""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple

import numpy as np

from filters.errors import ParameterError
from filters.oil_paint import Image

logger = logging.getLogger(__name__)

RGB = Tuple[int, int, int]

# Display resolutions used by the reference timing tables
SIZE_PRESETS: Dict[str, Tuple[int, int]] = {
    "vga": (640, 480),
    "svga": (800, 600),
    "xga": (1024, 768),
    "fhd": (1920, 1080),
    "wqxga": (2560, 1600),
}

_SIZE_PATTERN = re.compile(r"^\s*(\d+)\s*[xX]\s*(\d+)\s*$")


class PatternKind(str, Enum):
    UNIFORM = "uniform"
    GRADIENT = "gradient"
    CHECKER = "checker"
    NOISE = "noise"


def _check_color(name: str, color: RGB) -> RGB:
    if len(color) != 3 or any(not 0 <= int(c) <= 255 for c in color):
        raise ParameterError(f"{name} must be three channel values in [0, 255], got {color!r}")
    return tuple(int(c) for c in color)


def inverse_color(color: RGB) -> RGB:
    return tuple(255 - c for c in color)


@dataclass(frozen=True)
class PatternSpec:
    """What to draw and how big.

    ``color`` is the Uniform fill and the Checker's first colour; ``color_b``
    defaults to the inverse of ``color``. ``seed`` only matters for Noise.
    """

    kind: PatternKind
    width: int
    height: int
    color: RGB = (128, 128, 128)
    color_b: Optional[RGB] = None
    cell_size: int = 8
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", PatternKind(self.kind))
        if self.width < 1 or self.height < 1:
            raise ParameterError(f"pattern dimensions must be positive, got {self.width}x{self.height}")
        object.__setattr__(self, "color", _check_color("color", self.color))
        if self.color_b is not None:
            object.__setattr__(self, "color_b", _check_color("color_b", self.color_b))
        if self.cell_size < 1:
            raise ParameterError(f"cell_size must be >= 1, got {self.cell_size}")
        if self.seed < 0:
            raise ParameterError(f"seed must be >= 0, got {self.seed}")

    @classmethod
    def uniform(cls, width: int, height: int, color: RGB) -> "PatternSpec":
        return cls(PatternKind.UNIFORM, width, height, color=color)

    @classmethod
    def gradient(cls, width: int, height: int) -> "PatternSpec":
        return cls(PatternKind.GRADIENT, width, height)

    @classmethod
    def checker(cls, width: int, height: int, cell_size: int, color_a: RGB, color_b: RGB) -> "PatternSpec":
        return cls(PatternKind.CHECKER, width, height, color=color_a, color_b=color_b, cell_size=cell_size)

    @classmethod
    def noise(cls, width: int, height: int, seed: int) -> "PatternSpec":
        return cls(PatternKind.NOISE, width, height, seed=seed)


def parse_size(text: str) -> Tuple[str, int, int]:
    """``vga``/``xga``/... or ``WxH`` to (label, width, height)."""
    key = text.strip().lower()
    if key in SIZE_PRESETS:
        width, height = SIZE_PRESETS[key]
        return key.upper(), width, height

    match = _SIZE_PATTERN.match(text)
    if not match:
        raise ParameterError(
            f"unknown size {text!r}; use one of {', '.join(SIZE_PRESETS)} or WIDTHxHEIGHT"
        )
    width, height = int(match.group(1)), int(match.group(2))
    if width < 1 or height < 1:
        raise ParameterError(f"size {text!r} must have positive dimensions")
    return f"{width}x{height}", width, height


class SyntheticImageGenerator:
    """
    Draw PatternSpecs into Images.

    Output bytes depend only on the PatternSpec: Noise reads the raw 64-bit stream
    of a PCG64 bit generator seeded with ``spec.seed`` and serializes it
    little-endian, so it is identical across platforms and numpy releases.
    """

    def __init__(self, seed: int = 0):
        self.seed = seed

    def generate(self, spec: PatternSpec) -> Image:
        if spec.kind is PatternKind.UNIFORM:
            pixels = self.uniform(spec)
        elif spec.kind is PatternKind.GRADIENT:
            pixels = self.gradient(spec)
        elif spec.kind is PatternKind.CHECKER:
            pixels = self.checker(spec)
        else:
            pixels = self.noise(spec)

        return Image.from_array(pixels, copy=False)

    def uniform(self, spec: PatternSpec) -> np.ndarray:
        pixels = np.empty((spec.height, spec.width, 3), dtype=np.uint8)
        pixels[:, :] = spec.color
        return pixels

    def gradient(self, spec: PatternSpec) -> np.ndarray:
        w, h = spec.width, spec.height
        x = np.arange(w, dtype=np.int64)[np.newaxis, :]
        y = np.arange(h, dtype=np.int64)[:, np.newaxis]

        pixels = np.empty((h, w, 3), dtype=np.uint8)
        pixels[:, :, 0] = (x * 255) // max(w - 1, 1)
        pixels[:, :, 1] = (y * 255) // max(h - 1, 1)
        pixels[:, :, 2] = ((x + y) * 255) // max(w + h - 2, 1)
        return pixels

    def checker(self, spec: PatternSpec) -> np.ndarray:
        color_b = spec.color_b if spec.color_b is not None else inverse_color(spec.color)
        x = np.arange(spec.width)[np.newaxis, :] // spec.cell_size
        y = np.arange(spec.height)[:, np.newaxis] // spec.cell_size
        first = (x + y) % 2 == 0

        pixels = np.empty((spec.height, spec.width, 3), dtype=np.uint8)
        pixels[first] = spec.color
        pixels[~first] = color_b
        return pixels

    def noise(self, spec: PatternSpec) -> np.ndarray:
        size = spec.width * spec.height * 3
        words = np.random.PCG64(spec.seed).random_raw(-(-size // 8))
        raw = np.asarray(words, dtype="<u8").tobytes()[:size]
        return np.frombuffer(raw, dtype=np.uint8).reshape(spec.height, spec.width, 3).copy()

    def workload(self, size: str, pattern: str = "noise") -> Tuple[str, Image]:
        """Benchmark image for a size keyword or WxH string."""
        label, width, height = parse_size(size)
        spec = parse_pattern(pattern, width, height, seed=self.seed)
        logger.info(f"Generating {spec.kind.value} workload {label} ({width}x{height})")
        return label, self.generate(spec)


def parse_pattern(
    name: str,
    width: int,
    height: int,
    seed: int = 0,
    color: RGB = (128, 128, 128),
    cell_size: int = 8,
) -> PatternSpec:
    try:
        kind = PatternKind(name.strip().lower())
    except ValueError:
        choices = ", ".join(k.value for k in PatternKind)
        raise ParameterError(f"unknown pattern {name!r}; choose from {choices}")
    return PatternSpec(kind, width, height, color=color, cell_size=cell_size, seed=seed)


def generate(spec: PatternSpec) -> Image:
    return SyntheticImageGenerator().generate(spec)
