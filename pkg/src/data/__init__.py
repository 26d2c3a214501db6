"""
Raster codecs and synthetic image generation.
"""

from .codecs import PixmapHeader, load_image, read_png, read_ppm, save_image, write_png, write_ppm
from .synthetic import (
    SIZE_PRESETS,
    PatternKind,
    PatternSpec,
    SyntheticImageGenerator,
    generate,
    parse_pattern,
    parse_size,
)

__all__ = [
    "PatternKind",
    "PatternSpec",
    "PixmapHeader",
    "SIZE_PRESETS",
    "SyntheticImageGenerator",
    "generate",
    "load_image",
    "parse_pattern",
    "parse_size",
    "read_png",
    "read_ppm",
    "save_image",
    "write_png",
    "write_ppm",
]
