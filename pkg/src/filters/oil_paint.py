"""
Histogram-based oil-paint filter on RGB8 rasters.

Every interior pixel is replaced by the average colour of the most frequent
intensity class in its (2r+1) x (2r+1) neighbourhood. This module holds the
sequential reference engine; the parallel engine reuses ``filter_rows``.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np
from numba import njit

from .errors import ContractViolation, InputError, ParameterError

logger = logging.getLogger(__name__)

MAX_CHANNEL_SUM = 765  # 3 * 255
MAX_INTENSITY_LEVELS = 255

RGB = Tuple[int, int, int]


@dataclass(frozen=True, eq=False)
class Image:
    """Owned, immutable RGB8 raster, row-major with interleaved R,G,B."""

    width: int
    height: int
    pixels: np.ndarray  # (height, width, 3) uint8, read-only

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise InputError(f"Image dimensions must be positive, got {self.width}x{self.height}")
        if self.pixels.dtype != np.uint8:
            raise InputError(f"Image pixels must be uint8, got {self.pixels.dtype}")
        if self.pixels.shape != (self.height, self.width, 3):
            raise InputError(
                f"Pixel array shape {self.pixels.shape} does not match "
                f"{self.width}x{self.height} RGB"
            )
        if self.pixels.flags.writeable:
            self.pixels.flags.writeable = False

    @classmethod
    def from_bytes(cls, width: int, height: int, data: bytes) -> "Image":
        expected = width * height * 3
        if width < 1 or height < 1:
            raise InputError(f"Image dimensions must be positive, got {width}x{height}")
        if len(data) != expected:
            raise InputError(
                f"Pixel data has {len(data)} bytes, expected {expected} for {width}x{height} RGB"
            )
        pixels = np.frombuffer(bytes(data), dtype=np.uint8).reshape(height, width, 3).copy()
        return cls(width=width, height=height, pixels=pixels)

    @classmethod
    def from_array(cls, array: np.ndarray, copy: bool = True) -> "Image":
        array = np.asarray(array)
        if array.ndim != 3 or array.shape[2] != 3:
            raise InputError(f"Expected an (height, width, 3) array, got shape {array.shape}")
        if array.dtype != np.uint8:
            if array.size and (array.min() < 0 or array.max() > 255):
                raise InputError("Channel values must lie in [0, 255]")
            array = array.astype(np.uint8)
        pixels = np.array(array, dtype=np.uint8, order="C", copy=True) if copy else np.ascontiguousarray(array)
        return cls(width=pixels.shape[1], height=pixels.shape[0], pixels=pixels)

    @property
    def data(self) -> bytes:
        return self.pixels.tobytes()

    def copy_pixels(self) -> np.ndarray:
        """Writable copy of the pixel array."""
        return np.array(self.pixels, order="C", copy=True)

    def pixel(self, x: int, y: int) -> RGB:
        r, g, b = self.pixels[y, x]
        return int(r), int(g), int(b)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Image):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and np.array_equal(self.pixels, other.pixels)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"Image({self.width}x{self.height})"


class BorderPolicy(str, Enum):
    """What happens to the radius-wide frame the interior loop never visits."""

    COPY_INPUT = "copy"
    ZERO_FILL = "zero"


@dataclass(frozen=True)
class FilterParams:
    """Full description of one filter invocation."""

    radius: int
    intensity_levels: int = 20
    border_policy: BorderPolicy = BorderPolicy.COPY_INPUT

    def __post_init__(self):
        if isinstance(self.radius, bool) or not isinstance(self.radius, (int, np.integer)):
            raise ParameterError(f"radius must be an integer, got {self.radius!r}")
        if self.radius < 0:
            raise ParameterError(f"radius must be >= 0, got {self.radius}")
        if isinstance(self.intensity_levels, bool) or not isinstance(self.intensity_levels, (int, np.integer)):
            raise ParameterError(f"intensity_levels must be an integer, got {self.intensity_levels!r}")
        if not 1 <= self.intensity_levels <= MAX_INTENSITY_LEVELS:
            raise ParameterError(
                f"intensity_levels must be in [1, {MAX_INTENSITY_LEVELS}], got {self.intensity_levels}"
            )
        # accept the plain strings "copy"/"zero" as well
        object.__setattr__(self, "border_policy", BorderPolicy(self.border_policy))

    @property
    def bin_count(self) -> int:
        return self.intensity_levels + 1

    @property
    def window_size(self) -> int:
        return (2 * self.radius + 1) ** 2

    def validate_for(self, image: Image):
        """Raise ParameterError when the interior of ``image`` would be empty."""
        if 2 * self.radius >= min(image.width, image.height):
            raise ParameterError(
                f"radius {self.radius} leaves no interior in a {image.width}x{image.height} image "
                f"(need 2*radius < {min(image.width, image.height)})"
            )

    def interior_rows(self, image: Image) -> Tuple[int, int]:
        return self.radius, image.height - self.radius


def intensity_bin(r: int, g: int, b: int, levels: int) -> int:
    """Intensity class of one pixel: floor((r+g+b) * levels / 765), exact.

    The result lies in [0, levels]; ``levels`` itself only for pure white.
    """
    return (r + g + b) * levels // MAX_CHANNEL_SUM


class HistogramAccumulator:
    """Per-bin pixel counts and channel sums for one neighbourhood scan."""

    def __init__(self, intensity_levels: int):
        self.intensity_levels = intensity_levels
        self.counts = np.zeros(intensity_levels + 1, dtype=np.int64)
        self.sums = np.zeros((intensity_levels + 1, 3), dtype=np.int64)

    @property
    def bin_count(self) -> int:
        return self.intensity_levels + 1

    def reset(self):
        self.counts[:] = 0
        self.sums[:, :] = 0

    def add(self, r: int, g: int, b: int) -> int:
        """Account one pixel and return the bin it landed in."""
        index = intensity_bin(r, g, b, self.intensity_levels)
        self.counts[index] += 1
        self.sums[index, 0] += r
        self.sums[index, 1] += g
        self.sums[index, 2] += b
        return index

    def total(self) -> int:
        return int(self.counts.sum())

    def select_max_bin(self) -> Tuple[int, int]:
        return select_max_bin(self)

    def mean_of(self, index: int) -> RGB:
        """Channel-wise truncating average of the pixels in bin ``index``."""
        count = int(self.counts[index])
        if count == 0:
            raise ContractViolation(f"bin {index} is empty")
        r, g, b = (int(s) // count for s in self.sums[index])
        return r, g, b


def select_max_bin(hist: HistogramAccumulator) -> Tuple[int, int]:
    """Lowest-index bin holding the maximal count, with that count."""
    best_index = 0
    best_count = int(hist.counts[0])
    for index in range(1, hist.bin_count):
        count = int(hist.counts[index])
        if count > best_count:
            best_index, best_count = index, count

    if best_count == 0:
        raise ContractViolation("select_max_bin called on an empty histogram")
    return best_index, best_count


def filter_pixel(img: Image, x: int, y: int, params: FilterParams) -> RGB:
    """Scalar reference for one interior pixel."""
    radius = params.radius
    if not (radius <= x < img.width - radius and radius <= y < img.height - radius):
        raise ContractViolation(
            f"pixel ({x}, {y}) is outside the interior of a {img.width}x{img.height} image "
            f"at radius {radius}"
        )

    hist = HistogramAccumulator(params.intensity_levels)
    pixels = img.pixels
    for dy in range(-radius, radius + 1):
        for dx in range(-radius, radius + 1):
            r, g, b = pixels[y + dy, x + dx]
            hist.add(int(r), int(g), int(b))

    index, _ = select_max_bin(hist)
    return hist.mean_of(index)


@njit(nogil=True, cache=True)
def filter_rows(src, dst, levels, radius, row_start, row_end):
    """Filter interior rows [row_start, row_end) of ``src`` into ``dst``.

    Writes only dst[row_start:row_end, radius:width-radius]. The scratch
    histogram is private to the call and reset over its levels+1 slots per
    pixel.
    """
    width = src.shape[1]
    n_bins = levels + 1

    counts = np.zeros(n_bins, dtype=np.int64)
    sum_r = np.zeros(n_bins, dtype=np.int64)
    sum_g = np.zeros(n_bins, dtype=np.int64)
    sum_b = np.zeros(n_bins, dtype=np.int64)

    for y in range(row_start, row_end):
        for x in range(radius, width - radius):
            for i in range(n_bins):
                counts[i] = 0
                sum_r[i] = 0
                sum_g[i] = 0
                sum_b[i] = 0

            for yy in range(y - radius, y + radius + 1):
                for xx in range(x - radius, x + radius + 1):
                    r = np.int64(src[yy, xx, 0])
                    g = np.int64(src[yy, xx, 1])
                    b = np.int64(src[yy, xx, 2])
                    k = (r + g + b) * levels // 765
                    counts[k] += 1
                    sum_r[k] += r
                    sum_g[k] += g
                    sum_b[k] += b

            best = 0
            best_count = counts[0]
            for i in range(1, n_bins):
                if counts[i] > best_count:
                    best_count = counts[i]
                    best = i

            dst[y, x, 0] = sum_r[best] // best_count
            dst[y, x, 1] = sum_g[best] // best_count
            dst[y, x, 2] = sum_b[best] // best_count


def output_buffer(img: Image, policy: BorderPolicy) -> np.ndarray:
    """Fresh output array with the border already in its final state."""
    if policy is BorderPolicy.ZERO_FILL:
        return np.zeros((img.height, img.width, 3), dtype=np.uint8)
    return img.copy_pixels()


def check_image(img) -> Image:
    if not isinstance(img, Image):
        raise InputError(f"expected an Image, got {type(img).__name__}")
    return img


def apply_sequential(img: Image, params: FilterParams) -> Image:
    """Run the filter over the whole interior on the calling thread."""
    check_image(img)
    params.validate_for(img)

    dst = output_buffer(img, params.border_policy)
    row_start, row_end = params.interior_rows(img)
    filter_rows(img.pixels, dst, params.intensity_levels, params.radius, row_start, row_end)

    logger.debug(
        f"Sequential oil paint on {img.width}x{img.height}, radius={params.radius}, "
        f"levels={params.intensity_levels}, border={params.border_policy.value}"
    )
    return Image.from_array(dst, copy=False)
