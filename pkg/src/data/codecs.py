"""
Lossless raster codecs: binary PPM (P6) and, through Pillow, 8-bit RGB PNG.
"""

import io
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple, Union

import numpy as np
from PIL import Image as PILImage
from PIL import UnidentifiedImageError

from filters.errors import ImageParseError
from filters.oil_paint import Image

logger = logging.getLogger(__name__)

PPM_MAGIC = b"P6"
PPM_MAXVAL = 255
PNM_WHITESPACE = b" \t\n\r\v\f"
MAX_PAYLOAD_BYTES = 2 ** 31

PathLike = Union[str, Path]


@dataclass(frozen=True)
class PixmapHeader:
    """Parsed P6 header."""

    width: int
    height: int
    maxval: int = PPM_MAXVAL
    magic: str = "P6"

    @property
    def payload_size(self) -> int:
        return self.width * self.height * 3


def _skip_separators(data: bytes, pos: int) -> int:
    size = len(data)
    while pos < size:
        byte = data[pos:pos + 1]
        if byte in PNM_WHITESPACE:
            pos += 1
        elif byte == b"#":
            while pos < size and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
        else:
            break
    return pos


def _read_number(data: bytes, pos: int, field: str) -> Tuple[int, int]:
    pos = _skip_separators(data, pos)
    start = pos
    while pos < len(data) and data[pos:pos + 1] not in PNM_WHITESPACE and data[pos:pos + 1] != b"#":
        pos += 1

    token = data[start:pos]
    if not token:
        raise ImageParseError(field, "missing value (truncated header)")
    if not token.isdigit():
        raise ImageParseError(field, f"not a decimal integer: {token[:16]!r}")
    return int(token), pos


def read_pnm_header(data: bytes) -> Tuple[PixmapHeader, int]:
    """Parse a P6 header; returns the header and the payload offset."""
    if data[:2] != PPM_MAGIC:
        raise ImageParseError("magic", f"expected P6, got {data[:2]!r}")
    pos = 2
    if pos < len(data) and data[pos:pos + 1] not in PNM_WHITESPACE and data[pos:pos + 1] != b"#":
        raise ImageParseError("magic", f"expected P6, got {data[:3]!r}")

    width, pos = _read_number(data, pos, "width")
    if width < 1:
        raise ImageParseError("width", f"must be positive, got {width}")

    height, pos = _read_number(data, pos, "height")
    if height < 1:
        raise ImageParseError("height", f"must be positive, got {height}")

    if width * height * 3 > MAX_PAYLOAD_BYTES:
        raise ImageParseError("dimensions", f"{width}x{height} exceeds {MAX_PAYLOAD_BYTES} payload bytes")

    maxval, pos = _read_number(data, pos, "maxval")
    if maxval != PPM_MAXVAL:
        raise ImageParseError("maxval", f"unsupported maxval {maxval} (only 255)")

    # exactly one whitespace byte separates maxval from the payload
    if pos >= len(data) or data[pos:pos + 1] not in PNM_WHITESPACE:
        raise ImageParseError("payload", "missing separator after maxval")

    return PixmapHeader(width=width, height=height, maxval=maxval), pos + 1


def read_ppm(data: bytes) -> Image:
    """Decode a binary PPM into an Image (R,G,B as stored)."""
    header, offset = read_pnm_header(data)
    payload = data[offset:]

    if len(payload) < header.payload_size:
        raise ImageParseError(
            "payload",
            f"truncated: {len(payload)} of {header.payload_size} bytes for {header.width}x{header.height}",
        )
    if len(payload) > header.payload_size:
        raise ImageParseError("payload", f"{len(payload) - header.payload_size} trailing bytes")

    return Image.from_bytes(header.width, header.height, payload)


def write_ppm(img: Image) -> bytes:
    """Canonical P6: no comments, single spaces/newlines, raw payload."""
    header = f"P6\n{img.width} {img.height}\n{PPM_MAXVAL}\n".encode("ascii")
    return header + img.data


def read_png(data: bytes) -> Image:
    try:
        with PILImage.open(io.BytesIO(data)) as png:
            if png.format != "PNG":
                raise ImageParseError("format", f"expected PNG, got {png.format}")
            if png.mode != "RGB":
                raise ImageParseError("mode", f"unsupported PNG mode {png.mode} (only 8-bit RGB)")
            # 16-bit RGB also opens as mode RGB; the decoder raw mode keeps the sample depth
            rawmode = png.tile[0][3] if png.tile else None
            if rawmode != "RGB":
                raise ImageParseError("mode", f"unsupported PNG sample layout {rawmode} (only 8-bit RGB)")
            pixels = np.asarray(png, dtype=np.uint8)
    except UnidentifiedImageError as e:
        raise ImageParseError("format", f"not a readable PNG: {e}") from e

    return Image.from_array(pixels)


def write_png(img: Image) -> bytes:
    buffer = io.BytesIO()
    PILImage.fromarray(img.copy_pixels()).save(buffer, format="PNG")
    return buffer.getvalue()


def _is_png(path: Path) -> bool:
    return path.suffix.lower() == ".png"


def load_image(path: PathLike) -> Image:
    """Read a raster file; ``.png`` goes through Pillow, anything else is PPM."""
    file_path = Path(path)
    data = file_path.read_bytes()

    try:
        img = read_png(data) if _is_png(file_path) else read_ppm(data)
    except ImageParseError as e:
        raise ImageParseError(e.field, e.message, path=str(file_path)) from e

    logger.info(f"Loaded {img.width}x{img.height} image from {file_path}")
    return img


def save_image(path: PathLike, img: Image, fmt: Optional[str] = None):
    file_path = Path(path)
    use_png = fmt == "png" if fmt else _is_png(file_path)
    payload = write_png(img) if use_png else write_ppm(img)

    file_path.write_bytes(payload)
    logger.info(f"Wrote {img.width}x{img.height} image to {file_path} ({len(payload)} bytes)")
