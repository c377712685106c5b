"""Binary PGM (P5) and PPM (P6) codec, maxval 255 only.

Header grammar: magic, then width, height and maxval as ASCII decimals separated
by whitespace, '#' comments running to the end of a line, then exactly one
whitespace byte before the raster.
"""

import logging
from pathlib import Path
from typing import Tuple, Union

import numpy as np

from motion_surveillance.errors import NetpbmError
from motion_surveillance.frame_model import Frame, MotionMask, RgbFrame, to_grayscale


# Configure logging
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

WHITESPACE = b" \t\n\r\v\f"
PGM_MAGIC = b"P5"
PPM_MAGIC = b"P6"


def _parse_header(data: bytes, magic: bytes) -> Tuple[int, int, int]:
    """Parses a header and returns (width, height, raster offset).

    Args:
        data (bytes): The whole file.
        magic (bytes): Expected magic number.
    """
    if data[:2] != magic:
        raise NetpbmError("Expected magic {!r}, found {!r}".format(magic.decode(), data[:2]), 0)
    separator = data[2:3]
    if not separator or (separator not in WHITESPACE and separator != b"#"):
        raise NetpbmError("Expected whitespace after magic {!r}".format(magic.decode()), 2)
    pos = 2
    fields = []
    while len(fields) < 3:
        # Skip whitespace and comments between fields
        while pos < len(data):
            byte = data[pos:pos + 1]
            if byte in WHITESPACE:
                pos += 1
            elif byte == b"#":
                end = data.find(b"\n", pos)
                pos = len(data) if end < 0 else end + 1
            else:
                break
        if pos >= len(data):
            raise NetpbmError("Truncated header", pos)
        start = pos
        while pos < len(data) and data[pos:pos + 1] not in WHITESPACE and data[pos:pos + 1] != b"#":
            pos += 1
        token = data[start:pos]
        if not token.isdigit():
            raise NetpbmError("Non-numeric header field {!r}".format(token), start)
        fields.append((int(token), start))
    if pos >= len(data) or data[pos:pos + 1] not in WHITESPACE:
        raise NetpbmError("Expected a single whitespace byte after maxval", pos)
    pos += 1

    (width, width_at), (height, height_at), (maxval, maxval_at) = fields
    if width < 1:
        raise NetpbmError("Invalid width {}".format(width), width_at)
    if height < 1:
        raise NetpbmError("Invalid height {}".format(height), height_at)
    if maxval != 255:
        raise NetpbmError("Unsupported maxval {}, only 255 is accepted".format(maxval), maxval_at)
    return width, height, pos


def _read_raster(data: bytes, magic: bytes, channels: int) -> Tuple[np.ndarray, int]:
    width, height, offset = _parse_header(data, magic)
    size = width * height * channels
    if len(data) - offset < size:
        raise NetpbmError("Truncated raster: expected {} bytes, found {}".format(size, len(data) - offset), len(data))
    if len(data) - offset > size:
        logger.debug("Ignoring {} trailing bytes".format(len(data) - offset - size))
    raster = np.frombuffer(data, dtype=np.uint8, count=size, offset=offset)
    shape = (height, width) if channels == 1 else (height, width, channels)
    return raster.reshape(shape), offset


def read_pgm(data: bytes) -> Frame:
    return Frame(_read_raster(data, PGM_MAGIC, 1)[0])


def read_ppm(data: bytes) -> RgbFrame:
    return RgbFrame(_read_raster(data, PPM_MAGIC, 3)[0])


def write_pgm(f: Frame) -> bytes:
    return b"P5\n%d %d\n255\n" % (f.width, f.height) + f.data.tobytes()


def write_ppm(rgb: RgbFrame) -> bytes:
    return b"P6\n%d %d\n255\n" % (rgb.width, rgb.height) + rgb.data.tobytes()


def read_mask_pgm(data: bytes) -> MotionMask:
    """Decodes a ground-truth mask: 255 is motion, 0 is background."""
    raster, offset = _read_raster(data, PGM_MAGIC, 1)
    invalid = np.flatnonzero((raster != 0) & (raster != 255))
    if invalid.size:
        raise NetpbmError("Mask values must be 0 or 255", offset + int(invalid[0]))
    return MotionMask(raster == 255)


def write_mask_pgm(m: MotionMask) -> bytes:
    return write_pgm(Frame(m.data * np.uint8(255)))


def load_frame(path: Union[str, Path]) -> Frame:
    """Reads a PGM frame, or a PPM frame reduced to intensity."""
    data = Path(path).read_bytes()
    if data[:2] == PPM_MAGIC:
        return to_grayscale(read_ppm(data))
    return read_pgm(data)


def load_mask(path: Union[str, Path]) -> MotionMask:
    return read_mask_pgm(Path(path).read_bytes())


def save_frame(path: Union[str, Path], f: Frame):
    Path(path).write_bytes(write_pgm(f))


def save_rgb(path: Union[str, Path], rgb: RgbFrame):
    Path(path).write_bytes(write_ppm(rgb))


def save_mask(path: Union[str, Path], m: MotionMask):
    Path(path).write_bytes(write_mask_pgm(m))
