import logging
from dataclasses import dataclass
from enum import IntEnum
from typing import Any, List, Sequence, Tuple, Union

import numpy as np
from scipy import ndimage

from motion_surveillance.errors import SizeMismatchError


# Configure logging
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


class _Raster:
    """Immutable 8-bit raster backed by a read-only numpy array.

    Subclasses fix the number of channels and the admissible value range.
    """

    channels: int = 1
    max_value: int = 255

    def __init__(self, data: Any):
        array = np.asarray(data)
        expected_ndim = 2 if self.channels == 1 else 3
        if array.ndim != expected_ndim:
            raise ValueError("{} expects a {}-d array, got shape {}".format(
                type(self).__name__, expected_ndim, array.shape))
        if self.channels != 1 and array.shape[2] != self.channels:
            raise ValueError("{} expects {} channels, got {}".format(
                type(self).__name__, self.channels, array.shape[2]))
        if array.shape[0] < 1 or array.shape[1] < 1:
            raise ValueError("Width and height must be at least 1, got shape {}".format(array.shape))
        if array.dtype.kind not in "biu":
            raise ValueError("{} expects integer data, got {}".format(type(self).__name__, array.dtype))
        if array.dtype != np.uint8 or self.max_value != 255:
            if array.size and (array.min() < 0 or array.max() > self.max_value):
                raise ValueError("{} values must lie in [0, {}]".format(type(self).__name__, self.max_value))
        array = np.array(array, dtype=np.uint8, copy=True)
        array.flags.writeable = False
        self._data = array

    @classmethod
    def from_values(cls, width: int, height: int, values: Sequence[int]):
        """Builds a raster from a flat row-major sequence.

        Args:
            width (int): Width in pixels.
            height (int): Height in pixels.
            values (Sequence[int]): width * height * channels values, top row first.
        """
        values = list(values)
        if len(values) != width * height * cls.channels:
            raise ValueError("Expected {} values for a {}x{} {}, got {}".format(
                width * height * cls.channels, width, height, cls.__name__, len(values)))
        shape = (height, width) if cls.channels == 1 else (height, width, cls.channels)
        return cls(np.array(values, dtype=np.int64).reshape(shape))

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def width(self) -> int:
        return self._data.shape[1]

    @property
    def height(self) -> int:
        return self._data.shape[0]

    @property
    def shape(self) -> Tuple[int, int]:
        """(height, width), the numpy ordering."""
        return self._data.shape[:2]

    def values(self) -> List[int]:
        """Row-major list of values (channels interleaved)."""
        return self._data.ravel().tolist()

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return np.array_equal(self._data, other._data)

    __hash__ = None

    def __repr__(self):
        return "{}({}x{})".format(type(self).__name__, self.width, self.height)


class Frame(_Raster):
    """Single-channel intensity image F(x, y), or B(x, y) when held as a reference."""


class DiffFrame(_Raster):
    """Per-pixel difference magnitudes R(x, y) before thresholding."""


class MotionMask(_Raster):
    """Binary motion image: 1 marks a motion pixel."""

    max_value = 1

    @classmethod
    def zeros(cls, width: int, height: int) -> "MotionMask":
        return cls(np.zeros((height, width), dtype=np.uint8))


class RgbFrame(_Raster):
    """Colour image with r, g, b interleaved per pixel."""

    channels = 3

    @classmethod
    def from_gray(cls, base: Frame) -> "RgbFrame":
        """Replicates a grayscale frame into all three channels."""
        return cls(np.repeat(base.data[:, :, np.newaxis], 3, axis=2))


@dataclass(frozen=True)
class Threshold:
    value: int = 25

    def __post_init__(self):
        if isinstance(self.value, bool) or int(self.value) != self.value or not 0 <= self.value <= 255:
            raise ValueError("Invalid threshold {}, expected an integer in [0, 255]".format(self.value))


@dataclass(frozen=True)
class Color:
    r: int
    g: int
    b: int

    def __post_init__(self):
        for channel in (self.r, self.g, self.b):
            if int(channel) != channel or not 0 <= channel <= 255:
                raise ValueError("Invalid colour channel {}, expected [0, 255]".format(channel))

    @classmethod
    def parse(cls, text: str) -> "Color":
        """Parses "r,g,b"."""
        parts = text.split(",")
        if len(parts) != 3:
            raise ValueError("Invalid colour '{}', expected r,g,b".format(text))
        return cls(*(int(part) for part in parts))

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.r, self.g, self.b)

    def __str__(self):
        return "{},{},{}".format(self.r, self.g, self.b)


def check_same_size(a: _Raster, b: _Raster, what: str = "images"):
    """Raises SizeMismatchError unless a and b share width and height."""
    if a.shape != b.shape:
        raise SizeMismatchError((a.width, a.height), (b.width, b.height), what)


def absdiff(a: Frame, b: Frame) -> DiffFrame:
    """R(x, y) = |a(x, y) - b(x, y)|.

    max - min stays inside uint8, so no intermediate widening is needed.
    """
    check_same_size(a, b, "frames")
    return DiffFrame(np.maximum(a.data, b.data) - np.minimum(a.data, b.data))


def threshold(d: DiffFrame, t: Threshold) -> MotionMask:
    """Marks pixels whose difference strictly exceeds T."""
    return MotionMask((d.data > t.value).view(np.uint8))


def motion_pixel_count(m: MotionMask) -> int:
    return int(np.count_nonzero(m.data))


def luminance(
    r: Union[int, np.ndarray],
    g: Union[int, np.ndarray],
    b: Union[int, np.ndarray],
) -> Union[int, np.ndarray]:
    """Integer Rec. 601 luma, rounded half up: (299r + 587g + 114b + 500) // 1000.

    Accepts scalars or equally shaped integer arrays.
    """
    if np.isscalar(r) and np.isscalar(g) and np.isscalar(b):
        for channel in (r, g, b):
            if not 0 <= channel <= 255:
                raise ValueError("Invalid colour channel {}, expected [0, 255]".format(channel))
        return (299 * int(r) + 587 * int(g) + 114 * int(b) + 500) // 1000
    r, g, b = (np.asarray(channel, dtype=np.int32) for channel in (r, g, b))
    return (299 * r + 587 * g + 114 * b + 500) // 1000


def to_grayscale(rgb: RgbFrame) -> Frame:
    """Reduces a colour frame to intensity with `luminance`."""
    data = rgb.data
    return Frame(luminance(data[:, :, 0], data[:, :, 1], data[:, :, 2]).astype(np.uint8))


class Connectivity(IntEnum):
    """Neighbour relation: edge-adjacent (4) or edge and diagonal (8)."""

    FOUR = 4
    EIGHT = 8

    @property
    def structure(self) -> np.ndarray:
        """The scipy.ndimage structuring element for this neighbour relation."""
        return ndimage.generate_binary_structure(2, 1 if self is Connectivity.FOUR else 2)
