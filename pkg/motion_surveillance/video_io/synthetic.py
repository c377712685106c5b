"""Camera-free test scenes: a bright square moving over a flat background.

Noise is salt-and-pepper drawn from numpy's PCG64 generator (a 128-bit linear
congruential generator with a permuted output) seeded with the scene seed, so a
scene is bit-for-bit reproducible. Ground-truth masks mark the square only;
noise pixels are never motion.
"""

import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Iterator, Tuple

import numpy as np

from motion_surveillance.frame_model import Frame, MotionMask


# Configure logging
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


@dataclass(frozen=True)
class SquareSpec:
    size: int = 16
    intensity: int = 200
    x0: int = 8
    y0: int = 56
    vx: int = 1
    vy: int = 0


@dataclass(frozen=True)
class NoiseSpec:
    salt_pepper_prob: float = 0.005
    seed: int = 0


@dataclass(frozen=True)
class SceneSpec:
    width: int = 128
    height: int = 128
    frame_count: int = 100
    background_level: int = 64
    square: SquareSpec = field(default_factory=SquareSpec)
    noise: NoiseSpec = field(default_factory=NoiseSpec)

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("Invalid scene size {}x{}".format(self.width, self.height))
        if self.frame_count < 1:
            raise ValueError("Invalid frame_count {}, expected >= 1".format(self.frame_count))
        for name, level in (("background_level", self.background_level), ("square intensity", self.square.intensity)):
            if not 0 <= level <= 255:
                raise ValueError("Invalid {} {}, expected [0, 255]".format(name, level))
        if self.square.size < 1:
            raise ValueError("Invalid square size {}".format(self.square.size))
        if self.square.size > self.width or self.square.size > self.height:
            raise ValueError("Square of size {} does not fit a {}x{} image".format(
                self.square.size, self.width, self.height))
        if not 0.0 <= self.noise.salt_pepper_prob <= 1.0:
            raise ValueError("Invalid salt_pepper_prob {}, expected [0, 1]".format(self.noise.salt_pepper_prob))
        if not 0 <= self.noise.seed < 2 ** 64:
            raise ValueError("Invalid seed {}, expected a 64-bit unsigned integer".format(self.noise.seed))

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, values: Dict[str, Any]) -> "SceneSpec":
        values = dict(values)
        square = SquareSpec(**values.pop("square", {}))
        noise = NoiseSpec(**values.pop("noise", {}))
        return cls(square=square, noise=noise, **values)


def square_position(spec: SceneSpec, t: int) -> Tuple[int, int]:
    """Top-left corner of the square at frame t, clamped so the square stays inside the image."""
    square = spec.square
    x = min(max(square.x0 + square.vx * t, 0), spec.width - square.size)
    y = min(max(square.y0 + square.vy * t, 0), spec.height - square.size)
    return x, y


def background_frame(spec: SceneSpec) -> Frame:
    """The clean, object-free background of the scene."""
    return Frame(np.full((spec.height, spec.width), spec.background_level, dtype=np.uint8))


def generate_scene(spec: SceneSpec) -> Iterator[Tuple[Frame, MotionMask]]:
    """Yields (frame, ground-truth mask) for each frame of the scene.

    Args:
        spec (SceneSpec): The scene description, including the noise seed.

    Returns:
        Iterator[Tuple[Frame, MotionMask]]: frame_count pairs in order.
    """
    rng = np.random.Generator(np.random.PCG64(spec.noise.seed))
    size = spec.square.size
    probability = spec.noise.salt_pepper_prob
    shape = (spec.height, spec.width)
    logger.debug("Generating {} frames of {}x{}".format(spec.frame_count, spec.width, spec.height))
    for t in range(spec.frame_count):
        x, y = square_position(spec, t)
        truth = np.zeros(shape, dtype=np.uint8)
        truth[y:y + size, x:x + size] = 1
        image = np.full(shape, spec.background_level, dtype=np.uint8)
        image[truth == 1] = spec.square.intensity
        if probability > 0.0:
            flipped = rng.random(shape) < probability
            salt = rng.random(shape) < 0.5
            image[flipped & salt] = 255
            image[flipped & ~salt] = 0
        yield Frame(image), MotionMask(truth)
