import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

import numpy as np

from motion_surveillance.detector.config import DetectorConfig
from motion_surveillance.errors import SizeMismatchError
from motion_surveillance.frame_model import Frame, MotionMask, absdiff, check_same_size, threshold


# Configure logging
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


@dataclass(frozen=True)
class BackgroundModel:
    """The stored reference frame B(x, y) and the parameters it is compared with."""

    reference: Frame
    config: DetectorConfig = field(default_factory=DetectorConfig)


def _round_half_up(numerator: np.ndarray, denominator: int) -> np.ndarray:
    """floor(numerator / denominator + 1/2) for non-negative integer arrays."""
    return (2 * numerator + denominator) // (2 * denominator)


def init_background(frames: Sequence[Frame], config: DetectorConfig=None) -> BackgroundModel:
    """Acquires the reference frame as the per-pixel rounded mean of the given frames.

    Args:
        frames (Sequence[Frame]): Object-free frames of the scene.
        config (DetectorConfig, optional): Detection parameters. Defaults to DetectorConfig().

    Returns:
        BackgroundModel: The model holding the mean frame.
    """
    frames = list(frames)
    if not frames:
        raise ValueError("Cannot acquire a background from an empty sequence")
    first = frames[0]
    total = np.zeros(first.shape, dtype=np.int64)
    for frame in frames:
        if frame.shape != first.shape:
            raise SizeMismatchError((first.width, first.height), (frame.width, frame.height), "background frames")
        total += frame.data
    reference = Frame(_round_half_up(total, len(frames)))
    logger.info("Background acquired from {} frame(s) of {}x{}".format(len(frames), first.width, first.height))
    return BackgroundModel(reference, config or DetectorConfig())


def detect_background_subtraction(model: BackgroundModel, current: Frame) -> MotionMask:
    """Subtracts the reference from the current frame, then applies the threshold.

    The model is not modified.
    """
    check_same_size(current, model.reference, "current frame and background")
    return threshold(absdiff(current, model.reference), model.config.threshold)


def update_background(model: BackgroundModel, current: Frame) -> BackgroundModel:
    """Blends the current frame into the reference: B' = round((1 - a) * B + a * F).

    Alpha is taken as the exact decimal it prints as (0.1 is 1/10), and the blend
    is rounded half up in integer arithmetic, so results are bit-exact.

    Args:
        model (BackgroundModel): The current model.
        current (Frame): The frame to learn from.

    Returns:
        BackgroundModel: A new model; the input model is unchanged.
    """
    check_same_size(current, model.reference, "current frame and background")
    alpha = model.config.update_alpha
    if alpha == 0.0:
        return model
    if alpha == 1.0:
        return replace(model, reference=current)
    weight = Fraction(str(alpha))
    numerator, denominator = weight.numerator, weight.denominator
    # Python ints once 2 * 255 * denominator no longer fits in int64
    dtype = np.int64 if denominator < 2 ** 52 else object
    blended = ((denominator - numerator) * model.reference.data.astype(dtype)
               + numerator * current.data.astype(dtype))
    reference = _round_half_up(blended, denominator).astype(np.int64)
    return replace(model, reference=Frame(reference))
