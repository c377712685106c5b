import logging
from dataclasses import dataclass, field
from typing import Tuple, Union

from motion_surveillance.detector.config import DetectorConfig
from motion_surveillance.frame_model import Frame, MotionMask, absdiff, check_same_size, threshold


# Configure logging
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


@dataclass(frozen=True)
class FrameDiffState:
    """The last frame seen on a stream, if any."""

    previous: Union[Frame, None] = None
    config: DetectorConfig = field(default_factory=DetectorConfig)


def detect_frame_difference(state: FrameDiffState, current: Frame) -> Tuple[MotionMask, FrameDiffState]:
    """Thresholds the difference of two consecutive frames.

    The first frame of a stream yields an all-zero mask so that every frame
    produces exactly one result.

    Args:
        state (FrameDiffState): Stream state before this frame.
        current (Frame): The next frame.

    Returns:
        Tuple[MotionMask, FrameDiffState]: The mask and the state holding `current`.
    """
    next_state = FrameDiffState(current, state.config)
    if state.previous is None:
        logger.debug("First frame of stream, no previous frame to difference")
        return MotionMask.zeros(current.width, current.height), next_state
    check_same_size(current, state.previous, "consecutive frames")
    return threshold(absdiff(current, state.previous), state.config.threshold), next_state
