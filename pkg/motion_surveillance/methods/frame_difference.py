from typing import Union

from motion_surveillance.detector import DetectorConfig, FrameDiffState, detect_frame_difference
from motion_surveillance.frame_model import Frame, MotionMask
from motion_surveillance.template.detector import MotionDetector


class FrameDifference(MotionDetector):
    """Two-frame differencing: each frame is compared with its predecessor."""

    name = "frame_difference"

    def __init__(self, config: Union[DetectorConfig, None]=None, enable_stats: bool=False):
        super().__init__(config, enable_stats)
        self.reset()

    def reset(self):
        self.state = FrameDiffState(None, self.config)

    def detect(self, frame: Frame) -> MotionMask:
        mask, self.state = detect_frame_difference(self.state, frame)
        return mask
