import logging
from typing import List, Union

from motion_surveillance.detector import (
    BackgroundModel, DetectorConfig, detect_background_subtraction, init_background, update_background,
)
from motion_surveillance.frame_model import Frame, MotionMask
from motion_surveillance.template.detector import MotionDetector, stats_time_accumulator


# Configure logging
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


class BackgroundSubtraction(MotionDetector):
    """Background modeling: every frame is compared with a stored reference frame.

    Without an explicit reference, the first `background_frames` frames of the
    stream are averaged into one; they report no motion while being collected.
    """

    name = "background_subtraction"

    def __init__(
        self,
        config: Union[DetectorConfig, None]=None,
        enable_stats: bool=False,
        reference: Union[Frame, None]=None,
    ):
        super().__init__(config, enable_stats)
        self._initial_reference = reference
        self.reset()

    def reset(self):
        self._pending: List[Frame] = []
        self.model = None
        if self._initial_reference is not None:
            self.model = BackgroundModel(self._initial_reference, self.config)

    @stats_time_accumulator('background_update_time')
    def _learn(self, frame: Frame):
        self.model = update_background(self.model, frame)

    def detect(self, frame: Frame) -> MotionMask:
        if self.model is None:
            self._pending.append(frame)
            if len(self._pending) < self.config.background_frames:
                return MotionMask.zeros(frame.width, frame.height)
            self.model = init_background(self._pending, self.config)
            self._pending = []
        mask = detect_background_subtraction(self.model, frame)
        if self.config.update_alpha > 0.0:
            self._learn(frame)
        return mask
