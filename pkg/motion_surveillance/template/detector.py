import logging
import time
from abc import ABC, abstractmethod
from typing import Any, Dict, Iterable, List, Union

from motion_surveillance.detector.config import DetectorConfig
from motion_surveillance.detector.denoise import denoise
from motion_surveillance.frame_model import Frame, MotionMask, motion_pixel_count


# Configure logging
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


def stats_time_accumulator(name):
    def decorator(method):
        def wrapper(self, *args, **kwargs):
            if self.stats_enabled:
                start_time = time.perf_counter()
                result = method(self, *args, **kwargs)
                end_time = time.perf_counter()
                self.stats[name] = self.stats.get(name, 0) + (end_time - start_time)
            else:
                result = method(self, *args, **kwargs)
            return result
        wrapper.__name__ = method.__name__
        wrapper.__doc__ = method.__doc__
        return wrapper
    return decorator

def stats_value_accumulator(name, value_map=None):
    def decorator(method):
        def wrapper(self, *args, **kwargs):
            result = method(self, *args, **kwargs)
            if self.stats_enabled:
                mapped_result = value_map(result) if value_map else result
                self.stats[name] = self.stats.get(name, 0) + mapped_result
            return result
        wrapper.__name__ = method.__name__
        wrapper.__doc__ = method.__doc__
        return wrapper
    return decorator


class MotionDetector(ABC):
    """A stateful per-stream driver around the pure detection operations.

    One instance serves one stream and must be fed its frames in order.

    Args:
        ABC: Abstract base class
    """

    name: str = "abstract"

    def __init__(self, config: Union[DetectorConfig, None]=None, enable_stats: bool=False):
        """Initializes the detector.

        Args:
            config (DetectorConfig, optional): Detection parameters. Defaults to DetectorConfig().
            enable_stats (bool): Indicates whether statistics should be generated.
        """
        self.config = config or DetectorConfig()
        self.stats_enabled = enable_stats
        self.stats: Dict[str, Any] = {'method': self.name, 'frames': 0}

    @stats_value_accumulator('frames', lambda _: 1)
    @stats_value_accumulator('motion_pixels', motion_pixel_count)
    @stats_time_accumulator('detection_time')
    def process(self, frame: Frame) -> MotionMask:
        """Detects motion in the next frame and removes components below min_blob_size.

        Args:
            frame (Frame): The next frame of the stream.

        Returns:
            MotionMask: The denoised motion mask.
        """
        mask = self.detect(frame)
        return denoise(mask, self.config.min_blob_size, self.config.connectivity)

    def process_all(self, frames: Iterable[Frame]) -> List[MotionMask]:
        return [self.process(frame) for frame in frames]

    @abstractmethod
    def detect(self, frame: Frame) -> MotionMask:
        """Raw thresholded mask for the next frame, advancing the stream state.

        Args:
            frame (Frame): The next frame of the stream.
        """
        pass

    @abstractmethod
    def reset(self):
        """Forgets all stream state."""
        pass
