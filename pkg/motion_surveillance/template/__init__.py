from .detector import MotionDetector, stats_time_accumulator, stats_value_accumulator
