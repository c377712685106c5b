class MotionSurveillanceError(Exception):
    """Base class for all errors raised by motion_surveillance."""


class SizeMismatchError(MotionSurveillanceError, ValueError):
    """Two images that must share dimensions do not."""

    def __init__(self, first_shape, second_shape, what: str = "images"):
        self.first_shape = tuple(first_shape)
        self.second_shape = tuple(second_shape)
        super().__init__(
            "Size mismatch between {}: {} vs {}".format(what, self.first_shape, self.second_shape)
        )


class NetpbmError(MotionSurveillanceError, ValueError):
    """Malformed PGM/PPM data."""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__("{} (at byte offset {})".format(message, offset))


class SequenceError(MotionSurveillanceError):
    """A frame sequence cannot be read as one consistent stream."""


class ConfigError(MotionSurveillanceError, ValueError):
    """Invalid or contradictory pipeline configuration."""
