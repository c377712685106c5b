from .background_subtraction import BackgroundSubtraction
from .frame_difference import FrameDifference

METHODS = {
    BackgroundSubtraction.name: BackgroundSubtraction,
    FrameDifference.name: FrameDifference,
}
