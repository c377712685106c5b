from .config import DetectorConfig
from .background import BackgroundModel, init_background, detect_background_subtraction, update_background
from .frame_difference import FrameDiffState, detect_frame_difference
from .denoise import denoise
