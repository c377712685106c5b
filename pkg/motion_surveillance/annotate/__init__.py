from .blobs import Blob, extract_blobs, label_components
from .grid import GridMap, grid_motion
from .highlight import (
    draw_blob_boxes, extract_border, highlight_grid, highlight_motion_area, highlight_motion_border,
)
