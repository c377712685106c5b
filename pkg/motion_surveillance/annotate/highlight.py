import logging
from typing import Iterable, List

import numpy as np
from scipy import ndimage

from motion_surveillance.annotate.blobs import Blob
from motion_surveillance.annotate.grid import GridMap
from motion_surveillance.frame_model import (
    Color, Connectivity, Frame, MotionMask, RgbFrame, check_same_size,
)


# Configure logging
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


# The paint_* helpers draw in place on an (height, width, 3) uint8 canvas so that
# several modes can be layered onto one image.

def gray_canvas(base: Frame) -> np.ndarray:
    return np.repeat(base.data[:, :, np.newaxis], 3, axis=2)


def paint_mask(canvas: np.ndarray, m: MotionMask, c: Color):
    canvas[m.data == 1] = c.as_tuple()


def paint_rectangle(canvas: np.ndarray, bbox, c: Color):
    """1-pixel outline of an inclusive (x_min, y_min, x_max, y_max) box."""
    x_min, y_min, x_max, y_max = bbox
    height, width = canvas.shape[:2]
    if not (0 <= x_min <= x_max < width and 0 <= y_min <= y_max < height):
        raise ValueError("Box {} lies outside the {}x{} image".format(tuple(bbox), width, height))
    color = c.as_tuple()
    canvas[y_min, x_min:x_max + 1] = color
    canvas[y_max, x_min:x_max + 1] = color
    canvas[y_min:y_max + 1, x_min] = color
    canvas[y_min:y_max + 1, x_max] = color


def paint_blob_boxes(canvas: np.ndarray, blobs: Iterable[Blob], c: Color):
    for blob in blobs:
        paint_rectangle(canvas, blob.bbox, c)


def paint_grid(canvas: np.ndarray, grid: GridMap, c: Color, min_level: float=0.0):
    for i in range(grid.rows):
        for j in range(grid.cols):
            if grid.counts[i, j] > 0 and grid.levels[i, j] >= min_level:
                paint_rectangle(canvas, grid.cell_bounds(i, j), c)


def highlight_motion_area(base: Frame, m: MotionMask, c: Color) -> RgbFrame:
    """Paints motion pixels with the given colour over the grayscale frame."""
    check_same_size(base, m, "frame and mask")
    canvas = gray_canvas(base)
    paint_mask(canvas, m, c)
    return RgbFrame(canvas)


def extract_border(m: MotionMask, connectivity: Connectivity=Connectivity.FOUR) -> MotionMask:
    """Motion pixels with at least one background neighbour.

    Positions outside the image count as background.
    """
    interior = ndimage.binary_erosion(m.data, structure=Connectivity(connectivity).structure, border_value=0)
    return MotionMask((m.data == 1) & ~interior)


def highlight_motion_border(
    base: Frame,
    m: MotionMask,
    c: Color,
    connectivity: Connectivity=Connectivity.FOUR,
) -> RgbFrame:
    """Like highlight_motion_area, but only the border of the moving target is painted."""
    return highlight_motion_area(base, extract_border(m, connectivity), c)


def highlight_grid(base: Frame, grid: GridMap, c: Color, min_level: float=0.0) -> RgbFrame:
    """Outlines every cell that contains motion and whose level reaches min_level.

    Args:
        base (Frame): Grayscale frame to draw on.
        grid (GridMap): Grid computed from a mask of the same size.
        c (Color): Outline colour.
        min_level (float): Smallest motion level (fraction of cell area) to outline. Defaults to 0.0.
    """
    if grid.row_edges[-1] != base.height or grid.col_edges[-1] != base.width:
        raise ValueError("Grid does not cover a {}x{} frame".format(base.width, base.height))
    canvas = gray_canvas(base)
    paint_grid(canvas, grid, c, min_level)
    return RgbFrame(canvas)


def draw_blob_boxes(base: Frame, blobs: List[Blob], c: Color) -> RgbFrame:
    """Draws each blob's bounding box as a 1-pixel outline; later blobs draw over earlier ones."""
    canvas = gray_canvas(base)
    paint_blob_boxes(canvas, blobs, c)
    return RgbFrame(canvas)
