import logging
from dataclasses import dataclass
from typing import Any, Dict, Tuple

import numpy as np

from motion_surveillance.frame_model import MotionMask


# Configure logging
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


@dataclass(frozen=True, eq=False)
class GridMap:
    """Per-cell motion over a rows x cols partition of a mask.

    counts and levels are (rows, cols) arrays; row_edges and col_edges hold the
    rows + 1 and cols + 1 pixel boundaries of the cells.
    """

    rows: int
    cols: int
    counts: np.ndarray
    levels: np.ndarray
    row_edges: Tuple[int, ...]
    col_edges: Tuple[int, ...]

    def cell_bounds(self, i: int, j: int) -> Tuple[int, int, int, int]:
        """(x_min, y_min, x_max, y_max), inclusive, of cell (i, j)."""
        return (self.col_edges[j], self.row_edges[i], self.col_edges[j + 1] - 1, self.row_edges[i + 1] - 1)

    def cell_areas(self) -> np.ndarray:
        return np.outer(np.diff(self.row_edges), np.diff(self.col_edges))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "counts": self.counts.ravel().tolist(),
            "levels": [round(level, 6) for level in self.levels.ravel().tolist()],
        }


def grid_edges(size: int, cells: int) -> Tuple[int, ...]:
    """Floor partition: boundary k sits at floor(k * size / cells)."""
    return tuple((k * size) // cells for k in range(cells + 1))


def grid_motion(m: MotionMask, rows: int, cols: int) -> GridMap:
    """Divides the mask into rows x cols cells and measures the motion level of each.

    Args:
        m (MotionMask): The motion mask.
        rows (int): Number of cell rows, 1 <= rows <= height.
        cols (int): Number of cell columns, 1 <= cols <= width.

    Returns:
        GridMap: Motion pixel counts and count / cell area per cell.
    """
    if not 1 <= rows <= m.height or not 1 <= cols <= m.width:
        raise ValueError("Invalid grid {}x{} for a {}x{} mask".format(rows, cols, m.width, m.height))
    row_edges = grid_edges(m.height, rows)
    col_edges = grid_edges(m.width, cols)
    per_row_band = np.add.reduceat(m.data.astype(np.int64), row_edges[:-1], axis=0)
    counts = np.add.reduceat(per_row_band, col_edges[:-1], axis=1)
    areas = np.outer(np.diff(row_edges), np.diff(col_edges))
    return GridMap(rows, cols, counts, counts / areas, row_edges, col_edges)
