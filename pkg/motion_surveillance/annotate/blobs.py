import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

import numpy as np
from scipy import ndimage

from motion_surveillance.frame_model import Connectivity, MotionMask


# Configure logging
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


@dataclass(frozen=True)
class Blob:
    """One connected component of motion pixels.

    bbox is (x_min, y_min, x_max, y_max) with inclusive pixel coordinates.
    """

    label: int
    area: int
    bbox: Tuple[int, int, int, int]

    def __post_init__(self):
        x_min, y_min, x_max, y_max = self.bbox
        if x_min > x_max or y_min > y_max:
            raise ValueError("Invalid bounding box {}".format(self.bbox))
        if not 1 <= self.area <= (x_max - x_min + 1) * (y_max - y_min + 1):
            raise ValueError("Area {} does not fit bounding box {}".format(self.area, self.bbox))

    def to_dict(self) -> Dict[str, Any]:
        return {"label": self.label, "area": self.area, "bbox": list(self.bbox)}


def label_components(m: MotionMask, connectivity: Connectivity) -> Tuple[np.ndarray, int]:
    """Labels the connected components of a mask.

    scipy.ndimage.label numbers components in raster order of their first pixel,
    starting at 1; background stays 0.

    Args:
        m (MotionMask): The mask to label.
        connectivity (Connectivity): Neighbour relation.

    Returns:
        Tuple[np.ndarray, int]: The label image and the number of components.
    """
    labels, count = ndimage.label(m.data, structure=Connectivity(connectivity).structure)
    return labels, int(count)


def component_areas(labels: np.ndarray, count: int) -> np.ndarray:
    """Pixel count per label; index 0 is the background."""
    return np.bincount(labels.ravel(), minlength=count + 1)


def extract_blobs(m: MotionMask, connectivity: Connectivity=Connectivity.EIGHT, min_size: int=0) -> List[Blob]:
    """Counts neighbouring motion pixels into blobs with tight bounding boxes.

    Args:
        m (MotionMask): The motion mask.
        connectivity (Connectivity): Neighbour relation. Defaults to 8-connectivity.
        min_size (int): Components smaller than max(min_size, 1) are skipped. Defaults to 0.

    Returns:
        List[Blob]: Blobs ordered by label.
    """
    if min_size < 0:
        raise ValueError("Invalid min_size {}, expected >= 0".format(min_size))
    labels, count = label_components(m, connectivity)
    if count == 0:
        return []
    areas = component_areas(labels, count)
    blobs = []
    for index, region in enumerate(ndimage.find_objects(labels), start=1):
        area = int(areas[index])
        if area < max(min_size, 1):
            continue
        rows, cols = region
        blobs.append(Blob(index, area, (cols.start, rows.start, cols.stop - 1, rows.stop - 1)))
    logger.debug("Extracted {} of {} components".format(len(blobs), count))
    return blobs
