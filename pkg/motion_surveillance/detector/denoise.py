import logging

from motion_surveillance.annotate.blobs import component_areas, label_components
from motion_surveillance.frame_model import Connectivity, MotionMask


# Configure logging
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


def denoise(m: MotionMask, min_blob_size: int, connectivity: Connectivity=Connectivity.EIGHT) -> MotionMask:
    """Removes every connected component whose area is below min_blob_size.

    Args:
        m (MotionMask): The raw motion mask.
        min_blob_size (int): Smallest component area that survives. 0 and 1 keep everything.
        connectivity (Connectivity): Neighbour relation. Defaults to 8-connectivity.

    Returns:
        MotionMask: The mask restricted to components of area >= min_blob_size.
    """
    if min_blob_size < 0:
        raise ValueError("Invalid min_blob_size {}, expected >= 0".format(min_blob_size))
    if min_blob_size <= 1:
        return m
    labels, count = label_components(m, connectivity)
    if count == 0:
        return m
    keep = component_areas(labels, count) >= min_blob_size
    keep[0] = False
    logger.debug("Denoise kept {} of {} components".format(int(keep.sum()), count))
    return MotionMask(keep[labels])
