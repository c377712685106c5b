from .netpbm import (
    read_pgm, write_pgm, read_ppm, write_ppm, read_mask_pgm, write_mask_pgm,
    load_frame, load_mask, save_frame, save_rgb, save_mask,
)
from .sequence import SequenceSource, list_images, read_truth_masks
from .synthetic import SceneSpec, SquareSpec, NoiseSpec, background_frame, generate_scene, square_position
