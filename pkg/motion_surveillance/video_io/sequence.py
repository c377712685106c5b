import logging
from pathlib import Path
from typing import Iterator, List, Tuple, Union

from motion_surveillance.errors import NetpbmError, SequenceError
from motion_surveillance.frame_model import Frame, MotionMask
from motion_surveillance.video_io.netpbm import load_frame, load_mask


# Configure logging
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

FRAME_SUFFIXES = (".pgm", ".ppm")


def list_images(directory: Union[str, Path], suffixes=FRAME_SUFFIXES) -> List[Path]:
    """Image files of a directory, sorted lexicographically by file name."""
    directory = Path(directory)
    if not directory.is_dir():
        raise SequenceError("Not a directory: {}".format(directory))
    return sorted((p for p in directory.iterdir() if p.is_file() and p.suffix.lower() in suffixes),
                  key=lambda p: p.name)


class SequenceSource:
    """An ordered list of frame files read as one stream.

    Dimensions are fixed by the first frame read; every later frame must match.
    """

    def __init__(self, paths: List[Path]):
        if not paths:
            raise SequenceError("Frame sequence is empty")
        self.paths = [Path(p) for p in paths]
        self.dimensions: Union[Tuple[int, int], None] = None

    @classmethod
    def from_directory(cls, directory: Union[str, Path]) -> "SequenceSource":
        return cls(list_images(directory))

    @classmethod
    def from_manifest(cls, manifest: Union[str, Path]) -> "SequenceSource":
        """Newline-separated paths; relative paths are resolved against the manifest's directory."""
        manifest = Path(manifest)
        try:
            lines = manifest.read_text().splitlines()
        except OSError as error:
            raise SequenceError("Cannot read manifest {}: {}".format(manifest, error)) from error
        paths = []
        for line in lines:
            line = line.strip()
            if line:
                path = Path(line)
                paths.append(path if path.is_absolute() else manifest.parent / path)
        return cls(paths)

    @classmethod
    def from_path(cls, path: Union[str, Path]) -> "SequenceSource":
        """A directory of frames, or a manifest file."""
        path = Path(path)
        if path.is_dir():
            return cls.from_directory(path)
        if path.is_file():
            return cls.from_manifest(path)
        raise SequenceError("No such frame directory or manifest: {}".format(path))

    def __len__(self):
        return len(self.paths)

    def read(self, index: int) -> Frame:
        path = self.paths[index]
        frame = load_frame(path)
        if self.dimensions is None:
            self.dimensions = (frame.width, frame.height)
            logger.debug("Sequence dimensions fixed at {}x{} by {}".format(frame.width, frame.height, path.name))
        elif (frame.width, frame.height) != self.dimensions:
            raise SequenceError("Frame {} is {}x{}, sequence is {}x{}".format(
                path.name, frame.width, frame.height, *self.dimensions))
        return frame

    def frames(self) -> Iterator[Tuple[Path, Frame]]:
        for index, path in enumerate(self.paths):
            yield path, self.read(index)


def read_truth_masks(directory: Union[str, Path]) -> List[MotionMask]:
    """Ground-truth masks of a directory, in file-name order."""
    paths = list_images(directory, (".pgm",))
    if not paths:
        raise SequenceError("No ground-truth masks in {}".format(directory))
    masks = []
    for path in paths:
        try:
            masks.append(load_mask(path))
        except NetpbmError as error:
            raise SequenceError("Bad mask {}: {}".format(path.name, error)) from error
    return masks
