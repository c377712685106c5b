import json
import logging
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Any, Dict, List, Tuple, Union

from motion_surveillance.annotate.blobs import Blob, extract_blobs
from motion_surveillance.annotate.grid import GridMap, grid_motion
from motion_surveillance.annotate.highlight import (
    extract_border, gray_canvas, paint_blob_boxes, paint_grid, paint_mask,
)
from motion_surveillance.detector import DetectorConfig
from motion_surveillance.errors import ConfigError, MotionSurveillanceError, NetpbmError, SequenceError
from motion_surveillance.frame_model import Color, Connectivity, Frame, MotionMask, RgbFrame, motion_pixel_count
from motion_surveillance.methods import METHODS
from motion_surveillance.metrics import EvalReport, confusion
from motion_surveillance.template.detector import MotionDetector
from motion_surveillance.video_io import SequenceSource, load_frame, read_truth_masks, save_mask, save_rgb


# Configure logging
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

ANNOTATE_MODES = ("area", "border", "grid", "blobs")

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2


@dataclass
class PipelineConfig:
    """Everything one `run` invocation needs.

    The 8x8 grid default is arbitrary; nothing in the method fixes a cell count.
    """

    input: Union[Path, None] = None
    method: str = "background_subtraction"
    detector: DetectorConfig = field(default_factory=DetectorConfig)
    annotate_modes: Tuple[str, ...] = ()
    grid_rows: int = 8
    grid_cols: int = 8
    grid_min_level: float = 0.0
    highlight_color: Color = Color(255, 0, 0)
    box_color: Color = Color(0, 255, 0)
    border_connectivity: Connectivity = Connectivity.FOUR
    output_dir: Union[Path, None] = None
    report_path: Union[Path, None] = None
    truth_dir: Union[Path, None] = None
    background_path: Union[Path, None] = None
    save_masks: bool = False
    enable_stats: bool = False

    def validate(self):
        """Raises ConfigError on invalid or contradictory settings."""
        if self.method not in METHODS:
            raise ConfigError("Unknown method '{}', expected one of {}".format(self.method, sorted(METHODS)))
        unknown = [mode for mode in self.annotate_modes if mode not in ANNOTATE_MODES]
        if unknown:
            raise ConfigError("Unknown annotate mode(s) {}, expected a subset of {}".format(unknown, ANNOTATE_MODES))
        if not self.annotate_modes and self.report_path is None and not self.save_masks:
            raise ConfigError("Nothing to produce: select annotate modes, a report path or --save-masks")
        if (self.annotate_modes or self.save_masks) and self.output_dir is None:
            raise ConfigError("Annotations and saved masks need an output directory")
        if "grid" in self.annotate_modes and (self.grid_rows < 1 or self.grid_cols < 1):
            raise ConfigError("Invalid grid {}x{}".format(self.grid_rows, self.grid_cols))
        if not 0.0 <= self.grid_min_level <= 1.0:
            raise ConfigError("Invalid grid_min_level {}, expected [0, 1]".format(self.grid_min_level))
        if self.background_path is not None and self.method != "background_subtraction":
            raise ConfigError("A background frame only applies to background_subtraction")
        if self.input is None:
            raise ConfigError("No input sequence given")

    def to_dict(self) -> Dict[str, Any]:
        def path_or_none(path):
            return None if path is None else str(path)

        return {
            "input": path_or_none(self.input),
            "method": self.method,
            "detector": self.detector.to_dict(),
            "annotate_modes": list(self.annotate_modes),
            "grid": "{}x{}".format(self.grid_rows, self.grid_cols),
            "grid_min_level": self.grid_min_level,
            "highlight_color": list(self.highlight_color.as_tuple()),
            "box_color": list(self.box_color.as_tuple()),
            "border_connectivity": int(self.border_connectivity),
            "output_dir": path_or_none(self.output_dir),
            "report_path": path_or_none(self.report_path),
            "truth_dir": path_or_none(self.truth_dir),
            "background_path": path_or_none(self.background_path),
            "save_masks": self.save_masks,
        }


@dataclass
class RunResult:
    exit_code: int
    frames: int = 0
    seconds: float = 0.0
    complete: bool = False
    evaluation: Union[EvalReport, None] = None
    stats: Dict[str, Any] = field(default_factory=dict)
    message: str = ""

    @property
    def fps(self) -> Union[float, None]:
        if self.seconds <= 0.0:
            return None
        return self.frames / self.seconds


def compose_annotations(
    base: Frame,
    mask: MotionMask,
    config: PipelineConfig,
    blobs: Union[List[Blob], None]=None,
    grid: Union[GridMap, None]=None,
) -> RgbFrame:
    """Layers the enabled modes on one image: area, border, grid, then blob boxes."""
    canvas = gray_canvas(base)
    modes = config.annotate_modes
    if "area" in modes:
        paint_mask(canvas, mask, config.highlight_color)
    if "border" in modes:
        paint_mask(canvas, extract_border(mask, config.border_connectivity), config.highlight_color)
    if "grid" in modes and grid is not None:
        paint_grid(canvas, grid, config.highlight_color, config.grid_min_level)
    if "blobs" in modes and blobs is not None:
        paint_blob_boxes(canvas, blobs, config.box_color)
    return RgbFrame(canvas)


class Pipeline:
    """Frame-by-frame driver: detect, denoise, annotate, report and optionally evaluate.

    Frame order is preserved end to end and every input frame yields one report record.
    """

    def __init__(self, config: PipelineConfig):
        self.config = config
        self.report: Union[IO[str], None] = None
        self.detector: Union[MotionDetector, None] = None
        self.truths: Union[List[MotionMask], None] = None

    def _write_line(self, record: Dict[str, Any]):
        if self.report is not None:
            self.report.write(json.dumps(record) + "\n")
            self.report.flush()

    def _prepare(self) -> Tuple[SequenceSource, Frame]:
        """Everything that can fail before the first frame is processed. Failures here are usage errors."""
        config = self.config
        config.validate()
        source = SequenceSource.from_path(config.input)
        try:
            first = source.read(0)
        except (OSError, NetpbmError) as error:
            raise SequenceError("Cannot read first frame {}: {}".format(source.paths[0], error)) from error

        if "grid" in config.annotate_modes and (config.grid_rows > first.height or config.grid_cols > first.width):
            raise ConfigError("Grid {}x{} exceeds the {}x{} frames".format(
                config.grid_rows, config.grid_cols, first.width, first.height))

        if config.truth_dir is not None:
            self.truths = read_truth_masks(config.truth_dir)
            if len(self.truths) != len(source):
                raise ConfigError("{} ground-truth masks for {} frames".format(len(self.truths), len(source)))
            if self.truths[0].shape != first.shape:
                raise ConfigError("Ground-truth masks are {}x{}, frames are {}x{}".format(
                    self.truths[0].width, self.truths[0].height, first.width, first.height))

        detector_class = METHODS[config.method]
        if config.background_path is not None:
            try:
                reference = load_frame(config.background_path)
            except (OSError, NetpbmError) as error:
                raise SequenceError("Cannot read background {}: {}".format(config.background_path, error)) from error
            if reference.shape != first.shape:
                raise ConfigError("Background is {}x{}, frames are {}x{}".format(
                    reference.width, reference.height, first.width, first.height))
            self.detector = detector_class(config.detector, config.enable_stats, reference=reference)
        else:
            self.detector = detector_class(config.detector, config.enable_stats)

        if config.output_dir is not None:
            config.output_dir.mkdir(parents=True, exist_ok=True)
        return source, first

    def _process(self, index: int, path: Path, frame: Frame) -> Tuple[Dict[str, Any], float, MotionMask]:
        config = self.config
        modes = config.annotate_modes

        start = time.perf_counter()
        mask = self.detector.process(frame)
        blobs = extract_blobs(mask, config.detector.connectivity, config.detector.min_blob_size) \
            if "blobs" in modes else None
        elapsed = time.perf_counter() - start

        record: Dict[str, Any] = {"frame": index, "motion_pixels": motion_pixel_count(mask)}
        grid = None
        if blobs is not None:
            record["blobs"] = [blob.to_dict() for blob in blobs]
        if "grid" in modes:
            grid = grid_motion(mask, config.grid_rows, config.grid_cols)
            record["grid"] = grid.to_dict()
        logger.debug("Frame {} ({}): {} motion pixels".format(index, path.name, record["motion_pixels"]))

        if modes:
            annotated = compose_annotations(frame, mask, config, blobs, grid)
            save_rgb(config.output_dir / "{}.annotated.ppm".format(path.stem), annotated)
        if config.save_masks:
            save_mask(config.output_dir / "{}.mask.pgm".format(path.stem), mask)
        return record, elapsed, mask

    def run(self) -> RunResult:
        try:
            source, first = self._prepare()
        except (MotionSurveillanceError, OSError) as error:
            logger.error("Cannot start: {}".format(error))
            return RunResult(EXIT_USAGE, message=str(error))

        config = self.config
        result = RunResult(EXIT_RUNTIME)
        per_frame = []
        try:
            if config.report_path is not None:
                config.report_path.parent.mkdir(parents=True, exist_ok=True)
                self.report = open(config.report_path, "w")
            logger.info("Running {} on {} frames".format(config.method, len(source)))
            for index, path in enumerate(source.paths):
                frame = first if index == 0 else source.read(index)
                record, elapsed, mask = self._process(index, path, frame)
                if self.truths is not None:
                    per_frame.append(confusion(mask, self.truths[index]))
                self._write_line(record)
                result.frames += 1
                result.seconds += elapsed
            result.complete = True
            result.exit_code = EXIT_OK
        except (MotionSurveillanceError, OSError) as error:
            logger.error("Run aborted after {} frames: {}".format(result.frames, error))
            result.message = str(error)
        finally:
            if self.truths is not None:
                result.evaluation = EvalReport(per_frame)
            result.stats = dict(self.detector.stats)
            self._write_footer(result)
            if self.report is not None:
                self.report.close()
                self.report = None

        if result.complete:
            logger.info("Processed {} frames in {:.3f} s ({} fps)".format(
                result.frames, result.seconds, "n/a" if result.fps is None else "{:.1f}".format(result.fps)))
        return result

    def _write_footer(self, result: RunResult):
        footer: Dict[str, Any] = {
            "footer": True,
            "complete": result.complete,
            "frames": result.frames,
            "timing": {"frames": result.frames, "seconds": result.seconds, "fps": result.fps},
        }
        if result.evaluation is not None:
            footer["evaluation"] = result.evaluation.to_dict()
        try:
            self._write_line(footer)
        except OSError as error:
            logger.error("Cannot write report footer: {}".format(error))


def run(config: PipelineConfig) -> RunResult:
    """Runs the detection pipeline described by config.

    Returns:
        RunResult: exit_code 0 on success, 1 on a failure mid-run, 2 on bad input or configuration.
    """
    return Pipeline(config).run()
