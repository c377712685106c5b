import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Union

from motion_surveillance.detector import DetectorConfig
from motion_surveillance.errors import MotionSurveillanceError
from motion_surveillance.frame_model import Color, Connectivity, Threshold
from motion_surveillance.methods import METHODS
from motion_surveillance.metrics import evaluate_sequence
from motion_surveillance.pipeline import ANNOTATE_MODES, EXIT_OK, EXIT_RUNTIME, EXIT_USAGE, PipelineConfig, run
from motion_surveillance.utilities import error_message, parse_grid, parse_modes, stats_info, success_message
from motion_surveillance.video_io import (
    NoiseSpec, SceneSpec, SquareSpec, background_frame, generate_scene, read_truth_masks, save_frame, save_mask,
)


# Configure logging
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

# Configure argparse
parser = argparse.ArgumentParser(description="Motion detection by background subtraction and two-frame differencing.")
parser.add_argument("-D", "--debug", action="store_true", help="Enable debug mode.")
subparsers = parser.add_subparsers(dest="command", required=True)

run_parser = subparsers.add_parser("run", help="Detect motion in a frame sequence.")
run_parser.add_argument("input", nargs="?", type=Path, help="Directory of PGM/PPM frames, or a manifest file of paths.")
run_parser.add_argument(
    "-M",
    "--method",
    default="background_subtraction",
    help="Detection method. Defaults to: background_subtraction.",
    choices=sorted(METHODS)
)
run_parser.add_argument("-T", "--threshold", type=int, default=25, help="Threshold T, motion iff difference > T. Defaults to: 25.")
run_parser.add_argument("--alpha", type=float, default=0.0, help="Background learning rate in [0, 1]. Defaults to: 0 (static reference).")
run_parser.add_argument("--min-blob-size", type=int, default=8, help="Components smaller than this are noise. Defaults to: 8.")
run_parser.add_argument("--connectivity", type=int, default=8, choices=[4, 8], help="Blob connectivity. Defaults to: 8.")
run_parser.add_argument("--border-connectivity", type=int, default=4, choices=[4, 8], help="Border connectivity. Defaults to: 4.")
run_parser.add_argument("--background", type=Path, help="Stored reference frame for background_subtraction.")
run_parser.add_argument("--background-frames", type=int, default=1, help="Frames averaged into the reference when no --background is given. Defaults to: 1.")
run_parser.add_argument("--modes", type=parse_modes, default=[], help="Comma-separated subset of {}.".format(",".join(ANNOTATE_MODES)))
run_parser.add_argument("--grid", type=parse_grid, default=(8, 8), help="Grid as RxC. Defaults to: 8x8 (an arbitrary choice).")
run_parser.add_argument("--grid-min-level", type=float, default=0.0, help="Smallest cell motion level outlined in grid mode. Defaults to: 0.")
run_parser.add_argument("--color", type=Color.parse, default=Color(255, 0, 0), help="Highlight colour r,g,b. Defaults to: 255,0,0.")
run_parser.add_argument("--box-color", type=Color.parse, default=Color(0, 255, 0), help="Blob box colour r,g,b. Defaults to: 0,255,0.")
run_parser.add_argument("-O", "--output-dir", type=Path, help="Directory for annotated frames and saved masks.")
run_parser.add_argument("-R", "--report", type=Path, help="Line-delimited JSON report path.")
run_parser.add_argument("--truth", type=Path, help="Directory of ground-truth PGM masks (0/255).")
run_parser.add_argument("--save-masks", action="store_true", help="Write each final mask as <stem>.mask.pgm.")
run_parser.add_argument("-S", "--stats", action="store_true", help="Print statistics from the detector.")
run_parser.add_argument("--print-config", action="store_true", help="Print the effective configuration and exit.")

synth_parser = subparsers.add_parser("synth", help="Generate a synthetic moving-square scene with ground truth.")
synth_parser.add_argument("output", nargs="?", type=Path, help="Scene directory.")
synth_parser.add_argument("--width", type=int, default=128)
synth_parser.add_argument("--height", type=int, default=128)
synth_parser.add_argument("--frames", type=int, default=100)
synth_parser.add_argument("--background-level", type=int, default=64)
synth_parser.add_argument("--square-size", type=int, default=16)
synth_parser.add_argument("--square-intensity", type=int, default=200)
synth_parser.add_argument("--x0", type=int, default=8)
synth_parser.add_argument("--y0", type=int, default=56)
synth_parser.add_argument("--vx", type=int, default=1)
synth_parser.add_argument("--vy", type=int, default=0)
synth_parser.add_argument("--noise", type=float, default=0.005, help="Salt-and-pepper probability. Defaults to: 0.005.")
synth_parser.add_argument("--seed", type=int, default=0)
synth_parser.add_argument("--print-config", action="store_true", help="Print the scene parameters and exit.")

eval_parser = subparsers.add_parser("eval", help="Score predicted masks against ground truth.")
eval_parser.add_argument("--pred", type=Path, required=True, help="Directory of predicted PGM masks.")
eval_parser.add_argument("--truth", type=Path, required=True, help="Directory of ground-truth PGM masks.")
eval_parser.add_argument("-R", "--report", type=Path, help="JSON output path. Defaults to stdout.")
eval_parser.add_argument("--csv", type=Path, help="Per-frame confusion CSV path.")


def pipeline_config(args: argparse.Namespace) -> PipelineConfig:
    detector = DetectorConfig(
        threshold=Threshold(args.threshold),
        update_alpha=args.alpha,
        min_blob_size=args.min_blob_size,
        connectivity=Connectivity(args.connectivity),
        background_frames=args.background_frames,
    )
    return PipelineConfig(
        input=args.input,
        method=args.method,
        detector=detector,
        annotate_modes=tuple(args.modes),
        grid_rows=args.grid[0],
        grid_cols=args.grid[1],
        grid_min_level=args.grid_min_level,
        highlight_color=args.color,
        box_color=args.box_color,
        border_connectivity=Connectivity(args.border_connectivity),
        output_dir=args.output_dir,
        report_path=args.report,
        truth_dir=args.truth,
        background_path=args.background,
        save_masks=args.save_masks,
        enable_stats=args.stats,
    )


def scene_spec(args: argparse.Namespace) -> SceneSpec:
    return SceneSpec(
        width=args.width,
        height=args.height,
        frame_count=args.frames,
        background_level=args.background_level,
        square=SquareSpec(args.square_size, args.square_intensity, args.x0, args.y0, args.vx, args.vy),
        noise=NoiseSpec(args.noise, args.seed),
    )


def command_run(args: argparse.Namespace) -> int:
    config = pipeline_config(args)
    if args.print_config:
        print(json.dumps(config.to_dict(), indent=2))
        return EXIT_OK
    result = run(config)
    if args.stats:
        print(stats_info(result.stats))
    if result.exit_code != EXIT_OK:
        print(error_message(result.message), file=sys.stderr)
        return result.exit_code
    summary = "{} frames".format(result.frames)
    if result.fps is not None:
        summary += ", {:.1f} fps".format(result.fps)
    if result.evaluation is not None:
        summary += ", precision {}, accuracy {}".format(result.evaluation.precision, result.evaluation.accuracy)
    print(success_message(summary))
    return EXIT_OK


def command_synth(args: argparse.Namespace) -> int:
    spec = scene_spec(args)
    if args.print_config:
        print(json.dumps(spec.to_dict(), indent=2))
        return EXIT_OK
    if args.output is None:
        raise ValueError("No output directory given")
    frames_dir = args.output / "frames"
    truth_dir = args.output / "truth"
    try:
        frames_dir.mkdir(parents=True, exist_ok=True)
        truth_dir.mkdir(parents=True, exist_ok=True)
        digits = max(4, len(str(spec.frame_count - 1)))
        for t, (frame, mask) in enumerate(generate_scene(spec)):
            name = "{:0{}d}.pgm".format(t, digits)
            save_frame(frames_dir / name, frame)
            save_mask(truth_dir / name, mask)
        save_frame(args.output / "background.pgm", background_frame(spec))
        (args.output / "spec.json").write_text(json.dumps(spec.to_dict(), indent=2) + "\n")
    except OSError as error:
        print(error_message(error), file=sys.stderr)
        return EXIT_RUNTIME
    logger.info("Wrote {} frames to {}".format(spec.frame_count, args.output))
    return EXIT_OK


def command_eval(args: argparse.Namespace) -> int:
    try:
        preds = read_truth_masks(args.pred)
        truths = read_truth_masks(args.truth)
        report = evaluate_sequence(preds, truths)
    except (MotionSurveillanceError, ValueError, OSError) as error:
        print(error_message(error), file=sys.stderr)
        return EXIT_USAGE
    output = json.dumps(report.to_dict(), indent=2)
    try:
        if args.report is not None:
            args.report.write_text(output + "\n")
        else:
            print(output)
        if args.csv is not None:
            report.to_frame().to_csv(args.csv)
    except OSError as error:
        print(error_message(error), file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK


COMMANDS = {
    "run": command_run,
    "synth": command_synth,
    "eval": command_eval,
}


def main(argv: Union[List[str], None]=None) -> int:
    args = parser.parse_args(argv)
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")

    # Modify logging level of the package
    if args.debug:
        for name in list(logging.root.manager.loggerDict):
            if name.startswith("motion_surveillance"):
                logging.getLogger(name).setLevel(logging.DEBUG)

    try:
        return COMMANDS[args.command](args)
    except ValueError as error:
        # Invalid parameter values surface from the config and scene constructors
        print(error_message(error), file=sys.stderr)
        return EXIT_USAGE
