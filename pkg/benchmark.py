import argparse
import logging
import os

import pandas as pd

from motion_surveillance.benchmark.throughput import frames_per_second, measure_throughput
from motion_surveillance.methods import METHODS
from motion_surveillance.video_io import NoiseSpec, SceneSpec, SquareSpec

# Configure logging
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

# Configure argparse
parser = argparse.ArgumentParser(description="Throughput of motion detection plus blob extraction on synthetic frames.")
parser.add_argument("-W", "--width", type=int, default=640, help="Frame width. Defaults to: 640.")
parser.add_argument("-H", "--height", type=int, default=480, help="Frame height. Defaults to: 480.")
parser.add_argument("-F", "--frames", type=int, default=300, help="Frames per measurement. Defaults to: 300.")
parser.add_argument("-E", "--ensemble", type=int, default=1, help="The number of measurements to keep.")
parser.add_argument(
    "-M",
    "--method",
    default="background_subtraction",
    help="Detection method. Defaults to: background_subtraction.",
    choices=sorted(METHODS)
)
parser.add_argument("--noise", type=float, default=0.005, help="Salt-and-pepper probability. Defaults to: 0.005.")
parser.add_argument("--plot", action="store_true", help="Save a per-frame latency plot next to the CSV.")

# The conventional real-time bar
TARGET_FPS = 30.0


def plot_latency(stats, filename):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(8, 4))
    for ensemble, group in stats.groupby("ensemble"):
        ax.plot(group["frame"], group["seconds"] * 1000, label="run {}".format(ensemble))
    ax.axhline(1000 / TARGET_FPS, color="red", linestyle="--", label="{:.0f} fps".format(TARGET_FPS))
    ax.set_xlabel("frame")
    ax.set_ylabel("ms / frame")
    ax.legend()
    fig.tight_layout()
    fig.savefig(filename)
    plt.close(fig)


if __name__ == "__main__":
    args = parser.parse_args()
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")

    size = min(64, args.width, args.height)
    spec = SceneSpec(
        width=args.width,
        height=args.height,
        frame_count=args.frames,
        square=SquareSpec(size=size, x0=0, y0=(args.height - size) // 2, vx=2, vy=0),
        noise=NoiseSpec(args.noise, seed=0),
    )

    dataframes = []
    for j in range(args.ensemble + 1):
        logger.info("Measurement {}".format(j))
        df = measure_throughput(spec, args.method)

        # Discard the first measurement to make sure everything is 'running'
        if j > 0:
            df['ensemble'] = j
            df['width'] = args.width
            df['height'] = args.height
            dataframes.append(df)
            print("Measurement {}: {:.1f} fps".format(j, frames_per_second(df)))
        else:
            logger.info("Discarding first measurement")

    if not os.path.exists("benchmarks"):
        os.makedirs("benchmarks")

    stats = pd.concat(dataframes)
    filename = "benchmarks/throughput_{}.csv".format(args.method)
    stats.to_csv(filename, mode="a", header=not os.path.exists(filename), index=False)

    fps = len(stats) / stats["seconds"].sum()
    print("Overall: {:.1f} fps ({} the {:.0f} fps target)".format(
        fps, "meets" if fps >= TARGET_FPS else "misses", TARGET_FPS))
    if args.plot:
        plot_latency(stats, "benchmarks/throughput_{}_{}x{}.png".format(args.method, args.width, args.height))

    print("Done")
