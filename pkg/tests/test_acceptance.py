import json

import pytest

from motion_surveillance.benchmark.throughput import frames_per_second, measure_throughput
from motion_surveillance.cli import main
from motion_surveillance.detector import DetectorConfig
from motion_surveillance.frame_model import Threshold
from motion_surveillance.methods import BackgroundSubtraction
from motion_surveillance.metrics import evaluate_sequence
from motion_surveillance.video_io import NoiseSpec, SceneSpec, SquareSpec, background_frame, generate_scene
from oracles import naive_denoise, naive_motion

TARGET_FPS = 30

BENCHMARK_SCENE = SceneSpec(
    width=128,
    height=128,
    frame_count=100,
    background_level=64,
    square=SquareSpec(size=16, intensity=200, x0=8, y0=56, vx=1, vy=0),
    noise=NoiseSpec(salt_pepper_prob=0.005, seed=0),
)
BENCHMARK_CONFIG = DetectorConfig(threshold=Threshold(25), min_blob_size=8)

# Seed 0 scores: tp=25600, fp=33, tn=1612767, fn=0
BENCHMARK_PRECISION = 0.99871
BENCHMARK_ACCURACY = 0.99998
SCORE_TOLERANCE = 0.005


def test_noisy_scene_scores():
    pairs = list(generate_scene(BENCHMARK_SCENE))
    detector = BackgroundSubtraction(BENCHMARK_CONFIG, reference=background_frame(BENCHMARK_SCENE))
    preds = detector.process_all(frame for frame, _ in pairs)
    report = evaluate_sequence(preds, [truth for _, truth in pairs])
    assert report.frames_evaluated == 100
    assert report.precision >= 0.95
    assert report.accuracy >= 0.99
    assert report.precision == pytest.approx(BENCHMARK_PRECISION, abs=SCORE_TOLERANCE)
    assert report.accuracy == pytest.approx(BENCHMARK_ACCURACY, abs=SCORE_TOLERANCE)
    assert report.aggregate.fn == 0


def test_noisy_scene_matches_naive_pipeline():
    reference = background_frame(BENCHMARK_SCENE).data.tolist()
    detector = BackgroundSubtraction(BENCHMARK_CONFIG, reference=background_frame(BENCHMARK_SCENE))
    for index, (frame, _) in enumerate(generate_scene(BENCHMARK_SCENE)):
        mask = detector.process(frame)
        if index % 10 == 0:
            expected = naive_denoise(naive_motion(frame.data.tolist(), reference, 25), 8, 8)
            assert mask.data.tolist() == expected


def test_benchmark_through_cli(tmp_path):
    scene = tmp_path / "scene"
    assert main(["synth", str(scene), "--seed", "0"]) == 0
    report = tmp_path / "report.jsonl"
    assert main(["run", str(scene / "frames"), "--background", str(scene / "background.pgm"),
                 "-R", str(report), "--truth", str(scene / "truth")]) == 0
    footer = json.loads(report.read_text().splitlines()[-1])
    assert footer["complete"] is True
    assert footer["evaluation"]["precision"] >= 0.95
    assert footer["evaluation"]["accuracy"] >= 0.99
    assert footer["evaluation"]["precision"] == pytest.approx(BENCHMARK_PRECISION, abs=SCORE_TOLERANCE)
    assert footer["evaluation"]["accuracy"] == pytest.approx(BENCHMARK_ACCURACY, abs=SCORE_TOLERANCE)


@pytest.mark.slow
def test_real_time_throughput():
    spec = SceneSpec(width=640, height=480, frame_count=300, square=SquareSpec(size=16, x0=8, y0=232))
    df = measure_throughput(spec, "background_subtraction", BENCHMARK_CONFIG)
    assert len(df) == 300
    assert frames_per_second(df) >= TARGET_FPS


@pytest.mark.slow
def test_real_time_throughput_reported_by_cli(tmp_path):
    scene = tmp_path / "scene"
    assert main(["synth", str(scene), "--width", "640", "--height", "480", "--frames", "300", "--y0", "232"]) == 0
    report = tmp_path / "report.jsonl"
    assert main(["run", str(scene / "frames"), "--background", str(scene / "background.pgm"),
                 "--modes", "blobs", "-O", str(tmp_path / "out"), "-R", str(report)]) == 0
    timing = json.loads(report.read_text().splitlines()[-1])["timing"]
    assert timing["frames"] == 300
    assert timing["fps"] >= TARGET_FPS
