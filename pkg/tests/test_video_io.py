import numpy as np
import pytest

from motion_surveillance.errors import NetpbmError, SequenceError
from motion_surveillance.frame_model import Frame, MotionMask, RgbFrame, motion_pixel_count
from motion_surveillance.video_io import (
    NoiseSpec, SceneSpec, SequenceSource, SquareSpec, background_frame, generate_scene, load_frame,
    read_mask_pgm, read_pgm, read_ppm, read_truth_masks, save_frame, save_mask, square_position,
    write_mask_pgm, write_pgm, write_ppm,
)


# PGM / PPM codec

def test_read_pgm_minimal():
    frame = read_pgm(b"P5\n2 2\n255\n" + bytes([0, 1, 2, 3]))
    assert (frame.width, frame.height) == (2, 2)
    assert frame.values() == [0, 1, 2, 3]


def test_read_pgm_single_pixel_and_comments():
    assert read_pgm(b"P5 1 1 255\n" + bytes([7])).values() == [7]
    data = b"P5\n# a comment\n3 # width\n1\n255\n" + bytes([4, 5, 6])
    assert read_pgm(data).values() == [4, 5, 6]


def test_read_pgm_rejects_other_maxval():
    with pytest.raises(NetpbmError) as info:
        read_pgm(b"P5\n1 1\n65535\n" + bytes([0, 0]))
    assert info.value.offset == 7


def test_read_pgm_rejects_bad_magic():
    with pytest.raises(NetpbmError) as info:
        read_pgm(b"P2\n1 1\n255\n0")
    assert info.value.offset == 0
    with pytest.raises(NetpbmError):
        read_pgm(b"P6\n1 1\n255\n" + bytes(3))


def test_read_pgm_requires_whitespace_after_magic():
    with pytest.raises(NetpbmError) as info:
        read_pgm(b"P52 2\n255\n" + bytes(4))
    assert info.value.offset == 2
    with pytest.raises(NetpbmError):
        read_pgm(b"P5")
    assert read_pgm(b"P5#c\n1 1 255\n" + bytes([3])).values() == [3]


def test_read_pgm_rejects_truncated_raster():
    with pytest.raises(NetpbmError) as info:
        read_pgm(b"P5\n2 2\n255\n" + bytes([1, 2, 3]))
    assert "Truncated raster" in str(info.value)


def test_read_pgm_reports_offset_of_bad_field():
    with pytest.raises(NetpbmError) as info:
        read_pgm(b"P5\n2 x2\n255\n" + bytes(4))
    assert info.value.offset == 5
    assert "at byte offset 5" in str(info.value)


def test_read_pgm_rejects_truncated_header_and_zero_size():
    with pytest.raises(NetpbmError):
        read_pgm(b"P5\n2 2")
    with pytest.raises(NetpbmError):
        read_pgm(b"P5\n0 2\n255\n")


def test_read_pgm_ignores_trailing_bytes():
    assert read_pgm(b"P5\n1 1\n255\n" + bytes([9, 1, 2])).values() == [9]


def test_write_pgm_header_is_exact():
    frame = Frame.from_values(3, 2, [1, 2, 3, 4, 5, 6])
    assert write_pgm(frame) == b"P5\n3 2\n255\n" + bytes([1, 2, 3, 4, 5, 6])


def test_ppm_single_pixel():
    rgb = RgbFrame.from_values(1, 1, [1, 2, 3])
    data = write_ppm(rgb)
    assert data == b"P6\n1 1\n255\n" + bytes([1, 2, 3])
    assert read_ppm(data) == rgb


def test_codec_preserves_random_images():
    rng = np.random.default_rng(30)
    for _ in range(500):
        width, height = (int(v) for v in rng.integers(1, 33, size=2))
        frame = Frame(rng.integers(0, 256, size=(height, width)))
        assert read_pgm(write_pgm(frame)) == frame
        rgb = RgbFrame(rng.integers(0, 256, size=(height, width, 3)))
        assert read_ppm(write_ppm(rgb)) == rgb


def test_mask_codec():
    mask = MotionMask.from_values(2, 2, [0, 1, 1, 0])
    data = write_mask_pgm(mask)
    assert data.endswith(bytes([0, 255, 255, 0]))
    assert read_mask_pgm(data) == mask


def test_mask_rejects_intermediate_values():
    with pytest.raises(NetpbmError) as info:
        read_mask_pgm(b"P5\n3 1\n255\n" + bytes([0, 255, 128]))
    assert info.value.offset == 11 + 2


def test_load_frame_reduces_ppm_to_intensity(tmp_path):
    path = tmp_path / "frame.ppm"
    path.write_bytes(write_ppm(RgbFrame.from_values(2, 1, [255, 0, 0, 0, 0, 255])))
    assert load_frame(path).values() == [76, 29]


# Sequences

def write_sequence(directory, frames):
    directory.mkdir(parents=True, exist_ok=True)
    for name, frame in frames.items():
        save_frame(directory / name, frame)


def test_sequence_directory_is_sorted_by_name(tmp_path):
    write_sequence(tmp_path, {
        "0002.pgm": Frame.from_values(1, 1, [2]),
        "0000.pgm": Frame.from_values(1, 1, [0]),
        "0001.pgm": Frame.from_values(1, 1, [1]),
    })
    (tmp_path / "notes.txt").write_text("ignored")
    source = SequenceSource.from_path(tmp_path)
    assert len(source) == 3
    assert [frame.values() for _, frame in source.frames()] == [[0], [1], [2]]


def test_sequence_manifest_resolves_relative_paths(tmp_path):
    write_sequence(tmp_path / "frames", {"a.pgm": Frame.from_values(1, 1, [5]), "b.pgm": Frame.from_values(1, 1, [6])})
    manifest = tmp_path / "list.txt"
    manifest.write_text("frames/b.pgm\n\nframes/a.pgm\n")
    source = SequenceSource.from_path(manifest)
    assert [frame.values() for _, frame in source.frames()] == [[6], [5]]


def test_sequence_rejects_size_change(tmp_path):
    write_sequence(tmp_path, {"0.pgm": Frame.from_values(1, 1, [0]), "1.pgm": Frame.from_values(2, 1, [0, 0])})
    source = SequenceSource.from_directory(tmp_path)
    source.read(0)
    with pytest.raises(SequenceError):
        source.read(1)


def test_sequence_rejects_missing_and_empty(tmp_path):
    with pytest.raises(SequenceError):
        SequenceSource.from_path(tmp_path / "missing")
    with pytest.raises(SequenceError):
        SequenceSource.from_directory(tmp_path)


def test_read_truth_masks(tmp_path):
    save_mask(tmp_path / "1.pgm", MotionMask.from_values(1, 1, [1]))
    save_mask(tmp_path / "0.pgm", MotionMask.from_values(1, 1, [0]))
    assert [m.values() for m in read_truth_masks(tmp_path)] == [[0], [1]]
    (tmp_path / "2.pgm").write_bytes(b"P5\n1 1\n255\n" + bytes([3]))
    with pytest.raises(SequenceError):
        read_truth_masks(tmp_path)


# Synthetic scenes

def test_static_scene_repeats_frames():
    spec = SceneSpec(width=8, height=8, frame_count=3,
                     square=SquareSpec(size=2, x0=3, y0=3, vx=0, vy=0), noise=NoiseSpec(0.0, 0))
    pairs = list(generate_scene(spec))
    assert len(pairs) == 3
    assert pairs[0][0] == pairs[1][0] == pairs[2][0]
    assert all(motion_pixel_count(truth) == 4 for _, truth in pairs)


def test_moving_square_position():
    spec = SceneSpec(width=8, height=8, frame_count=4, background_level=10,
                     square=SquareSpec(size=2, intensity=200, x0=1, y0=1, vx=1, vy=0), noise=NoiseSpec(0.0, 0))
    frame, truth = list(generate_scene(spec))[3]
    ys, xs = np.nonzero(truth.data)
    assert sorted(set(xs.tolist())) == [4, 5]
    assert sorted(set(ys.tolist())) == [1, 2]
    assert frame.data[1, 4] == 200 and frame.data[0, 0] == 10


def test_square_is_clamped_inside_image():
    spec = SceneSpec(width=8, height=8, frame_count=20, square=SquareSpec(size=3, x0=0, y0=0, vx=2, vy=-1))
    assert square_position(spec, 10) == (5, 0)


def test_scene_is_deterministic_per_seed():
    spec = SceneSpec(width=32, height=24, frame_count=5, noise=NoiseSpec(0.05, 7),
                     square=SquareSpec(size=4, x0=2, y0=2))
    first = [frame for frame, _ in generate_scene(spec)]
    second = [frame for frame, _ in generate_scene(spec)]
    assert first == second
    other = SceneSpec.from_dict({**spec.to_dict(), "noise": {"salt_pepper_prob": 0.05, "seed": 8}})
    assert [frame for frame, _ in generate_scene(other)] != first


def test_noise_never_enters_truth():
    spec = SceneSpec(width=16, height=16, frame_count=3, noise=NoiseSpec(0.5, 1),
                     square=SquareSpec(size=5, x0=0, y0=0))
    assert all(motion_pixel_count(truth) == 25 for _, truth in generate_scene(spec))


def test_background_frame_is_flat():
    spec = SceneSpec(width=4, height=3, background_level=64, square=SquareSpec(size=2, x0=0, y0=0))
    assert background_frame(spec).values() == [64] * 12


def test_scene_validation():
    with pytest.raises(ValueError):
        SceneSpec(width=8, height=8, square=SquareSpec(size=9, x0=0, y0=0))
    with pytest.raises(ValueError):
        SceneSpec(frame_count=0)
    with pytest.raises(ValueError):
        SceneSpec(noise=NoiseSpec(1.5, 0))
