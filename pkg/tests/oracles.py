"""Brute-force reference implementations on plain nested lists, independent of numpy and scipy."""

from collections import deque

NEIGHBOURS_4 = [(-1, 0), (1, 0), (0, -1), (0, 1)]
NEIGHBOURS_8 = NEIGHBOURS_4 + [(-1, -1), (-1, 1), (1, -1), (1, 1)]


def to_rows(values, width, height):
    return [list(values[y * width:(y + 1) * width]) for y in range(height)]


def naive_motion(a, b, t):
    """|a - b| > t on nested lists."""
    return [[1 if abs(a[y][x] - b[y][x]) > t else 0 for x in range(len(a[0]))] for y in range(len(a))]


def naive_components(mask, connectivity):
    """Flood fill in raster order; returns a list of pixel lists [(x, y), ...]."""
    height, width = len(mask), len(mask[0])
    offsets = NEIGHBOURS_4 if connectivity == 4 else NEIGHBOURS_8
    seen = [[False] * width for _ in range(height)]
    components = []
    for y in range(height):
        for x in range(width):
            if mask[y][x] != 1 or seen[y][x]:
                continue
            seen[y][x] = True
            queue = deque([(x, y)])
            pixels = []
            while queue:
                cx, cy = queue.popleft()
                pixels.append((cx, cy))
                for dx, dy in offsets:
                    nx, ny = cx + dx, cy + dy
                    if 0 <= nx < width and 0 <= ny < height and mask[ny][nx] == 1 and not seen[ny][nx]:
                        seen[ny][nx] = True
                        queue.append((nx, ny))
            components.append(pixels)
    return components


def naive_blobs(mask, connectivity, min_size=0):
    """(label, area, bbox) triples with labels in raster order of first pixel."""
    blobs = []
    for label, pixels in enumerate(naive_components(mask, connectivity), start=1):
        if len(pixels) < max(min_size, 1):
            continue
        xs = [x for x, _ in pixels]
        ys = [y for _, y in pixels]
        blobs.append((label, len(pixels), (min(xs), min(ys), max(xs), max(ys))))
    return blobs


def naive_denoise(mask, min_size, connectivity):
    out = [[0] * len(mask[0]) for _ in mask]
    for pixels in naive_components(mask, connectivity):
        if len(pixels) >= min_size:
            for x, y in pixels:
                out[y][x] = 1
    return out


def naive_frame_difference_stream(frames, t, min_size, connectivity):
    masks = []
    previous = None
    for frame in frames:
        if previous is None:
            mask = [[0] * len(frame[0]) for _ in frame]
        else:
            mask = naive_motion(frame, previous, t)
        masks.append(naive_denoise(mask, min_size, connectivity))
        previous = frame
    return masks


def naive_background_stream(frames, t, min_size, connectivity):
    """Static reference equal to the first frame."""
    reference = frames[0]
    return [naive_denoise(naive_motion(frame, reference, t), min_size, connectivity) for frame in frames]


def naive_border(mask, connectivity):
    height, width = len(mask), len(mask[0])
    offsets = NEIGHBOURS_4 if connectivity == 4 else NEIGHBOURS_8
    out = [[0] * width for _ in range(height)]
    for y in range(height):
        for x in range(width):
            if mask[y][x] != 1:
                continue
            for dx, dy in offsets:
                nx, ny = x + dx, y + dy
                if not (0 <= nx < width and 0 <= ny < height) or mask[ny][nx] == 0:
                    out[y][x] = 1
                    break
    return out
