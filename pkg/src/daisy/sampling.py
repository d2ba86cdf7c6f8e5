"""Reproducible, worker-count-independent Monte Carlo substreams.

Sample index space is cut into fixed-size chunks; chunk i draws from a
counter-based Philox generator keyed by (master seed, i).  Partial results
are reduced in chunk order, so the outcome depends only on the seed and
the sample count, never on how many workers ran the chunks.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

CHUNK_SIZE = 1 << 15


def substream(seed: int, index: int) -> np.random.Generator:
    """Philox generator for substream `index` of master seed `seed`."""
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(index,))
    return np.random.Generator(np.random.Philox(ss))


def chunk_layout(samples: int, chunk_size: int = CHUNK_SIZE) -> list[tuple[int, int]]:
    """(substream index, sample count) pairs covering `samples` draws."""
    out = []
    i = 0
    remaining = samples
    while remaining > 0:
        take = min(chunk_size, remaining)
        out.append((i, take))
        remaining -= take
        i += 1
    return out


def run_chunks(fn, layout, workers: int = 1) -> list:
    """Evaluate fn(index, count) over the layout, results in layout order.

    With workers > 1 the chunks run on a thread pool (the heavy lifting is
    numpy, which releases the GIL); ordering of the returned list is still
    the layout order, keeping reductions deterministic.
    """
    if workers <= 1 or len(layout) <= 1:
        return [fn(i, m) for i, m in layout]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda t: fn(*t), layout))


def sorted_uniform_points(rng: np.random.Generator, count: int, r: int) -> np.ndarray:
    """`count` rows of r sorted circle positions in [0, 1), ties redrawn.

    Ties have probability ~1e-10 per chunk in float64; the redraw keeps
    arc lengths well-defined without biasing the sample.
    """
    pts = np.sort(rng.random((count, r)), axis=1)
    while True:
        bad = np.any(np.diff(pts, axis=1) == 0.0, axis=1)
        if not bad.any():
            return pts
        pts[bad] = np.sort(rng.random((int(bad.sum()), r)), axis=1)


def min_window_arcs(pts: np.ndarray, t: int) -> np.ndarray:
    """Per row: length of the shortest arc containing >= t of the r points.

    Rows must be sorted ascending; the arc is the minimum over the r
    windows of t circularly consecutive points, wraparound handled by
    extending the row with its first t-1 points shifted by one turn.
    """
    r = pts.shape[1]
    ext = np.concatenate([pts, pts[:, : t - 1] + 1.0], axis=1)
    spans = ext[:, t - 1 : t - 1 + r] - pts
    return spans.min(axis=1)
