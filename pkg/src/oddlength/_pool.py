from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

THREADS_ENV = "ODDLENGTH_THREADS"


def default_threads() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def chunk_bounds(n_items: int, n_chunks: int) -> list[tuple[int, int]]:
    n_chunks = max(1, min(n_chunks, n_items))
    edges = np.linspace(0, n_items, n_chunks + 1).round().astype(int)
    return [(int(a), int(b)) for a, b in zip(edges[:-1], edges[1:]) if b > a]


def map_histograms(fn, bounds, threads: int) -> np.ndarray:
    """
    Run ``fn(lo, hi) -> histogram`` over chunks and add the results in chunk order.

    ``fn`` should release the GIL (numba ``nogil``) for the pool to help.
    """
    if threads <= 1 or len(bounds) <= 1:
        parts = [fn(lo, hi) for lo, hi in bounds]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda b: fn(*b), bounds))
    total = parts[0].copy()
    for part in parts[1:]:
        total += part
    return total
