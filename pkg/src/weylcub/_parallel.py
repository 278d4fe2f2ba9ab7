"""Chunked evaluation with an optional thread pool; results never depend on the pool size."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np


def map_chunks(func, array, threads: int = 1, chunk: int = 4096):
    """Apply ``func`` to row chunks of ``array`` and concatenate in order.

    The partition into chunks is fixed by ``chunk`` alone, so every element
    sees the same arithmetic whatever the number of threads.
    """
    n = len(array)
    if n <= chunk:
        return np.asarray(func(array))
    pieces = [array[i:i + chunk] for i in range(0, n, chunk)]
    if threads <= 1:
        parts = [func(p) for p in pieces]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(func, pieces))
    return np.concatenate([np.atleast_1d(np.asarray(p)) for p in parts])
