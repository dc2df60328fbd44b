"""Exhaustive weight enumeration over all messages of a small vector space."""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Tuple

import numpy as np

import config

logger = logging.getLogger(__name__)


def _chunk_bounds(total: int, chunk: int) -> List[Tuple[int, int]]:
    return [(start, min(start + chunk, total)) for start in range(0, total, chunk)]


def _profile_chunk(columns: np.ndarray, start: int, stop: int) -> np.ndarray:
    messages = np.arange(start, stop, dtype=np.uint64)
    parities = np.bitwise_count(messages[:, None] & columns[None, :]) & 1
    weights = parities.sum(axis=1, dtype=np.int64)
    return np.bincount(weights, minlength=columns.size + 1)


def span_weight_profile(
    columns: np.ndarray,
    dim: int,
    workers: int = None,
    chunk_cells: int = None,
) -> np.ndarray:
    """
    Count the Hamming weights of x M over every x in F_2^dim.

    M is given by its columns packed as ``dim``-bit integers, so the weight of
    x M is the number of columns c with odd |x & c|. The message space is split
    into contiguous chunks; per-chunk histograms are summed, which makes the
    result independent of the worker count.

    Args:
        columns: ``uint64`` column masks of M
        dim: Number of rows of M (message length)
        workers: Thread count (defaults to config.WORKERS)
        chunk_cells: Approximate message x column cells per chunk

    Returns:
        int64 array ``counts`` of length n+1 where ``counts[w]`` is the number of
        messages whose image has weight w; it sums to 2^dim
    """
    columns = np.asarray(columns, dtype=np.uint64)
    n = int(columns.size)
    total = 1 << dim
    chunk = max(1, (chunk_cells or config.CHUNK_CELLS) // max(n, 1))
    bounds = _chunk_bounds(total, chunk)
    workers = max(1, workers or config.WORKERS)

    logger.debug(f"Enumerating 2^{dim} messages over {n} columns in {len(bounds)} chunks")

    counts = np.zeros(n + 1, dtype=np.int64)
    if workers == 1 or len(bounds) == 1:
        for start, stop in bounds:
            counts += _profile_chunk(columns, start, stop)
        return counts

    with ThreadPoolExecutor(max_workers=workers) as pool:
        for partial in pool.map(lambda b: _profile_chunk(columns, *b), bounds):
            counts += partial
    return counts
