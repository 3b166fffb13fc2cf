"""Tiny deterministic worker-pool helper.

Results are returned in input order regardless of the schedule, so callers
that merge with order-independent operations (set union, integer sums) are
byte-reproducible for any job count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def run_map(fn: Callable[[T], R], items: Sequence[T], jobs: int = 1) -> list[R]:
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def chunk_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """Split range(total) into at most `parts` contiguous half-open chunks."""
    if total <= 0:
        return [(0, 0)]
    parts = max(1, min(parts, total))
    step = -(-total // parts)
    return [(lo, min(total, lo + step)) for lo in range(0, total, step)]
