"""Document-level parallelism helpers.

DEID_THREADS caps the worker count (default: machine core count). Results
always come back in input order, so parallel and serial runs produce
identical output.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


class ThreadConfigError(ValueError):
    pass


def thread_count() -> int:
    raw = os.environ.get("DEID_THREADS", "")
    if raw.strip():
        try:
            n = int(raw)
        except ValueError:
            raise ThreadConfigError(f"DEID_THREADS must be an integer, got {raw!r}") from None
        if n < 1:
            raise ThreadConfigError("DEID_THREADS must be >= 1")
        return n
    return os.cpu_count() or 1


def map_ordered(fn: Callable[[T], R], items: Sequence[T]) -> list[R]:
    """Apply fn to every item, possibly across threads, preserving order."""
    workers = min(thread_count(), len(items)) if items else 0
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
