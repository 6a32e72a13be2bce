"""Thread pool with ordered results (worker count from HEATTRACE_THREADS)."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

from ..errors import ValidationError


def worker_count() -> int:
    raw = os.environ.get("HEATTRACE_THREADS")
    if raw is None or raw.strip() == "":
        return max(1, min(8, os.cpu_count() or 1))
    try:
        n = int(raw)
    except ValueError:
        raise ValidationError(f"HEATTRACE_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ValidationError(f"HEATTRACE_THREADS must be a positive integer, got {raw!r}")
    return n


def ordered_map(func, items) -> list:
    """[func(x) for x in items], possibly concurrent; result order is always the input order."""
    items = list(items)
    n = worker_count()
    if n == 1 or len(items) < 2:
        return [func(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(func, items))
