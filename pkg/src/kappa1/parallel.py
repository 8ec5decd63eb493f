"""Worker-count resolution and an order-preserving process map."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

ENV_VAR = "KAPPA1_THREADS"

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(requested: int | None = None) -> int:
    """Explicit value, else ``$KAPPA1_THREADS``, else the machine's CPU count."""
    if requested is None:
        env = os.environ.get(ENV_VAR)
        requested = int(env) if env else (os.cpu_count() or 1)
    if requested < 1:
        raise ValueError(f"worker count must be positive, got {requested}")
    return requested


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
    """``list(map(fn, items))``, fanned out over processes when ``workers > 1``.

    Results keep input order, so any reduction over them is schedule-independent.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items))


def split(items: list[T], parts: int) -> list[list[T]]:
    """Cut ``items`` into at most ``parts`` contiguous, nonempty chunks."""
    parts = max(1, min(parts, len(items)))
    size, extra = divmod(len(items), parts)
    out, start = [], 0
    for i in range(parts):
        stop = start + size + (i < extra)
        out.append(items[start:stop])
        start = stop
    return [c for c in out if c]
