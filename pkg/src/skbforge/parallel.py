"""Deterministic fan-out helper for the embarrassingly parallel stages."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

JOBS_ENV_VAR = "SKB_FORGE_JOBS"


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV_VAR, "").strip()
    if raw.isdigit() and int(raw) > 0:
        return int(raw)
    return 1


def parallel_map(fn: Callable[[T], R], items: Sequence[T], jobs: int = 1) -> list[R]:
    """map() preserving input order; results are identical for any worker count."""
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunksize = max(1, len(items) // (jobs * 4))
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=chunksize))
