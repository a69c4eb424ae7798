"""Deterministic partitioned evaluation of integer-valued sums."""

from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List, Tuple

from .logging import get_logger

logger = get_logger(__name__)

RangeWorker = Callable[[Any, int, int], int]


def partition_range(total: int, parts: int) -> List[Tuple[int, int]]:
    """
    Split ``[0, total)`` into at most ``parts`` contiguous slices.

    Slice sizes differ by at most one and earlier slices are the larger ones,
    so the partition depends only on ``total`` and ``parts``.

    Raises:
        ValueError: If parts < 1 or total < 0
    """
    if parts < 1:
        raise ValueError(f"parts must be positive, got {parts}")
    if total < 0:
        raise ValueError(f"total must be non-negative, got {total}")

    parts = max(1, min(parts, total))
    base, extra = divmod(total, parts)
    slices = []
    start = 0
    for index in range(parts):
        stop = start + base + (1 if index < extra else 0)
        slices.append((start, stop))
        start = stop
    return slices


def _call(job: Tuple[RangeWorker, Any, int, int]) -> int:
    worker, payload, start, stop = job
    return int(worker(payload, start, stop))


def run_partitioned(worker: RangeWorker, payload: Any, total: int,
                    workers: int = 1) -> int:
    """
    Evaluate ``worker(payload, start, stop)`` over a partition of ``[0, total)``.

    The worker must be a module-level function and the payload picklable when
    ``workers > 1``. Partial results are combined by exact integer addition,
    so the total never depends on the number of workers.

    Args:
        worker: Function returning the partial sum for one index slice
        payload: Read-only data shared by every slice
        total: Size of the index range
        workers: Number of processes (1 runs inline)

    Returns:
        Sum of the partial results
    """
    slices = partition_range(total, workers) if total else []
    if workers <= 1 or len(slices) <= 1:
        return sum(_call((worker, payload, start, stop)) for start, stop in slices)

    logger.debug(f"Dispatching {len(slices)} slices of {total} items to {workers} workers")
    jobs = [(worker, payload, start, stop) for start, stop in slices]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return sum(executor.map(_call, jobs))
