"""Deterministic parallel map over work chunks.

Results always come back in input order, so callers that pick the canonical
minimum witness get the same answer for any worker count.
"""

from collections.abc import Callable, Iterable, Sequence
from typing import TypeVar

from joblib import Parallel, delayed

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(func: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
    """Apply func to every item, optionally on a joblib thread pool.

    Args:
        func: Pure function of one item
        items: Work items (materialized before dispatch)
        workers: Number of threads; 1 runs inline

    Returns:
        Results in the order of items
    """
    work = list(items)
    if workers <= 1 or len(work) <= 1:
        return [func(item) for item in work]
    return list(Parallel(n_jobs=workers, prefer="threads")(delayed(func)(item) for item in work))


def chunked(seq: Sequence[T], parts: int) -> list[Sequence[T]]:
    """Split seq into at most `parts` contiguous, order-preserving chunks."""
    if parts <= 1 or len(seq) <= 1:
        return [seq]
    size = -(-len(seq) // parts)
    return [seq[i : i + size] for i in range(0, len(seq), size)]
