from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, Iterable, List, Optional, TypeVar
import logging

from spincodes.core.config import get_settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def map_parallel(
    fn: Callable[[T], R],
    items: Iterable[T],
    max_workers: Optional[int] = None,
    label: str = "task",
) -> List[R]:
    """
    Apply fn to every item on a thread pool.

    Args:
        fn: Function applied to each item
        items: Inputs (materialized up front)
        max_workers: Pool size (default: settings.max_workers)
        label: Name used in log messages

    Returns:
        Results in input order. The first exception raised by any task is re-raised.
    """
    work = list(items)
    if not work:
        return []

    workers = max_workers or get_settings().max_workers
    if workers <= 1 or len(work) == 1:
        return [fn(item) for item in work]

    results: List[Optional[R]] = [None] * len(work)

    with ThreadPoolExecutor(max_workers=workers) as executor:
        # Submit all tasks
        future_to_index = {
            executor.submit(fn, item): index
            for index, item in enumerate(work)
        }

        # Collect results as they complete
        for future in as_completed(future_to_index):
            index = future_to_index[future]
            try:
                results[index] = future.result()
            except Exception as e:
                logger.error(f"✗ {label} {index} failed: {e}")
                raise

    logger.debug(f"✓ {len(work)} {label}s finished on {workers} workers")
    return results  # type: ignore[return-value]
