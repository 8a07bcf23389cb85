import logging
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, List, Optional, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


@dataclass
class Timer:
    """The wall time, in seconds, spent inside of a ``timed`` block."""

    elapsed: float = 0.0

    @property
    def millis(self) -> int:
        return int(round(self.elapsed * 1000))


@contextmanager
def timed(label: Optional[str] = None) -> Iterator[Timer]:
    """Measures the wall time spent inside the context manager. The elapsed time
    is available on the yielded timer once the block has been exited.

    Parameters
    ----------
    label:
        An optional label. When given, the elapsed time is logged at the debug
        level when the block exits.
    """

    timer = Timer()
    start = time.perf_counter()

    try:
        yield timer

    finally:

        timer.elapsed = time.perf_counter() - start

        if label is not None:
            logger.debug(f"{label}: elapsed time {timer.elapsed:.2f} seconds")


def parallel_map(
    function: Callable[[T], R], items: Iterable[T], jobs: Optional[int] = 1
) -> List[R]:
    """Applies a function to each item, optionally across a pool of worker processes.
    The results are always returned in the order of ``items``.

    Parameters
    ----------
    function:
        The function to apply. It must be importable (i.e. defined at module level)
        when ``jobs > 1``.
    items:
        The inputs.
    jobs:
        The number of worker processes. ``None``, 0 and 1 all evaluate serially.
    """

    items = list(items)

    if jobs is None or jobs <= 1 or len(items) <= 1:
        return [function(item) for item in items]

    chunksize = max(1, len(items) // (4 * jobs))

    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(function, items, chunksize=chunksize))
