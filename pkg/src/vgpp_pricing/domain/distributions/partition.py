import logging
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

from vgpp_pricing.domain.distributions.rng_stream import RngStream

T = TypeVar("T")

_logger = logging.getLogger("partition")


def chunk_sizes(n_items: int, chunk_size: int) -> list[int]:
    """Split ``n_items`` into fixed-size chunks; the split never depends on the worker count."""
    if n_items < 0 or chunk_size < 1:
        raise ValueError("n_items must be non-negative and chunk_size positive")
    full, rest = divmod(n_items, chunk_size)
    return [chunk_size] * full + ([rest] if rest else [])


def partitioned_map(
    task: Callable[[int, RngStream], T],
    n_items: int,
    rng: RngStream,
    chunk_size: int,
    workers: int = 1,
) -> list[T]:
    """Run ``task(chunk_len, substream)`` over deterministic chunks and return results in chunk order.

    Chunk ``i`` always draws from ``rng.substream(i)``, so the output is identical for any ``workers``.
    """
    sizes = chunk_sizes(n_items, chunk_size)
    streams = [rng.substream(i) for i in range(len(sizes))]

    _logger.debug(
        f"Running {len(sizes)} chunks on {workers} workers",
        extra={"vgpp_chunks": len(sizes), "vgpp_workers": workers},
    )

    if workers <= 1 or len(sizes) <= 1:
        return [task(size, stream) for size, stream in zip(sizes, streams)]

    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(task, sizes, streams))
