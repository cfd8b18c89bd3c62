"""Shared-memory parallel driver for the per-vertex outer loop.

Workers pull ``chunk``-sized slices of the vertex order from a shared cursor
(dynamic scheduling) and all read and raise one shared :class:`Incumbent`.

Workers are threads. Under the GIL this does not speed up the pure-Python
search, but the protocol (and hence the result) is the same as with true
parallel workers.
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .exact import CliqueResult, ExactSearch, Incumbent, PruningStats, check_order, positions_of
from .graph import CsrGraph
from .heuristic import HeuristicSearch, SelectionPolicy


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ParallelConfig:
    workers: int = 1
    chunk: int = 16
    lb: int = 0
    method: str = "exact"
    policy: SelectionPolicy = SelectionPolicy()

    def __post_init__(self):
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if self.chunk < 1:
            raise ConfigError(f"chunk must be >= 1, got {self.chunk}")
        if self.lb < 0:
            raise ConfigError("lb must be non-negative")
        if self.method not in ("exact", "heuristic"):
            raise ConfigError(f"unknown method {self.method!r}")


class WorkCursor:
    """Monotone shared index into the vertex order, handed out in chunks."""

    def __init__(self, total: int, chunk: int):
        self.total = total
        self.chunk = chunk
        self._next = 0
        self._lock = threading.Lock()

    def claim(self) -> tuple[int, int] | None:
        with self._lock:
            start = self._next
            if start >= self.total:
                return None
            self._next = min(start + self.chunk, self.total)
            return start, self._next


def max_clique_parallel(
    g: CsrGraph,
    cfg: ParallelConfig | None = None,
    order: Iterable[int] | None = None,
    *,
    on_bound: Callable[[int, tuple[int, ...]], None] | None = None,
    on_claim: Callable[[int, int, int], None] | None = None,
) -> CliqueResult:
    """Run the exact (or greedy) search with ``cfg.workers`` concurrent workers.

    ``on_bound(size, members)`` sees every successful raise of the shared bound
    (under its lock); ``on_claim(worker, start, stop)`` sees every work unit.
    The reported size equals the sequential result; the witness may differ.
    """
    cfg = cfg or ParallelConfig()
    start = time.perf_counter()
    seq = check_order(g.n, order)
    pos = positions_of(seq)
    best = Incumbent(cfg.lb, on_bound)
    cursor = WorkCursor(g.n, cfg.chunk)
    processed = np.zeros(g.n, dtype=np.int64)
    vertices = seq.tolist()

    def work(worker: int):
        if cfg.method == "exact":
            search = ExactSearch(g, best, pos)
        else:
            # Per-worker stream derived from the seed, not a shared one.
            rng = np.random.default_rng([cfg.policy.seed, worker])
            search = HeuristicSearch(g, best, cfg.policy, rng)
        while (unit := cursor.claim()) is not None:
            lo, hi = unit
            if on_claim is not None:
                on_claim(worker, lo, hi)
            for v in vertices[lo:hi]:
                search.visit(v)
            processed[lo:hi] += 1
        return search.stats, search.loop_entries

    with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
        outcomes = list(pool.map(work, range(cfg.workers)))

    if not np.all(processed == 1):
        raise RuntimeError("work distribution lost or duplicated vertices")
    stats = PruningStats()
    entries = 0
    for s, e in outcomes:
        stats += s
        entries += e
    return CliqueResult(
        size=best.size,
        members=best.members,
        stats=stats,
        elapsed=time.perf_counter() - start,
        found=bool(best.members),
        loop_entries=entries,
    )
