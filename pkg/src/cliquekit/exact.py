"""Exact maximum clique by hierarchical branch-and-bound pruning.

The outer loop visits every vertex and searches for the largest clique that
contains it among its *later* neighbors; the inner recursion grows a partial
clique one vertex at a time. Five prunings cut the search:

1. skip a vertex whose degree is below the incumbent size,
2. skip neighbors that were already visited by the outer loop,
3. skip neighbors whose degree is below the incumbent size,
4. abandon a branch when even taking every candidate cannot beat the incumbent,
5. drop low-degree vertices from a neighbor list before intersecting.

Inside one outer iteration the candidate set is always a subset of the first
candidate list, so the recursion works on bitmasks over that list.
"""

from __future__ import annotations

import sys
import threading
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .graph import CsrGraph

# Deep recursion only happens on graphs with very large cliques.
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


@dataclass
class PruningStats:
    """Event counters, one per pruning rule.

    ``p1``, ``p2``, ``p3`` and ``p5`` count vertices, ``p4`` counts cut branches.
    """

    p1: int = 0
    p2: int = 0
    p3: int = 0
    p4: int = 0
    p5: int = 0

    def __iadd__(self, other: PruningStats) -> PruningStats:
        self.p1 += other.p1
        self.p2 += other.p2
        self.p3 += other.p3
        self.p4 += other.p4
        self.p5 += other.p5
        return self

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


@dataclass
class CliqueResult:
    """Outcome of a clique search.

    ``found`` is False when nothing larger than the lower bound exists; then
    ``size`` equals the bound and ``members`` is empty.
    """

    size: int
    members: tuple[int, ...]
    stats: PruningStats = field(default_factory=PruningStats)
    elapsed: float = 0.0
    found: bool = True
    loop_entries: int = 0


class Incumbent:
    """Best clique found so far, safe to share between threads.

    Reads of ``size`` are lock-free and may be stale (which only weakens
    pruning). ``offer`` raises the bound atomically together with its witness.
    """

    def __init__(self, lb: int = 0, on_update: Callable[[int, tuple[int, ...]], None] | None = None):
        self.size = lb
        self.members: tuple[int, ...] = ()
        self._lock = threading.Lock()
        self._on_update = on_update

    def offer(self, size: int, members: Sequence[int]) -> bool:
        if size <= self.size:
            return False
        with self._lock:
            if size <= self.size:
                return False
            self.members = tuple(sorted(int(v) for v in members))
            self.size = size
            if self._on_update is not None:
                self._on_update(size, self.members)
            return True


def _mask_from_indices(idx: np.ndarray, k: int) -> int:
    bits = np.zeros(k, dtype=bool)
    bits[idx] = True
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def _mask_from_bools(bits: np.ndarray) -> int:
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


class ExactSearch:
    """Per-worker search state for one graph.

    Holds scratch buffers, so each thread needs its own instance; the graph
    and the :class:`Incumbent` are shared.
    """

    def __init__(self, g: CsrGraph, best: Incumbent, position: np.ndarray | None = None):
        self.g = g
        self.best = best
        self.stats = PruningStats()
        self.loop_entries = 0
        self.deg = g.degrees
        self.offsets = g.offsets
        self.neighbors = g.neighbors
        self.position = np.arange(g.n) if position is None else position
        self._lookup = np.full(g.n, -1, dtype=np.int64)
        self._nbr_deg, self._min_nbr_deg = _sorted_neighbor_degrees(g)

    # Outer loop body for a single vertex.
    def visit(self, v: int) -> None:
        mx = self.best.size
        if self.deg[v] < mx:  # Pruning 1
            self.stats.p1 += 1
            return
        self.loop_entries += 1
        nb = self.neighbors[self.offsets[v] : self.offsets[v + 1]]
        later = self.position[nb] > self.position[v]
        cand = nb[later]
        self.stats.p2 += nb.size - cand.size  # Pruning 2
        high = cand[self.deg[cand] >= mx]
        self.stats.p3 += cand.size - high.size  # Pruning 3
        self.extend(high, 1, (v,))

    def extend(self, candidates: np.ndarray, size: int, prefix: Sequence[int]) -> int:
        """Run the recursive subroutine on ``candidates`` (sorted, global ids).

        Returns the deepest nesting level reached below this call.
        """
        best = self.best
        if candidates.size == 0:
            if size > best.size:
                best.offer(size, prefix)
            return 0
        if size + candidates.size <= best.size:  # Pruning 4, before any setup
            self.stats.p4 += 1
            return 0

        local = candidates.tolist()
        k = len(local)
        lookup = self._lookup
        lookup[candidates] = np.arange(k)
        adj: list[int | None] = [None] * k
        cand_deg = self.deg[candidates]
        hi_cache = [-1, 0]
        offsets, neighbors = self.offsets, self.neighbors
        nbr_deg, min_nbr_deg = self._nbr_deg, self._min_nbr_deg
        stats = self.stats
        path: list[int] = list(prefix)
        deepest = 0

        def high_mask(mx: int) -> int:
            if hi_cache[0] != mx:
                hi_cache[0] = mx
                hi_cache[1] = _mask_from_bools(cand_deg >= mx)
            return hi_cache[1]

        def adjacency(x: int) -> int:
            a = adj[x]
            if a is None:
                u = local[x]
                loc = lookup[neighbors[offsets[u] : offsets[u + 1]]]
                a = adj[x] = _mask_from_indices(loc[loc >= 0], k)
            return a

        def clique(umask: int, size: int, depth: int) -> None:
            nonlocal deepest
            if depth > deepest:
                deepest = depth
            if not umask:
                if size > best.size:
                    best.offer(size, path)
                return
            while umask:
                mx = best.size
                if size + umask.bit_count() <= mx:  # Pruning 4
                    stats.p4 += 1
                    return
                low = umask & -umask
                x = low.bit_length() - 1
                umask ^= low
                u = local[x]
                # Pruning 5: neighbors of u with degree below the incumbent.
                if mx > min_nbr_deg[u]:
                    seg = nbr_deg[offsets[u] : offsets[u + 1]]
                    stats.p5 += int(np.searchsorted(seg, mx, "left"))
                path.append(u)
                clique(umask & adjacency(x) & high_mask(mx), size + 1, depth + 1)
                path.pop()

        try:
            clique((1 << k) - 1, size, 0)
        finally:
            lookup[candidates] = -1
        return deepest


def _sorted_neighbor_degrees(g: CsrGraph) -> tuple[np.ndarray, list[int]]:
    """Degrees of each vertex's neighbors, sorted within each vertex's slice."""
    cache = getattr(g, "_nbr_deg_cache", None)
    if cache is not None:
        return cache
    src = np.repeat(np.arange(g.n), g.degrees)
    nd = g.degrees[g.neighbors]
    nd = nd[np.lexsort((nd, src))]
    big = np.iinfo(np.int64).max
    mins = np.full(g.n, big, dtype=np.int64)
    nonempty = g.degrees > 0
    mins[nonempty] = nd[g.offsets[:-1][nonempty]]
    cache = (nd, mins.tolist())
    object.__setattr__(g, "_nbr_deg_cache", cache)
    return cache


def check_order(n: int, order: Iterable[int] | None) -> np.ndarray:
    if order is None:
        return np.arange(n)
    arr = np.asarray(list(order), dtype=np.int64)
    if arr.shape != (n,) or not np.array_equal(np.sort(arr), np.arange(n)):
        raise ValueError("order must be a permutation of 0..n-1")
    return arr


def positions_of(order: np.ndarray) -> np.ndarray:
    pos = np.empty_like(order)
    pos[order] = np.arange(order.size)
    return pos


def max_clique(
    g: CsrGraph,
    lb: int = 0,
    order: Iterable[int] | None = None,
    *,
    on_bound: Callable[[int, tuple[int, ...]], None] | None = None,
) -> CliqueResult:
    """Find a maximum clique of ``g`` exactly.

    Args:
        g: input graph.
        lb: known lower bound; only cliques strictly larger than it are reported.
        order: permutation giving the outer-loop visiting order (default: by id).
        on_bound: called with ``(size, members)`` each time the incumbent grows.

    Returns:
        A :class:`CliqueResult`. If no clique beats ``lb`` the result has
        ``found=False``, ``size=lb`` and no members.
    """
    if lb < 0:
        raise ValueError("lb must be non-negative")
    start = time.perf_counter()
    seq = check_order(g.n, order)
    best = Incumbent(lb, on_bound)
    search = ExactSearch(g, best, positions_of(seq))
    for v in seq.tolist():
        search.visit(v)
    found = bool(best.members)
    return CliqueResult(
        size=best.size,
        members=best.members,
        stats=search.stats,
        elapsed=time.perf_counter() - start,
        found=found,
        loop_entries=search.loop_entries,
    )


def clique_extend(
    g: CsrGraph,
    candidates: Iterable[int],
    size: int,
    best: Incumbent,
    stats: PruningStats | None = None,
    prefix: Sequence[int] = (),
) -> int:
    """Grow a partial clique of ``size`` vertices using ``candidates``.

    ``candidates`` must all be adjacent to every vertex of the partial clique
    (``prefix``, used only for the reported witness). ``best`` is raised in
    place; the return value is the deepest recursion level reached.
    """
    search = ExactSearch(g, best)
    if stats is not None:
        search.stats = stats
    cand = np.unique(np.asarray(list(candidates), dtype=np.int64))
    return search.extend(cand, size, tuple(prefix))
