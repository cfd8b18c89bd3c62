"""Greedy maximum-clique heuristic.

Same outer loop as the exact solver (without the visited-neighbor rule), but
each start vertex follows a single greedy path: repeatedly pick one candidate
and intersect with its neighbors. Runs in O(n * maxdeg^2).
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .exact import CliqueResult, Incumbent, PruningStats
from .graph import CsrGraph


@dataclass(frozen=True)
class SelectionPolicy:
    """How the greedy step picks the next vertex from the candidate set.

    ``max_degree`` takes the candidate of largest degree in the whole graph,
    ties going to the lowest id. ``random`` draws uniformly, reproducibly from
    ``seed``.
    """

    kind: str = "max_degree"
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("max_degree", "random"):
            raise ValueError(f"unknown selection policy {self.kind!r}")

    @classmethod
    def max_degree(cls) -> SelectionPolicy:
        return cls("max_degree")

    @classmethod
    def random(cls, seed: int = 0) -> SelectionPolicy:
        return cls("random", seed)

    def picker(self, deg: np.ndarray, rng: np.random.Generator | None = None):
        """Return ``pick(candidates) -> index`` for a sorted candidate array."""
        if self.kind == "max_degree":
            # argmax returns the first maximum, i.e. the lowest id.
            return lambda cand: int(np.argmax(deg[cand]))
        rng = rng if rng is not None else np.random.default_rng(self.seed)
        return lambda cand: int(rng.integers(cand.size))


class HeuristicSearch:
    """Per-worker greedy search state; ``best`` may be shared."""

    def __init__(self, g: CsrGraph, best: Incumbent, policy: SelectionPolicy, rng=None):
        self.g = g
        self.best = best
        self.stats = PruningStats()
        self.loop_entries = 0
        self.pick = policy.picker(g.degrees, rng)

    def visit(self, v: int) -> None:
        g, best, stats = self.g, self.best, self.stats
        deg = g.degrees
        mx = best.size
        if deg[v] < mx:
            stats.p1 += 1
            return
        self.loop_entries += 1
        nb = g.neighbors_of(v)
        cand = nb[deg[nb] >= mx]
        stats.p3 += nb.size - cand.size
        path = [v]
        size = 1
        while cand.size:
            x = self.pick(cand)
            u = int(cand[x])
            mx = best.size
            nu = g.neighbors_of(u)
            keep = nu[deg[nu] >= mx]
            stats.p5 += nu.size - keep.size
            # u itself drops out here: no self-loops.
            cand = np.intersect1d(cand, keep, assume_unique=True)
            path.append(u)
            size += 1
        if size > best.size:
            best.offer(size, path)


def max_clique_heuristic(g: CsrGraph, policy: SelectionPolicy | None = None, restarts: int = 1) -> CliqueResult:
    """Approximate the maximum clique of ``g`` greedily.

    ``restarts`` repeats the whole pass; with the random policy each pass
    continues the same seeded stream and shares the incumbent. The result is
    always a valid clique, never larger than the optimum.
    """
    policy = policy or SelectionPolicy.max_degree()
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    start = time.perf_counter()
    best = Incumbent(0)
    search = HeuristicSearch(g, best, policy)
    passes = 1 if policy.kind == "max_degree" else restarts
    for _ in range(passes):
        for v in range(g.n):
            search.visit(v)
    return CliqueResult(
        size=best.size,
        members=best.members,
        stats=search.stats,
        elapsed=time.perf_counter() - start,
        found=bool(best.members),
        loop_entries=search.loop_entries,
    )
