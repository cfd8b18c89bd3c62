"""Slow, plain reference algorithms used to cross-check the real solvers."""

from __future__ import annotations

import time

from .exact import CliqueResult
from .graph import CsrGraph

MAX_BRUTE_FORCE_N = 64
MAX_ENUMERATE_N = 200
MAX_ENUMERATED = 10**6


class OracleLimitError(ValueError):
    """Input exceeds what the reference algorithms are willing to handle."""


def _adjacency_sets(g: CsrGraph) -> list[frozenset[int]]:
    return [frozenset(g.neighbors_of(v).tolist()) for v in range(g.n)]


def brute_force_max_clique(g: CsrGraph) -> CliqueResult:
    """Exhaustive maximum clique by plain candidate-set recursion.

    The only cut is the trivial one (current clique plus all candidates cannot
    beat the best); there is no degree filtering and no visit-order skipping.
    """
    if g.n > MAX_BRUTE_FORCE_N:
        raise OracleLimitError(f"brute force limited to n <= {MAX_BRUTE_FORCE_N}, got {g.n}")
    start = time.perf_counter()
    adj = [sum(1 << w for w in g.neighbors_of(v).tolist()) for v in range(g.n)]
    best: list[int] = []

    def grow(clique: list[int], candidates: int) -> None:
        nonlocal best
        if len(clique) > len(best):
            best = list(clique)
        while candidates:
            if len(clique) + candidates.bit_count() <= len(best):
                return
            v = candidates.bit_length() - 1
            candidates &= ~(1 << v)
            clique.append(v)
            grow(clique, candidates & adj[v])
            clique.pop()

    grow([], (1 << g.n) - 1)
    return CliqueResult(
        size=len(best),
        members=tuple(sorted(best)),
        elapsed=time.perf_counter() - start,
        found=bool(best),
    )


def enumerate_maximal_cliques(g: CsrGraph) -> list[frozenset[int]]:
    """All maximal cliques, each exactly once (Bron–Kerbosch without pivoting)."""
    if g.n > MAX_ENUMERATE_N:
        raise OracleLimitError(f"enumeration limited to n <= {MAX_ENUMERATE_N}, got {g.n}")
    adj = _adjacency_sets(g)
    out: list[frozenset[int]] = []

    def expand(r: frozenset[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(r)
            if len(out) > MAX_ENUMERATED:
                raise OracleLimitError(f"more than {MAX_ENUMERATED} maximal cliques")
            return
        for v in sorted(p):
            expand(r | {v}, p & adj[v], x & adj[v])
            p.discard(v)
            x.add(v)

    expand(frozenset(), set(range(g.n)), set())
    return out
