"""Overlapping community detection by clique percolation over sampled cliques.

Instead of enumerating every maximal clique, each vertex contributes one
greedy max-degree maximal clique plus ``c`` randomized ones. Cliques sharing at
least ``k - 1`` vertices are linked, and each connected group of cliques
becomes one (possibly overlapping) community.
"""

from __future__ import annotations

import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import connected_components

from .graph import CsrGraph
from .heuristic import SelectionPolicy
from .oracle import enumerate_maximal_cliques

Clique = tuple[int, ...]


class CoverError(ValueError):
    pass


def maximal_clique_containing(g: CsrGraph, v: int, policy: SelectionPolicy | None = None) -> Clique:
    """Greedily grow a maximal clique around ``v``.

    The candidate set is always the common neighborhood of the clique so far,
    so the walk stops exactly when the clique is maximal. No size bound is
    used. ``policy`` chooses each step (``max_degree`` by default).
    """
    policy = policy or SelectionPolicy.max_degree()
    pick = policy.picker(g.degrees)
    clique = [v]
    cand = g.neighbors_of(v)
    while cand.size:
        u = int(cand[pick(cand)])
        clique.append(u)
        cand = np.intersect1d(cand, g.neighbors_of(u), assume_unique=True)
    return tuple(sorted(clique))


def _probe_seed(seed: int, v: int, probe: int) -> int:
    # Derived per (vertex, probe) so results do not depend on evaluation order.
    return int(np.random.SeedSequence([seed, v, probe]).generate_state(1, np.uint64)[0])


def _probe_vertex(g: CsrGraph, v: int, c: int, seed: int) -> list[Clique]:
    found = [maximal_clique_containing(g, v)]
    for probe in range(c):
        found.append(maximal_clique_containing(g, v, SelectionPolicy.random(_probe_seed(seed, v, probe))))
    return found


def collect_cliques(g: CsrGraph, k: int, c: int = 0, seed: int = 0, workers: int = 1) -> list[Clique]:
    """Collect ``n * (c + 1)`` probed maximal cliques, keep those of size >= ``k``.

    Duplicates are collapsed keeping first-seen order (vertex order, then probe
    order), so the output is a pure function of ``(g, k, c, seed)`` and the
    cliques at ``c`` are a superset of those at any smaller ``c``.
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    if c < 0:
        raise ValueError("c must be >= 0")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_vertex = list(pool.map(lambda v: _probe_vertex(g, v, c, seed), range(g.n)))
    else:
        per_vertex = [_probe_vertex(g, v, c, seed) for v in range(g.n)]
    seen: dict[Clique, None] = {}
    for cliques in per_vertex:
        for q in cliques:
            if len(q) >= k:
                seen.setdefault(q, None)
    return list(seen)


@dataclass
class OverlapMatrix:
    """Symmetric clique-clique overlap counts (diagonal = clique sizes), stored sparse."""

    counts: sparse.csr_array

    @property
    def size(self) -> int:
        return self.counts.shape[0]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return int(self.counts[ij])

    def diagonal(self) -> np.ndarray:
        return self.counts.diagonal()

    def toarray(self) -> np.ndarray:
        return self.counts.toarray()


def _incidence(cliques: Sequence[Iterable[int]], n: int | None = None) -> sparse.csr_array:
    rows = np.repeat(np.arange(len(cliques)), [len(q) for q in cliques])
    cols = np.fromiter((v for q in cliques for v in q), dtype=np.int64, count=rows.size)
    if n is None:
        n = int(cols.max()) + 1 if cols.size else 0
    data = np.ones(rows.size, dtype=np.int64)
    return sparse.csr_array((data, (rows, cols)), shape=(len(cliques), n))


def overlap_matrix(cliques: Sequence[Iterable[int]]) -> OverlapMatrix:
    b = _incidence(cliques)
    return OverlapMatrix(sparse.csr_array(b @ b.T))


def threshold_components(m: OverlapMatrix, k: int) -> list[list[int]]:
    """Group cliques (by row index) into k-clique-connected components.

    Rows with diagonal < ``k`` are dropped; surviving rows are linked when they
    share at least ``k - 1`` vertices. Components come out ordered by their
    smallest clique index.
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    keep = np.nonzero(m.diagonal() >= k)[0]
    if keep.size == 0:
        return []
    sub = m.counts[keep][:, keep].tocoo()
    linked = sub.data >= k - 1
    links = sparse.coo_array(
        (np.ones(int(linked.sum()), dtype=np.int8), (sub.row[linked], sub.col[linked])),
        shape=(keep.size, keep.size),
    )
    ncomp, labels = connected_components(links, directed=False)
    groups: dict[int, list[int]] = {}
    for idx, lab in zip(keep.tolist(), labels.tolist()):
        groups.setdefault(lab, []).append(idx)
    return sorted(groups.values(), key=lambda grp: grp[0])


@dataclass
class CommunitySet:
    communities: list[tuple[int, ...]]
    shared_nodes: int = field(init=False)

    def __post_init__(self):
        self.communities = sorted((tuple(sorted(c)) for c in self.communities), key=lambda c: (-len(c), c[0]))
        counts: dict[int, int] = {}
        for comm in self.communities:
            for v in comm:
                counts[v] = counts.get(v, 0) + 1
        self.shared_nodes = sum(1 for x in counts.values() if x >= 2)

    def __len__(self) -> int:
        return len(self.communities)

    def relabel(self, g: CsrGraph) -> list[list[int]]:
        return [[g.label(v) for v in comm] for comm in self.communities]


def communities_from_cliques(cliques: Sequence[Clique], k: int) -> CommunitySet:
    if not cliques:
        return CommunitySet([])
    comps = threshold_components(overlap_matrix(cliques), k)
    return CommunitySet([tuple(set().union(*(cliques[i] for i in comp))) for comp in comps])


def k_clique_communities(g: CsrGraph, k: int, c: int = 0, seed: int = 0, workers: int = 1) -> CommunitySet:
    return communities_from_cliques(collect_cliques(g, k, c, seed, workers), k)


def cpm_oracle(g: CsrGraph, k: int) -> CommunitySet:
    """Reference clique percolation seeded with every maximal clique."""
    if k < 3:
        raise ValueError("k must be >= 3")
    cliques = [tuple(sorted(q)) for q in enumerate_maximal_cliques(g) if len(q) >= k]
    return communities_from_cliques(cliques, k)


# Covers and the Omega index


@dataclass
class Cover:
    """Assignment of ``n`` nodes to any number of (overlapping) communities."""

    n: int
    communities: list[frozenset[int]]

    def __post_init__(self):
        for comm in self.communities:
            if any(not 0 <= v < self.n for v in comm):
                raise CoverError(f"community member out of range [0, {self.n})")

    @classmethod
    def from_memberships(cls, n: int, memberships: dict[int, Iterable[int]]) -> Cover:
        groups: dict[int, set[int]] = {}
        for node, comms in memberships.items():
            for cid in comms:
                groups.setdefault(cid, set()).add(node)
        return cls(n, [frozenset(groups[cid]) for cid in sorted(groups)])

    def memberships(self) -> dict[int, set[int]]:
        out: dict[int, set[int]] = {v: set() for v in range(self.n)}
        for idx, comm in enumerate(self.communities):
            for v in comm:
                out[v].add(idx)
        return out

    def pair_counts(self) -> np.ndarray:
        """Condensed (upper-triangle) array: communities shared by each node pair."""
        b = _incidence(list(self.communities), self.n).astype(np.int64)
        shared = (b.T @ b).toarray()
        return shared[np.triu_indices(self.n, k=1)]


def omega_index(a: Cover, b: Cover) -> float:
    """Chance-corrected agreement of two covers on per-pair co-membership counts."""
    if a.n != b.n:
        raise CoverError(f"covers span different node sets ({a.n} vs {b.n})")
    if a.n < 2:
        raise CoverError("omega index needs at least two nodes")
    ta, tb = a.pair_counts(), b.pair_counts()
    pairs = ta.size
    observed = np.count_nonzero(ta == tb) / pairs
    top = int(max(ta.max(), tb.max())) + 1
    ca = np.bincount(ta, minlength=top)
    cb = np.bincount(tb, minlength=top)
    expected = float(np.dot(ca, cb)) / pairs**2
    if expected == 1.0:
        return 1.0
    return float((observed - expected) / (1.0 - expected))


# File formats


def parse_communities(text: str) -> list[list[int]]:
    """One community per line, whitespace-separated node ids; ``#`` comments."""
    out = []
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append([int(tok) for tok in line.split()])
        except ValueError:
            raise CoverError(f"line {lineno}: non-integer node id") from None
    return out


def parse_memberships(text: str) -> list[list[int]]:
    """Ground-truth lines ``node comm1 comm2 ...``, returned as community lists."""
    groups: dict[int, list[int]] = {}
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            node, *comms = (int(tok) for tok in line.split())
        except ValueError:
            raise CoverError(f"line {lineno}: non-integer token") from None
        for cid in comms:
            groups.setdefault(cid, []).append(node)
    return [groups[cid] for cid in sorted(groups)]


def format_communities(communities: Iterable[Iterable[int]]) -> str:
    return "".join(" ".join(str(v) for v in comm) + "\n" for comm in communities)


def covers_from_labels(n: int, *labelled: list[list[int]]) -> list[Cover]:
    """Build covers over one shared universe of ``n`` nodes from raw node labels.

    Labels seen in any input are mapped to ``0..`` in ascending order; nodes
    that appear in no community fill the rest of the universe.
    """
    labels = sorted({v for comms in labelled for comm in comms for v in comm})
    if len(labels) > n:
        raise CoverError(f"{len(labels)} distinct node ids exceed the universe size {n}")
    index = {lab: i for i, lab in enumerate(labels)}
    return [Cover(n, [frozenset(index[v] for v in comm) for comm in comms]) for comms in labelled]
