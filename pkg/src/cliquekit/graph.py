"""Compressed adjacency graphs, text parsers and structured generators.

A :class:`CsrGraph` stores an undirected simple graph as two arrays: ``offsets``
(length ``n + 1``) and ``neighbors`` (length ``2m``), the concatenation of every
vertex's sorted neighbor list.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

INDEX_DTYPE = np.int64


class GraphInputError(ValueError):
    """Raised for malformed graph input (bad ids, bad tokens, bad parameters)."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class CsrGraph:
    """Immutable undirected simple graph in compressed sparse row layout.

    ``labels`` optionally maps internal vertex ids back to the ids used in the
    source file (edge-list input). ``None`` means the identity mapping.
    """

    n: int
    m: int
    offsets: np.ndarray
    neighbors: np.ndarray
    labels: np.ndarray | None = None
    degrees: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        self.offsets.setflags(write=False)
        self.neighbors.setflags(write=False)
        deg = np.diff(self.offsets)
        deg.setflags(write=False)
        object.__setattr__(self, "degrees", deg)

    def neighbors_of(self, v: int) -> np.ndarray:
        return self.neighbors[self.offsets[v] : self.offsets[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.offsets[v + 1] - self.offsets[v])

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors_of(u)
        k = np.searchsorted(nb, v)
        return bool(k < nb.size and nb[k] == v)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = sorted(set(int(v) for v in vertices))
        return all(self.has_edge(a, b) for a, b in combinations(vs, 2))

    def edges(self) -> np.ndarray:
        """Return an ``(m, 2)`` array of edges ``(u, v)`` with ``u < v``."""
        src = np.repeat(np.arange(self.n, dtype=INDEX_DTYPE), self.degrees)
        keep = src < self.neighbors
        return np.column_stack([src[keep], self.neighbors[keep]])

    def label(self, v: int) -> int:
        return int(self.labels[v]) if self.labels is not None else int(v)

    def validate(self) -> None:
        """Check every structural invariant; raise ``AssertionError`` on failure."""
        off, nb = self.offsets, self.neighbors
        assert off.shape == (self.n + 1,)
        assert off[0] == 0 and off[-1] == 2 * self.m == nb.size
        assert np.all(np.diff(off) >= 0)
        for v in range(self.n):
            s = nb[off[v] : off[v + 1]]
            assert np.all(np.diff(s) > 0), f"neighbors of {v} not strictly ascending"
            assert not np.any(s == v), f"self-loop at {v}"
            assert s.size == 0 or (s[0] >= 0 and s[-1] < self.n)
        e = self.edges()
        fwd = set(map(tuple, e.tolist()))
        src = np.repeat(np.arange(self.n), self.degrees)
        back = {(int(b), int(a)) for a, b in zip(src, nb) if a > b}
        assert fwd == back, "adjacency is not symmetric"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CsrGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.m == other.m
            and np.array_equal(self.offsets, other.offsets)
            and np.array_equal(self.neighbors, other.neighbors)
        )

    __hash__ = None  # type: ignore[assignment]


def build_csr(
    n: int,
    edges: Sequence[tuple[int, int]] | np.ndarray,
    labels: np.ndarray | None = None,
) -> CsrGraph:
    """Build a normalized :class:`CsrGraph` from an arbitrary list of pairs.

    Self-loops are dropped, duplicates collapsed and every pair symmetrized.
    """
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    arr = np.asarray(edges, dtype=INDEX_DTYPE).reshape(-1, 2)
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        bad = arr[(arr < 0) | (arr >= n)][0]
        raise GraphInputError(f"endpoint {int(bad)} out of range [0, {n})")
    arr = arr[arr[:, 0] != arr[:, 1]]
    both = np.concatenate([arr, arr[:, ::-1]])
    # Encode as one key so a single unique() both dedups and sorts by (src, dst).
    keys = np.unique(both[:, 0] * max(n, 1) + both[:, 1])
    src = keys // max(n, 1)
    dst = keys % max(n, 1)
    offsets = np.zeros(n + 1, dtype=INDEX_DTYPE)
    np.cumsum(np.bincount(src, minlength=n), out=offsets[1:])
    return CsrGraph(n, int(keys.size // 2), offsets, dst.astype(INDEX_DTYPE), labels)


def _as_text(data: str | bytes) -> str:
    return data.decode() if isinstance(data, (bytes, bytearray)) else data


def parse_dimacs(data: str | bytes) -> CsrGraph:
    """Parse the ASCII DIMACS clique format (``c``, ``p edge n m``, ``e u v``)."""
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(io.StringIO(_as_text(data)), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise GraphInputError("duplicate problem line", lineno)
            if len(parts) != 4:
                raise GraphInputError("expected 'p edge <n> <m>'", lineno)
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise GraphInputError("non-integer token in problem line", lineno) from None
        elif tag == "e":
            if n is None:
                raise GraphInputError("edge before problem line", lineno)
            if len(parts) != 3:
                raise GraphInputError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphInputError("non-integer vertex id", lineno) from None
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphInputError(f"vertex id {x} out of range [1, {n}]", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise GraphInputError(f"unknown record type {tag!r}", lineno)
    if n is None:
        raise GraphInputError("missing problem line")
    return build_csr(n, edges)


def to_dimacs(g: CsrGraph, comment: str | None = None) -> str:
    out = io.StringIO()
    if comment:
        for line in comment.splitlines():
            out.write(f"c {line}\n")
    out.write(f"p edge {g.n} {g.m}\n")
    for u, v in g.edges().tolist():
        out.write(f"e {u + 1} {v + 1}\n")
    return out.getvalue()


def parse_edge_list(data: str | bytes) -> CsrGraph:
    """Parse whitespace-separated ``u v`` lines into a graph.

    Arbitrary non-negative ids are compacted to ``0..n-1`` in first-seen order;
    the original ids are kept in ``labels``. Lines starting with ``#`` or ``%``
    are comments.
    """
    index: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(io.StringIO(_as_text(data)), start=1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        parts = line.split()
        if len(parts) < 2:
            raise GraphInputError("expected two vertex ids", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError("non-integer vertex id", lineno) from None
        if a < 0 or b < 0:
            raise GraphInputError("vertex ids must be non-negative", lineno)
        edges.append((index.setdefault(a, len(index)), index.setdefault(b, len(index))))
    labels = np.fromiter(index.keys(), dtype=INDEX_DTYPE, count=len(index))
    return build_csr(len(index), edges, labels=labels)


def to_edge_list(g: CsrGraph, comment: str | None = None) -> str:
    out = io.StringIO()
    if comment:
        for line in comment.splitlines():
            out.write(f"# {line}\n")
    e = g.edges()
    if g.labels is not None:
        e = g.labels[e]
    for u, v in e.tolist():
        out.write(f"{u} {v}\n")
    return out.getvalue()


def _popcount(x: np.ndarray) -> np.ndarray:
    bits = np.unpackbits(np.ascontiguousarray(x, dtype=np.uint64).view(np.uint8).reshape(-1, 8), axis=1)
    return bits.sum(axis=1, dtype=np.int64)


def _distance_graph(words: np.ndarray, min_dist: int) -> CsrGraph:
    n = words.size
    parts = []
    for i in range(n - 1):
        d = _popcount(words[i] ^ words[i + 1 :])
        js = np.nonzero(d >= min_dist)[0] + i + 1
        parts.append(np.column_stack([np.full(js.size, i), js]))
    edges = np.concatenate(parts) if parts else np.empty((0, 2), dtype=INDEX_DTYPE)
    return build_csr(n, edges)


def generate_hamming(length: int, min_dist: int) -> CsrGraph:
    """All ``length``-bit words, joined when their Hamming distance is >= ``min_dist``.

    ``generate_hamming(6, 4)`` is the DIMACS instance hamming6-4.
    """
    if not 1 <= min_dist <= length <= 20:
        raise GraphInputError(f"need 1 <= min_dist <= length <= 20, got ({length}, {min_dist})")
    return _distance_graph(np.arange(1 << length, dtype=np.uint64), min_dist)


def generate_johnson(n_set: int, weight: int, min_dist: int) -> CsrGraph:
    """Weight-``weight`` words of ``n_set`` bits, joined at Hamming distance >= ``min_dist``.

    Vertices are ordered lexicographically by subset (``itertools.combinations``).
    """
    if not (1 <= weight <= n_set <= 16) or min_dist < 1:
        raise GraphInputError(
            f"need 1 <= weight <= n_set <= 16 and min_dist >= 1, got ({n_set}, {weight}, {min_dist})"
        )
    words = np.array(
        [sum(1 << b for b in subset) for subset in combinations(range(n_set), weight)],
        dtype=np.uint64,
    )
    return _distance_graph(words, min_dist)


def complete_graph(n: int) -> CsrGraph:
    return build_csr(n, list(combinations(range(n), 2)))


def gnp_graph(n: int, p: float, seed: int) -> CsrGraph:
    """Erdős–Rényi G(n, p) with a seeded numpy generator."""
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return build_csr(n, np.column_stack([iu[keep], ju[keep]]))
