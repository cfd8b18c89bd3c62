"""Seeded R-MAT generator (recursive quadrant subdivision of the adjacency matrix)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import CsrGraph, GraphInputError, build_csr

# Quadrant probabilities of the three synthetic families.
RMAT_ER = (0.25, 0.25, 0.25, 0.25)
RMAT_SD1 = (0.45, 0.15, 0.15, 0.25)
RMAT_SD2 = (0.55, 0.15, 0.15, 0.15)
FAMILIES = {"er": RMAT_ER, "sd1": RMAT_SD1, "sd2": RMAT_SD2}

MAX_SCALE = 24


@dataclass(frozen=True)
class RmatParams:
    a: float
    b: float
    c: float
    d: float
    scale: int
    target_edges: int
    seed: int = 0

    def __post_init__(self):
        probs = (self.a, self.b, self.c, self.d)
        if any(not 0.0 <= p <= 1.0 for p in probs):
            raise GraphInputError(f"quadrant probabilities must lie in [0, 1], got {probs}")
        if abs(sum(probs) - 1.0) > 1e-9:
            raise GraphInputError(f"quadrant probabilities must sum to 1, got {sum(probs)}")
        if not 0 <= self.scale <= MAX_SCALE:
            raise GraphInputError(f"scale must be in [0, {MAX_SCALE}], got {self.scale}")
        if self.target_edges < 0:
            raise GraphInputError("target_edges must be non-negative")

    @classmethod
    def family(cls, name: str, scale: int, target_edges: int, seed: int = 0) -> RmatParams:
        return cls(*FAMILIES[name], scale=scale, target_edges=target_edges, seed=seed)


def rmat_edges(p: RmatParams) -> np.ndarray:
    """Draw ``target_edges`` directed ``(src, dst)`` samples, raw (with loops/duplicates)."""
    rng = np.random.default_rng(p.seed)
    count = p.target_edges
    src = np.zeros(count, dtype=np.int64)
    dst = np.zeros(count, dtype=np.int64)
    cum = np.cumsum([p.a, p.b, p.c])
    # Process in blocks to bound memory at large targets.
    block = 1 << 20
    for lo in range(0, count, block):
        hi = min(lo + block, count)
        for level in range(p.scale):
            r = rng.random(hi - lo)
            quadrant = np.searchsorted(cum, r, side="right")
            bit = np.int64(1) << (p.scale - 1 - level)
            src[lo:hi] |= np.where(quadrant >= 2, bit, 0)
            dst[lo:hi] |= np.where(quadrant % 2 == 1, bit, 0)
    return np.column_stack([src, dst])


def rmat_generate(p: RmatParams) -> CsrGraph:
    """Generate an undirected simple R-MAT graph on ``2**scale`` vertices.

    Self-loops are dropped and duplicates collapsed (never resampled), so the
    realized edge count is at most ``target_edges``.
    """
    return build_csr(1 << p.scale, rmat_edges(p))
