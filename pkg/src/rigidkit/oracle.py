"""Brute-force (k,l)-sparsity checks by vertex-subset enumeration.

Only vertex-induced subgraphs are examined.  This is exhaustive: deleting
edges from a subgraph can only raise ``k|V'| - |E'|``, so if some edge
subset violates the count then so does the subgraph induced on its
vertices, which also has at least as many edges.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .graph import Multigraph

MAX_36_VERTICES = 24
MAX_30_VERTICES = 20
_CHUNK_BITS = 20


def _bound(default: int) -> int:
    env = os.environ.get("RIGIDKIT_MAX_VERTICES")
    return int(env) if env else default


@dataclass(frozen=True)
class SparsityReport:
    tight: bool
    sparse: bool
    witness: frozenset[int] | None = None
    witness_freedom: int | None = None

    def __post_init__(self):
        if (self.witness is None) != self.sparse:
            raise ValueError("witness present iff not sparse")


def _popcount(x: np.ndarray) -> np.ndarray:
    x = x.astype(np.uint32)
    x = x - ((x >> 1) & 0x55555555)
    x = (x & 0x33333333) + ((x >> 2) & 0x33333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F
    return ((x * 0x01010101) & 0xFFFFFFFF) >> 24


def check_kl(g: Multigraph, k: int, l: int, min_edges: int = 1,
             max_vertices: int | None = None) -> SparsityReport:
    """Is ``k|V'| - |E'| >= l`` for every induced subgraph with ``>= min_edges`` edges?

    The reported witness is a smallest violating vertex set (ties broken by
    lower freedom, then by the subset's bitmask).
    """
    bound = max_vertices if max_vertices is not None else _bound(MAX_30_VERTICES)
    if g.n > bound:
        raise ValueError(f"brute-force sparsity: {g.n} vertices exceeds bound {bound}")
    pairs = Counter(g.edges)
    n = g.n
    best = None  # (size, freedom, mask)
    total = 1 << n
    chunk = 1 << min(_CHUNK_BITS, max(n, 1))
    for start in range(0, total, chunk):
        masks = np.arange(start, min(start + chunk, total), dtype=np.int64)
        counts = np.zeros(masks.shape, dtype=np.int32)
        for (u, v), mult in pairs.items():
            inside = ((masks >> u) & (masks >> v) & 1).astype(np.int32)
            counts += mult * inside
        sizes = _popcount(masks).astype(np.int32)
        free = k * sizes - counts
        bad = (free < l) & (counts >= min_edges)
        if bad.any():
            idx = np.nonzero(bad)[0]
            order = np.lexsort((masks[idx], free[idx], sizes[idx]))
            j = idx[order[0]]
            cand = (int(sizes[j]), int(free[j]), int(masks[j]))
            if best is None or cand < best:
                best = cand
    if best is not None:
        witness = frozenset(v for v in range(n) if best[2] >> v & 1)
        return SparsityReport(False, False, witness, best[1])
    return SparsityReport(k * n - g.m == l, True)


def check_36(g: Multigraph, max_vertices: int | None = None) -> SparsityReport:
    """(3,6)-sparsity: subgraphs with at least two edges need freedom >= 6."""
    bound = max_vertices if max_vertices is not None else _bound(MAX_36_VERTICES)
    return check_kl(g, 3, 6, min_edges=2, max_vertices=bound)


def check_30(g: Multigraph, max_vertices: int | None = None) -> SparsityReport:
    bound = max_vertices if max_vertices is not None else _bound(MAX_30_VERTICES)
    return check_kl(g, 3, 0, min_edges=0, max_vertices=bound)
