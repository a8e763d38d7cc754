"""Rigidity-matrix rank at random placements.

Euclidean verdicts are exact: the matrix is built over the field of integers
modulo the Mersenne prime 2^61 - 1 from uniformly random coordinates.  A
rank-r minor is a polynomial of degree at most r in the coordinates, so one
random placement misses the generic rank with probability at most r/p
(Schwartz-Zippel); independent seeds multiply the bound.

The l_p check is floating point and only offers numerical evidence.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .graph import SimpleGraph

PRIME = (1 << 61) - 1
DEFAULT_SEEDS = 3


@dataclass(frozen=True)
class RankReport:
    rank: int
    target: int
    seeds_used: int
    rigid: bool
    independent: bool

    @property
    def verdict(self) -> str:
        if self.rigid and self.independent:
            return "minimally-rigid"
        if self.rigid:
            return "rigid-dependent"
        if self.independent:
            return "independent-flexible"
        return "flexible-dependent"

    def line(self) -> str:
        return f"rank {self.rank} target {self.target} verdict {self.verdict} seeds {self.seeds_used}"


def rank_mod_p(rows: list[list[int]], p: int = PRIME) -> int:
    """Rank by Gaussian elimination over GF(p) with Python integers."""
    rows = [r[:] for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        inv = pow(prow[col], p - 2, p)
        prow = [(x * inv) % p for x in prow]
        rows[rank] = prow
        for i in range(rank + 1, len(rows)):
            f = rows[i][col] % p
            if f:
                r = rows[i]
                rows[i] = [(a - f * b) % p for a, b in zip(r, prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def rigidity_rows(g: SimpleGraph, coords: list[tuple[int, int, int]], p: int = PRIME) -> list[list[int]]:
    rows = []
    for u, v in g.edges:
        row = [0] * (3 * g.n)
        for a in range(3):
            d = (coords[u][a] - coords[v][a]) % p
            row[3 * u + a] = d
            row[3 * v + a] = (-d) % p
        rows.append(row)
    return rows


def random_placement(n: int, seed: int, p: int = PRIME) -> list[tuple[int, int, int]]:
    rng = random.Random(seed)
    return [(rng.randrange(p), rng.randrange(p), rng.randrange(p)) for _ in range(n)]


def rank_at(g: SimpleGraph, coords, p: int = PRIME) -> int:
    return rank_mod_p(rigidity_rows(g, coords, p), p)


def failure_bound(g: SimpleGraph, seeds: int = DEFAULT_SEEDS, p: int = PRIME) -> float:
    """Upper bound on the chance that every seed underestimates the generic rank."""
    r = min(g.m, 3 * g.n)
    return (r / p) ** seeds


def euclidean_rigidity_rank(g: SimpleGraph, seeds: int = DEFAULT_SEEDS, seed: int = 0) -> RankReport:
    """Maximum rigidity-matrix rank over ``seeds`` random placements mod p."""
    if g.n < 3:
        raise ValueError("rigidity rank needs at least 3 vertices")
    if seeds < 1:
        raise ValueError("seeds must be positive")
    full = 3 * g.n - 6
    best = used = 0
    for s in range(seeds):
        best = max(best, rank_at(g, random_placement(g.n, seed * 1_000_003 + s)))
        used += 1
        if best == min(g.m, full):
            break
    return RankReport(best, min(g.m, full), used, best == full, best == g.m)


def is_minimally_3_rigid_numeric(g: SimpleGraph, seeds: int = DEFAULT_SEEDS, seed: int = 0) -> bool:
    if g.n < 3:
        raise ValueError("rigidity rank needs at least 3 vertices")
    if g.m != 3 * g.n - 6:
        return False
    return euclidean_rigidity_rank(g, seeds, seed).independent


# ---------------------------------------------------------------------------
# l_p rigidity (floating point)

def lp_rigidity_matrix(g: SimpleGraph, x: np.ndarray, p: float) -> np.ndarray:
    mat = np.zeros((g.m, 3 * g.n))
    for r, (u, v) in enumerate(g.edges):
        d = x[u] - x[v]
        row = np.sign(d) * np.abs(d) ** (p - 1)
        mat[r, 3 * u:3 * u + 3] = row
        mat[r, 3 * v:3 * v + 3] = -row
    return mat


def numerical_rank(mat: np.ndarray, tol: float) -> int:
    if mat.size == 0:
        return 0
    s = np.linalg.svd(mat, compute_uv=False)
    return int((s > tol * s[0]).sum()) if s[0] > 0 else 0


def lp_ranks(g: SimpleGraph, p: float = 4.0, trials: int = 5, tol: float = 1e-8, seed: int = 0) -> list[int]:
    if not p > 1 or p == 2:
        raise ValueError("p must lie in (1, inf) and differ from 2")
    if trials < 3:
        raise ValueError("at least 3 trials are required")
    rng = np.random.default_rng(seed)
    return [numerical_rank(lp_rigidity_matrix(g, rng.standard_normal((g.n, 3)), p), tol)
            for _ in range(trials)]


def lp_independence_check(g: SimpleGraph, p: float = 4.0, trials: int = 5, tol: float = 1e-8,
                          seed: int = 0) -> bool:
    """Numerical evidence of independence in l_p^3: full row rank in every trial."""
    return all(r == g.m for r in lp_ranks(g, p, trials, tol, seed))


def lp_rigidity_evidence(g: SimpleGraph, p: float = 4.0, trials: int = 5, tol: float = 1e-8,
                         seed: int = 0) -> dict:
    """Rank data bearing on whether (3,3)-tight graphs are minimally rigid in l_p^3."""
    ranks = lp_ranks(g, p, trials, tol, seed)
    return {
        "ranks": ranks,
        "edges": g.m,
        "full_rank": 3 * g.n - 3,
        "count_33": 3 * g.n - g.m,
        "independent": all(r == g.m for r in ranks),
        "rigid": all(r == 3 * g.n - 3 for r in ranks),
    }
