"""The (k,l) pebble game on multigraphs with self-loops.

Each vertex starts with ``k`` pebbles.  Placing an edge spends one pebble
from an endpoint and directs the edge out of it, so ``pebbles(v) +
outdegree(v) = k`` at all times.  An edge ``uv`` is accepted when ``l + 1``
pebbles can be gathered on ``{u, v}`` (on ``v`` alone for a loop at ``v``);
pebbles are fetched by reversing a directed path to a vertex that holds one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import Multigraph

TIGHT, SPARSE, NOT_SPARSE = "tight", "sparse", "not-sparse"

# tails[i] is the tail vertex of edge i (loops: their own vertex)
Orientation = tuple[int, ...]


@dataclass
class PebbleState:
    k: int
    pebbles: list[int]
    tails: list[int | None]
    out: list[set[int]]
    accepted: set[int] = field(default_factory=set)

    @classmethod
    def fresh(cls, n: int, m: int, k: int) -> "PebbleState":
        return cls(k, [k] * n, [None] * m, [set() for _ in range(n)])

    def check_invariant(self):
        for v, p in enumerate(self.pebbles):
            assert p + len(self.out[v]) == self.k, f"pebble invariant broken at {v}"


@dataclass(frozen=True)
class PebbleResult:
    status: str
    orientation: Orientation | None = None   # complete when every edge was accepted
    free_pebbles: int = 0
    witness_edge: int | None = None
    witness: frozenset[int] | None = None    # vertex set spanning a violating subgraph

    @property
    def tight(self) -> bool:
        return self.status == TIGHT

    @property
    def sparse(self) -> bool:
        return self.status != NOT_SPARSE


def _head(g: Multigraph, i: int, tail: int) -> int:
    u, v = g.edges[i]
    return v if tail == u else u


def _reach(g: Multigraph, st: PebbleState, roots: Sequence[int]) -> set[int]:
    seen = set(roots)
    stack = list(roots)
    while stack:
        x = stack.pop()
        for i in st.out[x]:
            y = _head(g, i, x)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _fetch(g: Multigraph, st: PebbleState, root: int, forbid: set[int]) -> bool:
    """Move one pebble to ``root`` from a vertex outside ``forbid``."""
    parent: dict[int, tuple[int, int]] = {}
    seen = {root}
    stack = [root]
    while stack:
        x = stack.pop()
        for i in sorted(st.out[x]):
            y = _head(g, i, x)
            if y in seen:
                continue
            seen.add(y)
            parent[y] = (x, i)
            if y not in forbid and st.pebbles[y] > 0:
                # reverse the path root -> ... -> y
                st.pebbles[y] -= 1
                st.pebbles[root] += 1
                while y != root:
                    x, i = parent[y]
                    st.out[x].discard(i)
                    st.out[y].add(i)
                    st.tails[i] = y
                    y = x
                return True
            stack.append(y)
    return False


def pebble_game(g: Multigraph, k: int = 3, l: int = 0, order: Sequence[int] | None = None,
                debug: bool = False) -> PebbleResult:
    """Decide (k,l)-sparsity of ``g``.

    Returns a tight/sparse verdict with an orientation of the accepted edges,
    or the first rejected edge together with the vertices reachable from its
    endpoints, which span a subgraph with freedom ``k|V'| - |E'| < l``.
    """
    if k < 1 or not 0 <= l < 2 * k:
        raise ValueError(f"pebble game needs k >= 1 and 0 <= l <= 2k-1 (got k={k}, l={l})")
    st = PebbleState.fresh(g.n, g.m, k)
    for i in (range(g.m) if order is None else order):
        u, v = g.edges[i]
        if u == v:
            if l >= k:
                return PebbleResult(NOT_SPARSE, witness_edge=i, witness=frozenset({v}))
            while st.pebbles[v] < l + 1:
                if not _fetch(g, st, v, {v}):
                    return PebbleResult(NOT_SPARSE, witness_edge=i,
                                        witness=frozenset(_reach(g, st, [v])))
        else:
            while st.pebbles[u] + st.pebbles[v] < l + 1:
                if not (_fetch(g, st, u, {u, v}) or _fetch(g, st, v, {u, v})):
                    return PebbleResult(NOT_SPARSE, witness_edge=i,
                                        witness=frozenset(_reach(g, st, [u, v])))
        tail = u if st.pebbles[u] > 0 else v
        st.pebbles[tail] -= 1
        st.out[tail].add(i)
        st.tails[i] = tail
        st.accepted.add(i)
        if debug:
            st.check_invariant()
    free = sum(st.pebbles)
    orient = tuple(st.tails)  # type: ignore[arg-type]
    return PebbleResult(TIGHT if free == l else SPARSE, orient, free)


def verify_orientation(g: Multigraph, o: Sequence[int], k: int = 3, exact: bool = True) -> bool:
    """Does ``o`` give every vertex outdegree ``k`` (``<= k`` when not ``exact``)?"""
    if len(o) != g.m or any(t is None for t in o):
        raise ValueError("orientation must assign a tail to every edge")
    out = [0] * g.n
    for (u, v), t in zip(g.edges, o):
        if t not in (u, v):
            return False
        out[t] += 1
    return all(d == k for d in out) if exact else all(d <= k for d in out)


# ---------------------------------------------------------------------------
# certificate text

def format_orientation(o: Sequence[int]) -> str:
    return "".join(f"orient {i} tail={t}\n" for i, t in enumerate(o))


def parse_orientation(text: str, m: int | None = None) -> Orientation:
    tails: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3 or parts[0] != "orient" or not parts[2].startswith("tail="):
            raise ValueError(f"line {lineno}: expected 'orient <edge-index> tail=<v>'")
        tails[int(parts[1])] = int(parts[2][5:])
    size = m if m is not None else len(tails)
    if sorted(tails) != list(range(size)):
        raise ValueError("orientation certificate does not cover every edge exactly once")
    return tuple(tails[i] for i in range(size))


# ---------------------------------------------------------------------------
# moving between the two looped graphs of a single-B face graph

def boundary_orientation_transfer(G, o2sigma: Sequence[int]) -> Orientation:
    """Outdegree-3 orientation of the 3-loop graph from one of the 2-loop graph.

    In the 2-loop graph each boundary vertex spends two out-edges on loops, so
    the boundary cycle is oriented cyclically and every other edge at the
    boundary points into it.  Dropping the boundary edges and adding a loop
    per boundary vertex keeps all outdegrees at 3.
    """
    from .construct import looped_2sigma, looped_3sigma_minus

    g2 = looped_2sigma(G)
    g3 = looped_3sigma_minus(G)
    if not verify_orientation(g2, o2sigma, 3):
        raise ValueError("input is not an outdegree-3 orientation of the 2-loop graph")
    ring = G.block_face().cycle
    ring_edges = {(min(a, b), max(a, b)) for a, b in zip(ring, ring[1:] + ring[:1])}
    succ = {}
    for (u, v), t in zip(_labelled(g2), (g2.label(t) for t in o2sigma)):
        if u != v and (u, v) in ring_edges:
            succ[t] = v if t == u else u
    if len(succ) != len(ring) or len(set(succ.values())) != len(ring):
        raise AssertionError("boundary cycle of the 2-loop orientation is not cyclic")
    plain = {}
    for (u, v), t in zip(_labelled(g2), (g2.label(t) for t in o2sigma)):
        if u != v and (u, v) not in ring_edges:
            plain[(u, v)] = t
    index = {lab: i for i, lab in enumerate(g3.labels)}
    out = []
    for (u, v) in _labelled(g3):
        out.append(index[u] if u == v else index[plain[(u, v)]])
    return tuple(out)


def boundary_orientation_transfer_inverse(G, o3sigma: Sequence[int], reverse: bool = False) -> Orientation:
    """Inverse of :func:`boundary_orientation_transfer`; the boundary cycle is
    oriented along the B face's listed order (or against it)."""
    from .construct import looped_2sigma, looped_3sigma_minus

    g2 = looped_2sigma(G)
    g3 = looped_3sigma_minus(G)
    if not verify_orientation(g3, o3sigma, 3):
        raise ValueError("input is not an outdegree-3 orientation of the 3-loop graph")
    ring = list(G.block_face().cycle)
    if reverse:
        ring.reverse()
    ring_tail = {(min(a, b), max(a, b)): a for a, b in zip(ring, ring[1:] + ring[:1])}
    plain = {}
    for (u, v), t in zip(_labelled(g3), (g3.label(t) for t in o3sigma)):
        if u != v:
            plain[(u, v)] = t
    index = {lab: i for i, lab in enumerate(g2.labels)}
    out = []
    for (u, v) in _labelled(g2):
        if u == v:
            out.append(index[u])
        elif (u, v) in ring_tail:
            out.append(index[ring_tail[(u, v)]])
        else:
            out.append(index[plain[(u, v)]])
    return tuple(out)


def _labelled(g: Multigraph) -> list[tuple[int, int]]:
    res = []
    for u, v in g.edges:
        a, b = g.label(u), g.label(v)
        res.append((a, b) if a <= b else (b, a))
    return res
