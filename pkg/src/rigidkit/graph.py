"""Multigraphs with self-loops, freedom counts and canonical hashing.

Edges are stored positionally: ``g.edges[i]`` is edge ``i``.  A self-loop at
``v`` is the pair ``(v, v)`` and counts once towards ``|E|``.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Iterable, Sequence

DEFAULT_HASH_BOUND = 16


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()
    # original vertex ids, when this graph was derived from another one
    labels: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        norm = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", tuple(norm))
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError("labels must name every vertex")
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def m(self) -> int:
        return len(self.edges)

    def loop_count(self) -> int:
        return sum(1 for u, v in self.edges if u == v)

    def neighbours(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    def label(self, v: int) -> int:
        return v if self.labels is None else self.labels[v]

    def add_edges(self, extra: Iterable[tuple[int, int]]) -> "Multigraph":
        return type(self)(self.n, self.edges + tuple(extra), self.labels)


class SimpleGraph(Multigraph):
    """A multigraph without loops or repeated pairs."""

    def __post_init__(self):
        super().__post_init__()
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u} in a simple graph")
            if (u, v) in seen:
                raise ValueError(f"repeated edge ({u}, {v}) in a simple graph")
            seen.add((u, v))

    @classmethod
    def from_labelled(cls, edges: Iterable[tuple[int, int]],
                      vertices: Iterable[int] = ()) -> "SimpleGraph":
        """Build from edges on arbitrary integer labels; ids follow sorted label order."""
        edges = [tuple(e) for e in edges]
        verts = sorted(set(vertices) | {x for e in edges for x in e})
        index = {x: i for i, x in enumerate(verts)}
        return cls(len(verts), tuple((index[u], index[v]) for u, v in edges), tuple(verts))

    def labelled_edges(self) -> frozenset[tuple[int, int]]:
        out = set()
        for u, v in self.edges:
            a, b = self.label(u), self.label(v)
            out.add((a, b) if a < b else (b, a))
        return frozenset(out)


def freedom(g: Multigraph) -> int:
    return 3 * g.n - len(g.edges)


def induced_subgraph(g: Multigraph, vs: Iterable[int]) -> Multigraph:
    """Subgraph on ``vs`` with every edge and loop inside it, reindexed densely.

    ``result.labels`` maps the new ids back to the ids of ``g`` (or to the
    labels of ``g`` when it carries some).
    """
    vs = sorted(set(vs))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(vs)}
    edges = tuple((index[u], index[v]) for u, v in g.edges if u in index and v in index)
    return type(g)(len(vs), edges, tuple(g.label(v) for v in vs))


def disjoint_union(g1: Multigraph, g2: Multigraph) -> Multigraph:
    shifted = tuple((u + g1.n, v + g1.n) for u, v in g2.edges)
    return Multigraph(g1.n + g2.n, g1.edges + shifted)


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


# ---------------------------------------------------------------------------
# text format

def format_multigraph(g: Multigraph) -> str:
    lines = [f"multigraph {g.n}"]
    for u, v in g.edges:
        lines.append(f"loop {u}" if u == v else f"edge {u} {v}")
    return "\n".join(lines) + "\n"


def parse_multigraph(text: str) -> Multigraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if n is None:
                if parts[0] != "multigraph" or len(parts) != 2:
                    raise ValueError("expected 'multigraph <n>'")
                n = int(parts[1])
            elif parts[0] == "edge" and len(parts) == 3:
                edges.append((int(parts[1]), int(parts[2])))
            elif parts[0] == "loop" and len(parts) == 2:
                edges.append((int(parts[1]), int(parts[1])))
            else:
                raise ValueError(f"unrecognised line {line!r}")
        except (ValueError, IndexError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if n is None:
        raise ValueError("empty multigraph description")
    return Multigraph(n, tuple(edges))


# ---------------------------------------------------------------------------
# canonical labelling (individualisation-refinement with automorphism pruning)

def _refine(adj: Sequence[set[int]], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; sub-cells are ordered by neighbour counts."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for i in range(len(cells)):
            splitter = set(cells[i])
            out: list[list[int]] = []
            split_any = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                buckets: dict[int, list[int]] = {}
                for v in cell:
                    buckets.setdefault(len(adj[v] & splitter), []).append(v)
                if len(buckets) > 1:
                    split_any = True
                    out.extend(sorted(b) for _, b in sorted(buckets.items()))
                else:
                    out.append(cell)
            if split_any:
                cells = out
                changed = True
                break
    return cells


def _orbit_rep(generators: list[tuple[int, ...]], fixed: tuple[int, ...], n: int) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        if all(gen[p] == p for p in fixed):
            for x in range(n):
                a, b = find(x), find(gen[x])
                if a != b:
                    parent[max(a, b)] = min(a, b)
    return [find(x) for x in range(n)]


def canonical_form(g: SimpleGraph, colors: Sequence[int] | None = None) -> tuple:
    """Canonical certificate of a (vertex-coloured) simple graph."""
    n = g.n
    adj = g.neighbours()
    colors = list(colors) if colors is not None else [0] * n
    start: list[list[int]] = []
    for c in sorted(set(colors)):
        start.append(sorted(v for v in range(n) if colors[v] == c))
    best: list = [None, None]  # certificate, labelling
    generators: list[tuple[int, ...]] = []

    def certificate(order: list[int]) -> tuple:
        pos = {v: i for i, v in enumerate(order)}
        es = sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in g.edges)
        return (tuple(colors[v] for v in order), tuple(es))

    def search(cells: list[list[int]], prefix: tuple[int, ...]):
        cells = _refine(adj, cells)
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = idx
        if target is None:
            order = [c[0] for c in cells]
            cert = certificate(order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            elif cert == best[0]:
                # order and best order induce the same certificate: record the automorphism
                gen = [0] * n
                for a, b in zip(best[1], order):
                    gen[a] = b
                generators.append(tuple(gen))
            return
        done: list[int] = []
        for v in cells[target]:
            if done:
                orb = _orbit_rep(generators, prefix, n)
                if any(orb[v] == orb[u] for u in done):
                    continue
            rest = [x for x in cells[target] if x != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            search(child, prefix + (v,))
            done.append(v)

    if n == 0:
        return ((), ())
    search(start, ())
    return best[0]


def canonical_hash(g: SimpleGraph, bound: int = DEFAULT_HASH_BOUND,
                   colors: Sequence[int] | None = None) -> str:
    if g.n > bound:
        raise ValueError(f"canonical_hash: {g.n} vertices exceeds bound {bound}")
    cert = canonical_form(g, colors)
    return hashlib.sha256(repr((g.n, cert)).encode()).hexdigest()
