"""Reduction of a discus-and-hole graph to K3 by edge contractions.

Every contraction removes one vertex and is the inverse of a vertex split, so
a certificate read backwards rebuilds the discus-and-hole graph from K3.
Moves are recorded on the discus-and-hole graph: the removed vertex, the
vertex it merges into, the two common neighbours, and the removed vertex's
remaining neighbours (``sideA``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .construct import discus_and_hole, looped_2sigma, poles
from .facegraph import (FaceGraph, FaceGraphError, bh_edges, contract_edge, enumerate_critical_separating_cycles,
                        is_contractible_BH, is_contractible_TT, is_tight, tt_edges,
                        contraction_preserves_tightness)
from .graph import SimpleGraph, canonical_hash, freedom


class NotTightError(ValueError):
    """The discus-and-hole graph is not (3,6)-tight; ``witness`` spans a dense subgraph."""

    def __init__(self, msg: str, witness: frozenset[int], witness_freedom: int):
        super().__init__(msg)
        self.witness = witness
        self.witness_freedom = witness_freedom


class ReductionStuck(RuntimeError):
    """No move applies although the input is tight: an implementation bug."""


@dataclass(frozen=True)
class Move:
    kind: str            # contractBH | contractTT | contractSphere
    keep: int
    removed: int
    common: tuple[int, int]
    side: tuple[int, ...]

    def line(self) -> str:
        u, v = sorted((self.keep, self.removed))
        return (f"{self.kind} {u} {v} keep={self.keep} common={self.common[0]},{self.common[1]} "
                f"sideA={','.join(map(str, self.side))}")


@dataclass(frozen=True)
class ReductionCertificate:
    start: tuple[int, int, int]
    moves: tuple[Move, ...]

    def __len__(self):
        return len(self.moves)

    def format(self) -> str:
        lines = [f"k3 {self.start[0]} {self.start[1]} {self.start[2]}"]
        lines += [m.line() for m in self.moves]
        return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> ReductionCertificate:
    start = None
    moves = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "k3":
                start = tuple(int(x) for x in parts[1:4])
                if len(start) != 3:
                    raise ValueError("k3 needs three vertices")
                continue
            if parts[0] not in ("contractBH", "contractTT", "contractSphere"):
                raise ValueError(f"unknown move {parts[0]!r}")
            u, v = int(parts[1]), int(parts[2])
            fields = dict(p.split("=", 1) for p in parts[3:])
            keep = int(fields["keep"])
            if keep not in (u, v):
                raise ValueError("keep must be an endpoint")
            common = tuple(int(x) for x in fields["common"].split(","))
            side = tuple(int(x) for x in fields.get("sideA", "").split(",") if x)
            if len(common) != 2:
                raise ValueError("common must list two vertices")
            moves.append(Move(parts[0], keep, v if keep == u else u, common, side))
        except (ValueError, KeyError, IndexError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if start is None:
        raise ValueError("certificate has no k3 line")
    return ReductionCertificate(start, tuple(moves))


# ---------------------------------------------------------------------------
# vertex splitting

def vertex_split(g: SimpleGraph, v: int, v1: int, v2: int, side: Sequence[int],
                 new_label: int | None = None) -> SimpleGraph:
    """Split ``v`` into ``v`` and a new vertex ``w``.

    ``w`` is joined to ``v``, ``v1``, ``v2`` and takes over the edges from
    ``v`` to the vertices in ``side``; the other neighbours stay with ``v``.
    Ids are dense; the new vertex gets id ``g.n`` (and ``new_label``).
    """
    adj = g.neighbours()
    side = set(side)
    if v1 == v2 or v1 not in adj[v] or v2 not in adj[v]:
        raise ValueError("v1 and v2 must be two distinct neighbours of v")
    if not side <= adj[v] - {v1, v2}:
        raise ValueError("side must consist of other neighbours of v")
    w = g.n
    moved = {(min(v, x), max(v, x)) for x in side}
    edges = [e for e in g.edges if e not in moved]
    edges += [(x, w) for x in sorted(side)] + [(v, w), (v1, w), (v2, w)]
    labels = None
    if g.labels is not None or new_label is not None:
        labels = tuple(g.label(i) for i in range(g.n)) + (w if new_label is None else new_label,)
    out = SimpleGraph(g.n + 1, tuple(edges), labels)
    assert freedom(out) == freedom(g)
    return out


def replay(cert: ReductionCertificate) -> SimpleGraph:
    """Rebuild the certified graph from K3 by the recorded splits (labelled)."""
    g = SimpleGraph(3, ((0, 1), (0, 2), (1, 2)), tuple(cert.start))
    for mv in reversed(cert.moves):
        index = {g.label(i): i for i in range(g.n)}
        if mv.removed in index:
            raise ValueError(f"vertex {mv.removed} already present")
        try:
            g = vertex_split(g, index[mv.keep], index[mv.common[0]], index[mv.common[1]],
                             [index[x] for x in mv.side], new_label=mv.removed)
        except KeyError as exc:
            raise ValueError(f"move references unknown vertex {exc}") from None
    return g


def verify_certificate(G: FaceGraph, cert: ReductionCertificate, hash_bound: int = 16) -> bool:
    """Does the replayed graph equal the discus-and-hole graph of ``G``?"""
    target = discus_and_hole(G)
    try:
        built = replay(cert)
    except ValueError:
        return False
    if len(cert.moves) != target.n - 3:
        return False
    if built.labelled_edges() != target.labelled_edges():
        return False
    if target.n <= hash_bound:
        return canonical_hash(built, hash_bound) == canonical_hash(target, hash_bound)
    return True


# ---------------------------------------------------------------------------
# the driver

class _Tracker:
    """Labelled adjacency of the discus-and-hole graph under contractions."""

    def __init__(self, g: SimpleGraph):
        self.adj = {g.label(i): {g.label(j) for j in nb} for i, nb in enumerate(g.neighbours())}
        self.moves: list[Move] = []

    def contract(self, kind: str, keep: int, gone: int):
        common = self.adj[keep] & self.adj[gone]
        if gone not in self.adj[keep] or len(common) != 2:
            raise ReductionStuck(f"{kind} {keep},{gone}: not the inverse of a vertex split")
        side = self.adj[gone] - {keep} - common
        a, b = sorted(common)
        self.moves.append(Move(kind, keep, gone, (a, b), tuple(sorted(side))))
        for x in self.adj.pop(gone):
            self.adj[x].discard(gone)
            if x != keep:
                self.adj[x].add(keep)
                self.adj[keep].add(x)


def _admissible(G: FaceGraph, e: tuple[int, int], method: str) -> bool:
    if method == "pebble":
        return contraction_preserves_tightness(G, e)
    return not enumerate_critical_separating_cycles(G, nonfacial_only=True, through=e)


def reduce_to_K3(G: FaceGraph, tt_method: str = "cycles") -> ReductionCertificate:
    """Contract ``G`` down to K3, recording each move on the discus-and-hole graph.

    BH contractions come first, then admissible TT contractions; once no B
    face is left, the poles are absorbed and the triangulated sphere is
    contracted edge by edge.  ``tt_method`` selects how TT admissibility is
    decided: critical-cycle enumeration (``"cycles"``) or contract-and-test
    (``"pebble"``).
    """
    if G.m_blocks > 1:
        raise ValueError("reduction is defined for at most one B face")
    dagger = discus_and_hole(G)
    if freedom(dagger) != 6:
        raise ValueError(f"discus-and-hole graph has freedom {freedom(dagger)}, not 6")
    if G.m_blocks == 1:
        _require_tight(G, dagger)
    elif G.n_holes:
        raise ValueError("a face graph without a B face must be a triangulated sphere")
    tr = _Tracker(dagger)
    pole_pair = poles(G)[0] if G.m_blocks else None

    while G.m_blocks == 1:
        move = None
        for e in bh_edges(G):
            if is_contractible_BH(G, e):
                move = ("contractBH", e)
                break
        if move is None:
            for e in tt_edges(G):
                if is_contractible_TT(G, e) and _admissible(G, e, tt_method):
                    move = ("contractTT", e)
                    break
        if move is None:
            raise ReductionStuck("no contractible BH edge and no admissible TT edge on a tight input")
        kind, (u, v) = move
        tr.contract(kind, u, v)
        G = contract_edge(G, u, v, keep=u)

    if any(f.label != "T" for f in G.faces):
        raise ReductionStuck("block face closed while a hole remains")
    if pole_pair is not None:
        # the B face is now a triangle a,b,c capped by two poles: absorb the second pole
        x, y = pole_pair
        a, b, c = sorted(tr.adj[y])
        tr.contract("contractSphere", a, y)
        tri = next(f.cycle for f in G.faces if set(f.cycle) == {a, b, c} and _is_block_triangle(tr, x, f.cycle))
        faces = [(f.label, f.cycle) for f in G.faces if f.cycle != tri]
        p, q, r = tri
        faces += [("T", (x, p, q)), ("T", (x, q, r)), ("T", (x, r, p))]
        G = FaceGraph(faces)

    while G.n > 3:
        for u, v in G.edges:
            if len(G.adjacency[u] & G.adjacency[v]) == 2:
                break
        else:
            raise ReductionStuck("triangulated sphere with every edge in a separating triangle")
        tr.contract("contractSphere", u, v)
        G = contract_edge(G, u, v, keep=u)
    a, b, c = sorted(tr.adj)
    return ReductionCertificate((a, b, c), tuple(tr.moves))


def _is_block_triangle(tr: _Tracker, x: int, cycle) -> bool:
    return all(v in tr.adj[x] for v in cycle)


def _require_tight(G: FaceGraph, dagger: SimpleGraph):
    if is_tight(G):
        return
    from .pebble import pebble_game

    g2 = looped_2sigma(G)
    res = pebble_game(g2)
    if res.witness is None:
        raise ReductionStuck("freedom 6 but the looped graph is neither tight nor rejected")
    core = {g2.label(v) for v in res.witness} | set(G.block_face().cycle) | set(poles(G)[0])
    ids = [i for i in range(dagger.n) if dagger.label(i) in core]
    sub_edges = sum(1 for a, b in dagger.edges if a in ids and b in ids)
    raise NotTightError("discus-and-hole graph is not (3,6)-tight",
                        frozenset(core), 3 * len(ids) - sub_edges)
