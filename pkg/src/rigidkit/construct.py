"""Graphs derived from a face graph: discs, blocks, looped graphs, origami.

Derived graphs keep face-graph vertex ids in ``labels``.  Auxiliary vertices
(discus poles, block interiors) get ids above every face-graph id, allocated
in B-face order, so references translate both ways.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .facegraph import FaceGraph, FaceGraphError
from .graph import Multigraph, SimpleGraph


def _cycle_edges(c: Sequence[int]) -> list[tuple[int, int]]:
    return [(min(a, b), max(a, b)) for a, b in zip(c, list(c[1:]) + [c[0]])]


def discus(k: int) -> SimpleGraph:
    """Boundary cycle ``0..k-1`` and two poles ``k, k+1`` joined to every boundary vertex."""
    if k < 3:
        raise ValueError("a discus needs a boundary of length at least 3")
    edges = _cycle_edges(list(range(k)))
    edges += [(i, k) for i in range(k)] + [(i, k + 1) for i in range(k)]
    return SimpleGraph(k + 2, tuple(edges))


def _pole_labels(G: FaceGraph) -> dict[int, tuple[int, int]]:
    base = max(G.vertices) + 1
    return {fi: (base + 2 * j, base + 2 * j + 1) for j, fi in enumerate(G.faces_with("B"))}


def discus_and_hole(G: FaceGraph) -> SimpleGraph:
    """``G`` with a discus glued onto every B face boundary (labelled graph)."""
    edges = list(G.edges)
    verts = list(G.vertices)
    for fi, (x, y) in _pole_labels(G).items():
        verts += [x, y]
        for v in G.faces[fi].cycle:
            edges += [(v, x), (v, y)]
    return SimpleGraph.from_labelled(edges, verts)


def poles(G: FaceGraph) -> list[tuple[int, int]]:
    return list(_pole_labels(G).values())


# ---------------------------------------------------------------------------
# general blocks

@dataclass(frozen=True)
class BlockSpec:
    """``kind`` is ``"discus"`` or ``"custom"``; custom blocks carry a graph and
    the ids of its vertices along the boundary, in the B face's cyclic order."""
    kind: str = "discus"
    graph: SimpleGraph | None = None
    boundary: tuple[int, ...] = ()

    @classmethod
    def custom(cls, graph: SimpleGraph, boundary: Sequence[int]) -> "BlockSpec":
        return cls("custom", graph, tuple(boundary))


@dataclass(frozen=True)
class BlockAndHoleGraph:
    base: FaceGraph
    blocks: tuple[BlockSpec, ...]
    graph: SimpleGraph
    aux: dict[int, tuple[int, ...]] = field(default_factory=dict)  # B face index -> auxiliary labels


def block_and_hole(G: FaceGraph, blocks: Sequence[BlockSpec] | None = None,
                   check: bool = True) -> BlockAndHoleGraph:
    """Glue one minimally 3-rigid block onto each B face boundary."""
    from .numeric import is_minimally_3_rigid_numeric

    bfaces = G.faces_with("B")
    blocks = tuple(blocks) if blocks is not None else tuple(BlockSpec() for _ in bfaces)
    if len(blocks) != len(bfaces):
        raise ValueError(f"{len(bfaces)} B faces but {len(blocks)} blocks")
    edges = set(G.edges)
    verts = list(G.vertices)
    aux: dict[int, tuple[int, ...]] = {}
    nxt = max(G.vertices) + 1
    for fi, spec in zip(bfaces, blocks):
        ring = G.faces[fi].cycle
        if spec.kind == "discus":
            blk = discus(len(ring))
            bnd = tuple(range(len(ring)))
        elif spec.kind == "custom":
            blk, bnd = spec.graph, spec.boundary
            if blk is None:
                raise ValueError("custom block without a graph")
        else:
            raise ValueError(f"unknown block kind {spec.kind!r}")
        if len(bnd) != len(ring) or len(set(bnd)) != len(bnd):
            raise ValueError("block boundary does not match the B face length")
        own = {(min(a, b), max(a, b)) for a, b in blk.edges}
        if any(e not in own for e in _cycle_edges(bnd)):
            raise ValueError("block does not contain its boundary cycle")
        if check and spec.kind == "custom" and not is_minimally_3_rigid_numeric(blk):
            raise ValueError("block is not minimally 3-rigid")
        name = dict(zip(bnd, ring))
        extra = []
        for v in range(blk.n):
            if v not in name:
                name[v] = nxt
                extra.append(nxt)
                nxt += 1
        aux[fi] = tuple(extra)
        verts += extra
        ring_edges = set(_cycle_edges(ring))
        for a, b in blk.edges:
            e = (min(name[a], name[b]), max(name[a], name[b]))
            if e in ring_edges:
                continue
            if e in edges:
                raise ValueError(f"block edge {e} duplicates an edge outside the boundary")
            edges.add(e)
    return BlockAndHoleGraph(G, blocks, SimpleGraph.from_labelled(sorted(edges), verts), aux)


# ---------------------------------------------------------------------------
# looped face graphs

def looped_2sigma(G: FaceGraph) -> Multigraph:
    """``G`` plus two loops at each vertex of the B face boundary.

    Edge order: the edges of ``G`` in sorted order, then the loops in
    boundary order.
    """
    ring = G.block_face().cycle
    index = {v: i for i, v in enumerate(G.vertices)}
    edges = [(index[u], index[v]) for u, v in G.edges]
    for v in ring:
        edges += [(index[v], index[v])] * 2
    return Multigraph(len(index), tuple(edges), G.vertices)


def looped_3sigma_minus(G: FaceGraph) -> Multigraph:
    """``G`` without its B-boundary edges, plus three loops per boundary vertex."""
    ring = G.block_face().cycle
    gone = set(_cycle_edges(ring))
    index = {v: i for i, v in enumerate(G.vertices)}
    edges = [(index[u], index[v]) for u, v in G.edges if (u, v) not in gone]
    for v in ring:
        edges += [(index[v], index[v])] * 3
    return Multigraph(len(index), tuple(edges), G.vertices)


# ---------------------------------------------------------------------------
# origami

@dataclass(frozen=True)
class PolyhedralSurface:
    points: tuple[tuple[Fraction, Fraction, Fraction], ...]
    faces: tuple[tuple[int, ...], ...]
    holes: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        n = len(self.points)
        count: dict[tuple[int, int], int] = {}
        for c in self.faces + self.holes:
            if len(c) < 3 or len(set(c)) != len(c):
                raise ValueError(f"face {c} is not a simple cycle")
            if any(not 0 <= v < n for v in c):
                raise ValueError(f"face {c} uses an unknown vertex")
            for e in _cycle_edges(c):
                count[e] = count.get(e, 0) + 1
        face_edges = {e for c in self.faces for e in _cycle_edges(c)}
        for e in face_edges:
            if count[e] != 2:
                raise ValueError(f"edge {e} must lie in exactly two faces or holes")


def parse_surface(text: str) -> PolyhedralSurface:
    n = None
    pts, faces, holes = [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if n is None:
                if parts[0] != "surface" or len(parts) != 2:
                    raise ValueError("expected 'surface <n>'")
                n = int(parts[1])
            elif parts[0] == "v" and len(parts) == 4:
                pts.append(tuple(Fraction(x) for x in parts[1:]))
            elif parts[0] in ("face", "hole"):
                (faces if parts[0] == "face" else holes).append(tuple(int(x) for x in parts[1:]))
            else:
                raise ValueError(f"unrecognised line {line!r}")
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if n is None:
        raise ValueError("empty surface description")
    if len(pts) != n:
        raise ValueError(f"header declares {n} vertices but {len(pts)} are placed")
    return PolyhedralSurface(tuple(pts), tuple(faces), tuple(holes))


def apex_block(k: int) -> tuple[SimpleGraph, tuple[int, ...]]:
    """Fan-triangulated k-gon plus one apex joined to every corner."""
    edges = _cycle_edges(list(range(k)))
    edges += [(0, i) for i in range(2, k - 1)]
    edges += [(i, k) for i in range(k)]
    return SimpleGraph(k + 1, tuple(edges)), tuple(range(k))


def prism_block(k: int) -> tuple[SimpleGraph, tuple[int, ...]]:
    """Triangulated prism over the k-gon: two fan-triangulated caps joined by a
    triangulated band."""
    edges = _cycle_edges(list(range(k))) + _cycle_edges(list(range(k, 2 * k)))
    edges += [(0, i) for i in range(2, k - 1)] + [(k, k + i) for i in range(2, k - 1)]
    for i in range(k):
        j = (i + 1) % k
        edges += [(i, k + i), (min(i, k + j), max(i, k + j))]
    return SimpleGraph(2 * k, tuple(edges)), tuple(range(k))


def _coplanar(pts) -> bool:
    p0 = pts[0]
    vecs = [tuple(q[a] - p0[a] for a in range(3)) for q in pts[1:]]
    normal = None
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            u, w = vecs[i], vecs[j]
            c = (u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0])
            if any(c):
                normal = c
                break
        if normal:
            break
    if normal is None:
        return True
    return all(sum(normal[a] * v[a] for a in range(3)) == 0 for v in vecs)


GENERICITY_CAVEAT = ("block boundaries lie on coplanar vertices; the combinatorial verdict "
                     "describes generic placements and is not a proof for this geometry")


def origami_to_block_and_hole(s: PolyhedralSurface, block: str = "apex") -> tuple[BlockAndHoleGraph, list[str]]:
    """Rigid non-triangular faces become blocks, holes become H faces.

    ``block`` picks the substitute for each rigid face: ``"apex"`` (fan plus
    one off-plane joint), ``"prism"`` (triangulated prism) or ``"discus"``.
    Returns the block-and-hole graph and a list of caveats.
    """
    builders = {"apex": apex_block, "prism": prism_block}
    if block not in ("apex", "prism", "discus"):
        raise ValueError(f"unknown block style {block!r}")
    faces = []
    notes = []
    for c in s.faces:
        faces.append(("T" if len(c) == 3 else "B", c))
    for c in s.holes:
        if len(c) == 3:
            notes.append(f"triangular hole {c} is treated as a triangular face")
        faces.append(("T" if len(c) == 3 else "H", c))
    try:
        G = FaceGraph(faces)
    except FaceGraphError as exc:
        raise ValueError(f"surface does not cap to a sphere: {exc}") from None
    if G.vertices != tuple(range(len(s.points))):
        raise ValueError("every surface vertex must lie on some face")
    specs = []
    coplanar = False
    for fi in G.faces_with("B"):
        ring = G.faces[fi].cycle
        if _coplanar([s.points[v] for v in ring]):
            coplanar = True
        if block == "discus":
            specs.append(BlockSpec())
        else:
            g, bnd = builders[block](len(ring))
            specs.append(BlockSpec.custom(g, bnd))
    if coplanar:
        notes.append(GENERICITY_CAVEAT)
    return block_and_hole(G, specs, check=False), notes
