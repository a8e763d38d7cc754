"""Structural properties of tight single-block face graphs, as executable checks.

Each ``check_*`` function returns a :class:`PropertyResult`: how many times
the hypothesis was met on the graph and a list of counterexamples.  The
hypotheses always include (3,6)-tightness of the discus-and-hole graph.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice

from .construct import discus_and_hole
from .facegraph import (FaceGraph, FaceGraphError, bh_edges, canonical_cycle, enumerate_critical_separating_cycles,
                        ext_dagger, internal_face_graph, is_admissible_TT, is_contractible_TT,
                        is_critical_separating, is_tight, simple_cycles, tt_edges)
from .graph import freedom


@dataclass
class PropertyResult:
    triggered: int = 0
    violations: list = field(default_factory=list)

    def __iadd__(self, other: "PropertyResult"):
        self.triggered += other.triggered
        self.violations += other.violations
        return self


def _single_tight(G: FaceGraph) -> bool:
    return G.m_blocks == 1 and is_tight(G)


def _arcs(cycle, a: int, b: int):
    """The two paths of ``cycle`` from ``a`` to ``b``."""
    i, j = cycle.index(a), cycle.index(b)
    k = len(cycle)
    one = [cycle[(i + t) % k] for t in range((j - i) % k + 1)]
    two = [cycle[(i - t) % k] for t in range((i - j) % k + 1)]
    return one, two


def shared_hole_pairs(G: FaceGraph, arcs_leave_block: bool = False) -> list[tuple[int, int]]:
    """Pairs of block-boundary vertices on a common hole but not joined by a BH edge.

    With ``arcs_leave_block`` a pair only counts when both arcs of the hole
    boundary between the two vertices use an edge off the block boundary.
    """
    block = G.block_face()
    ring = set(block.cycle)
    ring_edges = set(tuple(sorted(e)) for e in block.edges())
    bh = set(bh_edges(G))
    out = set()
    for i in G.faces_with("H"):
        cyc = list(G.faces[i].cycle)
        on = sorted(ring & set(cyc))
        for a in range(len(on)):
            for b in range(a + 1, len(on)):
                v, w = on[a], on[b]
                if (v, w) in bh:
                    continue
                if arcs_leave_block and any(
                        all(tuple(sorted(e)) in ring_edges for e in zip(arc, arc[1:]))
                        for arc in _arcs(cyc, v, w)):
                    continue
                out.add((v, w))
    return sorted(out)


def check_shared_hole(G: FaceGraph, arcs_leave_block: bool = False) -> PropertyResult:
    """Two block vertices sharing a hole without a BH edge force a non-facial
    critical separating cycle.

    Taken literally this fails when one arc of the hole between the two
    vertices runs along the block boundary; ``arcs_leave_block`` excludes
    that configuration.
    """
    res = PropertyResult()
    if not _single_tight(G):
        return res
    pairs = shared_hole_pairs(G, arcs_leave_block)
    if pairs:
        res.triggered = 1
        if not enumerate_critical_separating_cycles(G, nonfacial_only=True):
            res.violations.append((G, pairs))
    return res


def check_inheritance(G: FaceGraph) -> PropertyResult:
    """Critical cycles of the internal graph of a non-facial critical cycle
    stay critical in ``G``."""
    res = PropertyResult()
    if not _single_tight(G):
        return res
    for c in enumerate_critical_separating_cycles(G, nonfacial_only=True):
        g2 = internal_face_graph(G, c)
        if g2.m_blocks != 1:
            continue  # a triangle: the internal graph is a sphere without cycles to inherit
        res.triggered += 1
        for d in enumerate_critical_separating_cycles(g2):
            if not is_critical_separating(G, d):
                res.violations.append((G, c, d))
    return res


def _no_tt_indivisible(G: FaceGraph) -> bool:
    return (_single_tight(G) and not tt_edges(G)
            and not enumerate_critical_separating_cycles(G, nonfacial_only=True))


def check_bh_lower_bound(G: FaceGraph) -> PropertyResult:
    """Indivisible with no TT edge implies at least three BH edges."""
    res = PropertyResult()
    if _no_tt_indivisible(G):
        res.triggered = 1
        if len(bh_edges(G)) < 3:
            res.violations.append((G, bh_edges(G)))
    return res


def check_three_bh(G: FaceGraph) -> PropertyResult:
    """With exactly three BH edges as well: every hole is a quadrilateral and
    no two BH edges share a vertex."""
    res = PropertyResult()
    if not _no_tt_indivisible(G):
        return res
    bh = bh_edges(G)
    if len(bh) != 3:
        return res
    res.triggered = 1
    quads = all(len(G.faces[i].cycle) == 4 for i in G.faces_with("H"))
    ends = [v for e in bh for v in e]
    if not quads or len(set(ends)) != 6:
        res.violations.append((G, bh))
    return res


def is_terminal_tight(G: FaceGraph) -> bool:
    if not _single_tight(G):
        return False
    return not any(is_admissible_TT(G, e) for e in tt_edges(G) if is_contractible_TT(G, e))


def nonfacial_triangles(G: FaceGraph) -> list[tuple[int, ...]]:
    facial = {canonical_cycle(f.cycle) for f in G.faces}
    return [c for c in simple_cycles(G, max_length=3) if canonical_cycle(c) not in facial]


def check_terminal_triangles(G: FaceGraph) -> PropertyResult:
    """A terminal graph has no non-facial 3-cycle."""
    res = PropertyResult()
    if is_terminal_tight(G):
        res.triggered = 1
        bad = nonfacial_triangles(G)
        if bad:
            res.violations.append((G, bad))
    return res


def split_bookkeeping(G: FaceGraph, c) -> bool:
    """Freedom of the discus-and-hole graph is additive over a cycle split.

    The two sides overlap in the discus on ``c`` (or the triangle ``c``),
    which has freedom 6.
    """
    ext = ext_dagger(G, c)
    g2 = internal_face_graph(G, c)
    inner = discus_and_hole(g2) if g2.m_blocks else g2.underlying()
    return freedom(ext) + freedom(inner) - 6 == freedom(discus_and_hole(G))


def check_split_bookkeeping(G: FaceGraph, max_cycles: int = 200) -> PropertyResult:
    res = PropertyResult()
    if G.m_blocks != 1:
        return res
    for c in islice(simple_cycles(G, max_length=8, max_cycles=10 ** 6), max_cycles):
        try:
            ok = split_bookkeeping(G, c)
        except FaceGraphError:
            continue  # hole boundaries and other degenerate splits
        res.triggered += 1
        if not ok:
            res.violations.append((G, c))
    return res


CHECKS = {
    "shared-hole": check_shared_hole,
    "inheritance": check_inheritance,
    "bh-lower-bound": check_bh_lower_bound,
    "three-bh": check_three_bh,
    "terminal-triangles": check_terminal_triangles,
}
