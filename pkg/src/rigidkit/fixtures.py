"""Hand-entered face graphs and small graphs used in tests and examples.

Hexagon fixtures use ``a..f = 0..5`` around the B face and ``p, q, r = 6, 7, 8``
inside it.
"""
from __future__ import annotations

from .facegraph import FaceGraph
from .graph import SimpleGraph, complete_graph

HEXAGON = ("B", (0, 1, 2, 3, 4, 5))


def tetrahedron() -> FaceGraph:
    return FaceGraph([("T", c) for c in [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]])


def octahedron() -> FaceGraph:
    faces = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1), (5, 2, 1), (5, 3, 2), (5, 4, 3), (5, 1, 4)]
    return FaceGraph([("T", c) for c in faces])


def hexagon_three_quads() -> FaceGraph:
    """Hexagonal B face, three quadrilateral holes, a central triangle.

    Tight, indivisible, no TT edges and exactly three BH edges (3-4, 1-2, 0-5).
    """
    return FaceGraph([
        HEXAGON,
        ("H", (4, 3, 7, 6)), ("H", (7, 2, 1, 8)), ("H", (6, 8, 0, 5)),
        ("T", (6, 7, 8)), ("T", (4, 6, 5)), ("T", (3, 7, 2)), ("T", (8, 1, 0)),
    ])


def heptagon_four_quads() -> FaceGraph:
    """Heptagonal B face (0..6) with four quadrilateral holes; it has the
    non-facial critical separating 5-cycle ``HEPTAGON_CYCLE``."""
    return FaceGraph([
        ("B", tuple(range(7))),
        ("H", (0, 1, 8, 7)), ("H", (8, 2, 3, 9)), ("H", (6, 7, 10, 5)), ("H", (7, 9, 4, 10)),
        ("T", (7, 8, 9)), ("T", (1, 2, 8)), ("T", (3, 4, 9)), ("T", (4, 5, 10)), ("T", (6, 0, 7)),
    ])


HEPTAGON_CYCLE = (4, 5, 6, 7, 9)


def octagon_five_quads() -> FaceGraph:
    """Octagonal B face (0..7) with five quadrilateral holes; it has the
    non-facial critical separating 5-cycle ``OCTAGON_CYCLE``."""
    return FaceGraph([
        ("B", tuple(range(8))),
        ("H", (0, 1, 9, 8)), ("H", (9, 2, 3, 10)), ("H", (7, 8, 11, 6)),
        ("H", (12, 9, 10, 4)), ("H", (8, 12, 5, 11)),
        ("T", (1, 2, 9)), ("T", (3, 4, 10)), ("T", (4, 5, 12)), ("T", (5, 6, 11)),
        ("T", (7, 0, 8)), ("T", (8, 9, 12)),
    ])


OCTAGON_CYCLE = (5, 6, 7, 8, 12)


def hexagon_hexagonal_hole() -> FaceGraph:
    """Hexagonal B face and one hexagonal hole; ``HEXAGONAL_HOLE_CYCLE`` is a
    non-facial 6-cycle through the hole."""
    return FaceGraph([
        HEXAGON,
        ("H", (6, 3, 7, 8, 0, 5)),
        ("T", (4, 6, 5)), ("T", (4, 3, 6)), ("T", (3, 7, 2)), ("T", (7, 1, 2)),
        ("T", (7, 8, 1)), ("T", (8, 0, 1)),
    ])


HEXAGONAL_HOLE_CYCLE = (0, 1, 2, 3, 6, 5)


def hexagon_quad_hole() -> FaceGraph:
    """Hexagonal B face, one quadrilateral hole and eight triangles; its
    discus-and-hole graph has freedom 4, so it is over-braced."""
    return FaceGraph([
        HEXAGON,
        ("H", (6, 3, 7, 8)),
        ("T", (4, 5, 6)), ("T", (4, 3, 6)), ("T", (3, 7, 2)), ("T", (7, 2, 1)),
        ("T", (7, 8, 1)), ("T", (8, 1, 0)), ("T", (8, 0, 6)), ("T", (6, 0, 5)),
    ])


def hexagon_with_chord() -> FaceGraph:
    """Discus-and-hole freedom is 6, yet the discus plus the chord 0-3 has freedom 5."""
    return FaceGraph([
        HEXAGON,
        ("H", (0, 1, 2, 3)), ("H", (3, 4, 5, 6)), ("H", (3, 6, 5, 0)),
    ])


def quad_block_pentagon_hole() -> FaceGraph:
    """Square B face sharing an edge with a pentagonal hole; the shared edge
    lies in no 3-cycle, so it can be contracted."""
    return FaceGraph([
        ("B", (0, 1, 2, 3)),
        ("H", (1, 0, 4, 5, 6)),
        ("T", (1, 6, 2)), ("T", (2, 6, 5)), ("T", (2, 5, 3)), ("T", (3, 5, 4)), ("T", (3, 4, 0)),
    ])


def double_banana() -> SimpleGraph:
    """Two copies of K5 minus an edge glued at the two non-adjacent vertices 0, 1."""
    edges = []
    for side in ((2, 3, 4), (5, 6, 7)):
        vs = (0, 1) + side
        edges += [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:] if (a, b) != (0, 1)]
    return SimpleGraph(8, tuple(edges))


def octahedron_graph() -> SimpleGraph:
    return octahedron().underlying()


def k7() -> SimpleGraph:
    return complete_graph(7)


def block_hole_shared_path() -> FaceGraph:
    """Square B face and square hole sharing the path 0-3-1 (vertex 3 has degree 2).

    Tight, and 0, 1 lie on the hole without a BH edge between them, yet no
    non-facial critical separating cycle exists.
    """
    return FaceGraph([
        ("B", (0, 3, 1, 4)), ("H", (0, 2, 1, 3)), ("T", (0, 4, 2)), ("T", (1, 2, 4)),
    ])
