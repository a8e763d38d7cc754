import pytest

from rigidkit import fixtures as F
from rigidkit.construct import (BlockSpec, apex_block, block_and_hole, discus, discus_and_hole, looped_2sigma,
                                looped_3sigma_minus, origami_to_block_and_hole, parse_surface, poles, prism_block)
from rigidkit.facegraph import FaceGraph
from rigidkit.graph import SimpleGraph, freedom
from rigidkit.numeric import is_minimally_3_rigid_numeric


@pytest.mark.parametrize("k,nv,ne", [(3, 5, 9), (4, 6, 12), (6, 8, 18)])
def test_discus_counts(k, nv, ne):
    d = discus(k)
    assert (d.n, d.m, freedom(d)) == (nv, ne, 6)


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_discus_minimally_rigid(k):
    assert is_minimally_3_rigid_numeric(discus(k))


def test_discus_and_hole_examples():
    t = F.tetrahedron()
    assert discus_and_hole(t).labelled_edges() == t.underlying().labelled_edges()
    d = discus_and_hole(F.hexagon_three_quads())
    assert (d.n, d.m, freedom(d)) == (11, 27, 6)
    # both poles see exactly the B boundary
    adj = d.neighbours()
    index = {d.label(i): i for i in range(d.n)}
    for p in poles(F.hexagon_three_quads())[0]:
        assert {d.label(j) for j in adj[index[p]]} == set(range(6))


def test_quad_hole_fixture_is_overbraced():
    assert freedom(discus_and_hole(F.hexagon_quad_hole())) == 4


def _loops(g):
    return sum(1 for u, v in g.edges if u == v)


def test_looped_graphs_three_quad_hexagon():
    G = F.hexagon_three_quads()
    g2 = looped_2sigma(G)
    assert (g2.n, g2.m, _loops(g2), freedom(g2)) == (9, 27, 12, 0)
    g3 = looped_3sigma_minus(G)
    assert (g3.n, g3.m, _loops(g3), freedom(g3)) == (9, 27, 18, 0)
    assert g3.m - _loops(g3) == 9


def test_looped_freedom_identities(small_corpus):
    for G in small_corpus:
        if G.m_blocks != 1:
            continue
        g2, g3 = looped_2sigma(G), looped_3sigma_minus(G)
        assert freedom(g2) == freedom(discus_and_hole(G)) - 6
        assert freedom(g3) == freedom(g2) == freedom(G.underlying()) - 2 * len(G.block_face().cycle)


def test_looped_needs_single_block():
    with pytest.raises(ValueError):
        looped_2sigma(F.tetrahedron())


def test_all_discus_equals_discus_and_hole():
    G = F.heptagon_four_quads()
    bh = block_and_hole(G, [BlockSpec()])
    assert bh.graph.labelled_edges() == discus_and_hole(G).labelled_edges()


def test_octahedron_custom_block():
    G = F.quad_block_pentagon_hole()
    octa = F.octahedron_graph()
    # a 4-cycle through both apexes of the octahedron
    bh = block_and_hole(G, [BlockSpec.custom(octa, (0, 1, 5, 3))])
    assert bh.graph.n == G.n + 2
    assert freedom(bh.graph) == freedom(discus_and_hole(G))
    assert bh.graph.m == len(G.edges) + 12 - 4


def test_c4_block_rejected():
    G = FaceGraph([("B", (0, 1, 2, 3)), ("T", (0, 3, 4)), ("T", (3, 2, 4)), ("T", (2, 1, 4)), ("T", (1, 0, 4))])
    c4 = SimpleGraph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))
    with pytest.raises(ValueError):
        block_and_hole(G, [BlockSpec.custom(c4, (0, 1, 2, 3))])


def test_block_boundary_must_be_cycle():
    G = FaceGraph([("B", (0, 1, 2, 3)), ("T", (0, 3, 4)), ("T", (3, 2, 4)), ("T", (2, 1, 4)), ("T", (1, 0, 4))])
    # 1-3 joins opposite equator vertices, which are not adjacent
    with pytest.raises(ValueError):
        block_and_hole(G, [BlockSpec.custom(F.octahedron_graph(), (1, 3, 2, 4))])


@pytest.mark.parametrize("builder", [apex_block, prism_block])
@pytest.mark.parametrize("k", [4, 5, 6])
def test_origami_blocks_minimally_rigid(builder, k):
    g, bnd = builder(k)
    assert is_minimally_3_rigid_numeric(g)
    assert len(bnd) == k


OPEN_BOX = """surface 8
v 0 0 0
v 1 0 0
v 1 1 0
v 0 1 0
v 0 0 1
v 1 0 1
v 1 1 1
v 0 1 1
face 0 3 2 1
face 0 1 5 4
face 1 2 6 5
face 2 3 7 6
face 3 0 4 7
hole 4 5 6 7
"""


def test_open_box():
    bh, notes = origami_to_block_and_hole(parse_surface(OPEN_BOX))
    assert (bh.base.m_blocks, bh.base.n_holes) == (5, 1)
    assert bh.graph.n == 8 + 5
    assert bh.graph.m == 12 + 5 * 5
    assert notes  # square panels are coplanar


def test_square_sheet():
    s = parse_surface("surface 4\nv 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nface 0 1 2 3\nhole 3 2 1 0\n")
    bh, _ = origami_to_block_and_hole(s)
    assert (bh.base.m_blocks, bh.base.n_holes) == (1, 1)
    assert is_minimally_3_rigid_numeric(bh.graph)


def test_closed_triangulated_surface():
    text = ("surface 4\nv 0 0 0\nv 1 0 0\nv 0 1 0\nv 0 0 1\n"
            "face 0 2 1\nface 0 1 3\nface 1 2 3\nface 0 3 2\n")
    bh, notes = origami_to_block_and_hole(parse_surface(text))
    assert (bh.base.m_blocks, bh.base.n_holes) == (0, 0)
    assert not notes
    assert is_minimally_3_rigid_numeric(bh.graph)


@pytest.mark.parametrize("text", [
    "surface 2\nv 0 0 0\n",
    "surface 5\nv 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nv 2 2 0\nface 0 1 2 0 3 4\nhole 4 3 2 1\n",
    "surface 4\nv 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nface 0 1 2 3\n",
])
def test_bad_surfaces(text):
    with pytest.raises(ValueError):
        origami_to_block_and_hole(parse_surface(text))
