import random

import pytest

from rigidkit import fixtures as F
from rigidkit.construct import discus_and_hole
from rigidkit.facegraph import contract_TT, is_contractible_TT, is_tight, tt_edges
from rigidkit.graph import canonical_hash, complete_graph, freedom
from rigidkit.reduction import (Move, NotTightError, ReductionCertificate, parse_certificate, reduce_to_K3, replay,
                                verify_certificate, vertex_split)


def test_split_k3_gives_k4():
    g = vertex_split(complete_graph(3), 0, 1, 2, [])
    assert canonical_hash(g) == canonical_hash(complete_graph(4))


def test_split_preserves_freedom():
    rng = random.Random(0)
    g = complete_graph(3)
    for _ in range(30):
        v = rng.randrange(g.n)
        nb = sorted(g.neighbours()[v])
        v1, v2 = rng.sample(nb, 2)
        rest = [x for x in nb if x not in (v1, v2)]
        side = [x for x in rest if rng.random() < 0.5]
        h = vertex_split(g, v, v1, v2, side)
        assert freedom(h) == freedom(g) == 6
        assert h.n == g.n + 1
        g = h


def test_split_rejects_bad_arguments():
    g = complete_graph(4)
    with pytest.raises(ValueError):
        vertex_split(g, 0, 1, 1, [])
    with pytest.raises(ValueError):
        vertex_split(g, 0, 1, 2, [0])


@pytest.mark.parametrize("name,moves", [
    ("tetrahedron", 1), ("octahedron", 3), ("hexagon_three_quads", 8),
    ("heptagon_four_quads", 10), ("octagon_five_quads", 12), ("hexagon_hexagonal_hole", 8),
])
@pytest.mark.parametrize("method", ["cycles", "pebble"])
def test_reduce_fixtures(name, moves, method):
    G = getattr(F, name)()
    cert = reduce_to_K3(G, tt_method=method)
    assert len(cert) == moves == discus_and_hole(G).n - 3
    assert verify_certificate(G, cert)
    assert canonical_hash(replay(cert)) == canonical_hash(discus_and_hole(G))


def test_chord_fixture_witness():
    with pytest.raises(NotTightError) as info:
        reduce_to_K3(F.hexagon_with_chord())
    err = info.value
    assert err.witness_freedom == 5
    d = discus_and_hole(F.hexagon_with_chord())
    ids = [i for i in range(d.n) if d.label(i) in err.witness]
    sub = sum(1 for a, b in d.edges if a in ids and b in ids)
    assert 3 * len(ids) - sub == 5


def test_overbraced_rejected():
    with pytest.raises(ValueError):
        reduce_to_K3(F.hexagon_quad_hole())


def test_certificate_round_trip():
    cert = reduce_to_K3(F.heptagon_four_quads())
    again = parse_certificate(cert.format())
    assert again == cert
    assert verify_certificate(F.heptagon_four_quads(), again)


def test_tampered_certificate_fails():
    G = F.hexagon_three_quads()
    cert = reduce_to_K3(G)
    i, m = next((i, m) for i, m in enumerate(cert.moves) if m.side)
    moves = list(cert.moves)
    moves[i] = Move(m.kind, m.keep, m.removed, m.common, ())
    assert not verify_certificate(G, ReductionCertificate(cert.start, tuple(moves)))
    assert not verify_certificate(G, ReductionCertificate(cert.start, cert.moves[1:]))
    assert not verify_certificate(F.heptagon_four_quads(), cert)


@pytest.mark.parametrize("text", ["", "contractTT 0 1 keep=0 common=2,3\n", "k3 0 1\n",
                                  "k3 0 1 2\nfoo 1 2\n", "k3 0 1 2\ncontractTT 0 1 keep=5 common=2,3\n"])
def test_parse_certificate_errors(text):
    with pytest.raises(ValueError):
        parse_certificate(text)


def test_tt_contraction_inverse_split():
    # contracting one TT edge and splitting it back reproduces the graph
    G = F.octahedron()
    g = G.underlying()
    e = next(e for e in tt_edges(G) if is_contractible_TT(G, e))
    H = contract_TT(G, e, keep=e[0])
    cert_h = reduce_to_K3(H)
    common = sorted(G.adjacency[e[0]] & G.adjacency[e[1]])
    side = sorted(G.adjacency[e[1]] - {e[0]} - set(common))
    cert = ReductionCertificate(cert_h.start, (Move("contractTT", e[0], e[1], tuple(common), tuple(side)),)
                                + cert_h.moves)
    assert replay(cert).labelled_edges() == g.labelled_edges()


def test_reduction_on_corpus(small_corpus):
    tight = 0
    for G in small_corpus:
        if G.m_blocks != 1:
            continue
        if is_tight(G):
            cert = reduce_to_K3(G)
            assert len(cert) == discus_and_hole(G).n - 3
            assert verify_certificate(G, cert)
            tight += 1
        else:
            with pytest.raises(ValueError):
                reduce_to_K3(G)
    assert tight > 5

