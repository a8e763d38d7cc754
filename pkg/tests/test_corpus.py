import itertools

import pytest

from rigidkit import fixtures as F
from rigidkit.construct import discus_and_hole, looped_2sigma, looped_3sigma_minus
from rigidkit.corpus import (classify, corpus_stream, format_archive, generate_corpus, parse_archive,
                             tt_free_stream)
from rigidkit.facegraph import face_graph_hash, tt_edges
from rigidkit.numeric import is_minimally_3_rigid_numeric
from rigidkit.oracle import check_36
from rigidkit.pebble import pebble_game
from rigidkit.facegraph import enumerate_critical_separating_cycles
from rigidkit.properties import CHECKS, check_shared_hole, check_split_bookkeeping, shared_hole_pairs


def test_four_vertices_is_tetrahedron():
    (g,) = generate_corpus(4, 0, 1, seed=3)
    assert face_graph_hash(g) == face_graph_hash(F.tetrahedron())
    assert len(generate_corpus(4, 0, 5, seed=3, patience=500)) == 1


def test_deterministic():
    a = [face_graph_hash(g) for g in generate_corpus(9, 3, 40, seed=11)]
    b = [face_graph_hash(g) for g in generate_corpus(9, 3, 40, seed=11)]
    assert a == b
    assert len(set(a)) == 40


def test_bounds():
    with pytest.raises(ValueError):
        generate_corpus(15, 1, 1, 0)
    with pytest.raises(ValueError):
        generate_corpus(3, 1, 1, 0)


def test_archive_round_trip(small_corpus):
    text = format_archive(small_corpus[:20])
    assert parse_archive(text) == small_corpus[:20]
    assert text.count("# class") == 20


def test_corpus_has_both_kinds(small_corpus):
    flags = {classify(g).tight for g in small_corpus if g.m_blocks == 1}
    assert flags == {True, False}


def test_routes_agree(small_corpus):
    for g in small_corpus:
        if g.m_blocks != 1:
            continue
        d = discus_and_hole(g)
        want = check_36(d).tight
        assert pebble_game(looped_2sigma(g)).tight == want
        assert pebble_game(looped_3sigma_minus(g)).tight == want
        assert is_minimally_3_rigid_numeric(d) == want


def test_spheres_tight(small_corpus):
    for g in small_corpus:
        if g.m_blocks == 0 and g.n_holes == 0:
            assert check_36(g.underlying()).tight


def test_tt_free_stream_contains_three_quad_hexagon():
    target = face_graph_hash(F.hexagon_three_quads())
    found = False
    for g in tt_free_stream(9, seed=0):
        assert not tt_edges(g)
        found |= face_graph_hash(g) == target
    assert found


def test_split_bookkeeping(small_corpus):
    total = 0
    for g in small_corpus[:40]:
        res = check_split_bookkeeping(g, max_cycles=60)
        assert not res.violations
        total += res.triggered
    assert total > 100


@pytest.mark.parametrize("name", sorted(set(CHECKS) - {"shared-hole"}))
def test_properties_hold(name, small_corpus):
    for g in small_corpus:
        assert not CHECKS[name](g).violations


def test_shared_hole_literal_counterexample():
    g = F.block_hole_shared_path()
    assert check_36(discus_and_hole(g)).tight
    assert shared_hole_pairs(g) == [(0, 1)]
    assert enumerate_critical_separating_cycles(g, nonfacial_only=True) == []
    assert enumerate_critical_separating_cycles(g, nonfacial_only=True, oracle="brute") == []
    assert check_shared_hole(g).violations
    # the arc 0-3-1 of the hole lies on the block boundary
    assert shared_hole_pairs(g, arcs_leave_block=True) == []


def test_shared_hole_when_arcs_leave_block(small_corpus):
    for g in small_corpus:
        assert not check_shared_hole(g, arcs_leave_block=True).violations
    res = check_shared_hole(F.hexagon_hexagonal_hole(), arcs_leave_block=True)
    assert res.triggered == 1 and not res.violations


@pytest.mark.parametrize("name", sorted(set(CHECKS) - {"shared-hole"}))
def test_properties_hold_on_tt_free(name):
    for g in itertools.islice(tt_free_stream(11, seed=1), 15):
        assert not CHECKS[name](g).violations
