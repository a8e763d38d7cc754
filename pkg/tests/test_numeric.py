import random

import numpy as np
import pytest

from rigidkit import fixtures as F
from rigidkit.construct import discus_and_hole
from rigidkit.graph import SimpleGraph, complete_graph
from rigidkit.numeric import (PRIME, euclidean_rigidity_rank, failure_bound, is_minimally_3_rigid_numeric,
                              lp_independence_check, lp_ranks, lp_rigidity_matrix, random_placement, rank_at,
                              rank_mod_p)


def test_rank_mod_p_small():
    assert rank_mod_p([[1, 2], [2, 4]]) == 1
    assert rank_mod_p([[1, 0], [0, 1]]) == 2
    assert rank_mod_p([]) == 0
    assert rank_mod_p([[PRIME, 0]]) == 0


def test_rank_mod_p_matches_numpy():
    rng = np.random.default_rng(1)
    for _ in range(30):
        r, c, k = rng.integers(1, 8, size=3)
        m = rng.integers(-5, 6, size=(r, k)) @ rng.integers(-5, 6, size=(k, c))
        want = np.linalg.matrix_rank(m.astype(float))
        assert rank_mod_p([[int(x) for x in row] for row in m]) == want


def test_k3():
    rep = euclidean_rigidity_rank(complete_graph(3))
    assert rep.rank == 3 and rep.rigid and rep.independent


def test_octahedron():
    rep = euclidean_rigidity_rank(F.octahedron_graph())
    assert (rep.rank, rep.target) == (12, 12)
    assert rep.verdict == "minimally-rigid"


def test_double_banana():
    rep = euclidean_rigidity_rank(F.double_banana())
    assert rep.rank == 17 and rep.target == 18
    assert not rep.rigid and not rep.independent
    assert not is_minimally_3_rigid_numeric(F.double_banana())


def test_too_few_vertices():
    with pytest.raises(ValueError):
        euclidean_rigidity_rank(SimpleGraph(2, ((0, 1),)))


def test_translation_invariance():
    g = F.octahedron_graph()
    x = random_placement(g.n, 5)
    shift = (11, -7, 123456789)
    moved = [tuple((a + s) % PRIME for a, s in zip(p, shift)) for p in x]
    assert rank_at(g, x) == rank_at(g, moved)


def test_relabel_invariance():
    rng = random.Random(2)
    g = discus_and_hole(F.hexagon_three_quads())
    for _ in range(5):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = SimpleGraph(g.n, tuple(sorted((min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in g.edges)))
        assert euclidean_rigidity_rank(h, seed=rng.randrange(100)).rank == 27


def test_failure_bound():
    for n in (3, 10, 64):
        g = complete_graph(min(n, 12)) if n <= 12 else SimpleGraph(n, tuple((i, i + 1) for i in range(n - 1)))
        assert failure_bound(SimpleGraph(n, g.edges)) < 1e-30


def test_seeds_deterministic():
    g = F.double_banana()
    assert euclidean_rigidity_rank(g, seed=4) == euclidean_rigidity_rank(g, seed=4)


# --- l_p ---

def test_lp_matrix_shape_and_p2():
    g = F.octahedron_graph()
    x = np.random.default_rng(0).normal(size=(g.n, 3))
    m = lp_rigidity_matrix(g, x, 2.0)
    assert m.shape == (12, 18)
    # p = 2 rows are the Euclidean ones: translations lie in the kernel
    for axis in range(3):
        t = np.zeros((g.n, 3))
        t[:, axis] = 1
        assert np.allclose(m @ t.ravel(), 0)


def test_lp_translations_in_kernel():
    g = F.octahedron_graph()
    x = np.random.default_rng(0).normal(size=(g.n, 3))
    m = lp_rigidity_matrix(g, x, 4.0)
    for axis in range(3):
        t = np.zeros((g.n, 3))
        t[:, axis] = 1
        assert np.allclose(m @ t.ravel(), 0)


def test_lp_examples():
    assert lp_independence_check(complete_graph(3), p=4)
    assert lp_independence_check(discus_and_hole(F.hexagon_three_quads()), p=4)
    assert not lp_independence_check(F.k7(), p=4)
    assert max(lp_ranks(F.k7(), p=4)) <= 3 * 7 - 3


def test_lp_rejects_bad_parameters():
    with pytest.raises(ValueError):
        lp_ranks(complete_graph(3), p=2.0)
    with pytest.raises(ValueError):
        lp_ranks(complete_graph(3), p=0.5)
    with pytest.raises(ValueError):
        lp_ranks(complete_graph(3), trials=1)


def test_lp_double_banana_observed_independent():
    # dependent in the Euclidean case, yet full row rank under l_4 in every trial
    ranks = lp_ranks(F.double_banana(), p=4)
    assert ranks == [18] * 5
