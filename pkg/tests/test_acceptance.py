"""Acceptance criteria, one test each.

Every test records a single ``PASS``/``FAIL`` line (printed in the terminal
summary) before asserting.  Time budgets can be raised with
``RIGIDKIT_ACCEPTANCE_BUDGET`` (seconds, used by the property census).
"""
from __future__ import annotations

import itertools
import os
import random
import time

import networkx as nx
import pytest

from rigidkit import cli
from rigidkit import fixtures as F
from rigidkit.construct import discus_and_hole, looped_2sigma, looped_3sigma_minus
from rigidkit.corpus import corpus_stream, tt_free_stream
from rigidkit.enumerate import sweep
from rigidkit.facegraph import (bh_edges, canonical_cycle, enumerate_critical_separating_cycles, face_graph_hash,
                                format_face_graph, is_indivisible, tt_edges)
from rigidkit.fixtures import HEPTAGON_CYCLE, OCTAGON_CYCLE
from rigidkit.graph import Multigraph, freedom
from rigidkit.numeric import euclidean_rigidity_rank, is_minimally_3_rigid_numeric, lp_independence_check
from rigidkit.oracle import check_30, check_36
from rigidkit.pebble import boundary_orientation_transfer, pebble_game, verify_orientation
from rigidkit.properties import (check_bh_lower_bound, check_inheritance, check_shared_hole,
                                 check_terminal_triangles, check_three_bh)
from rigidkit.reduction import reduce_to_K3, verify_certificate

from conftest import acceptance_line, random_multigraph

CORPUS_SIZE = 500
CORPUS_SEED = 0


@pytest.fixture(scope="module")
def corpus():
    """Criterion 1's corpus: single-B face graphs on at most 12 vertices, with verdicts."""
    out = []
    for g in corpus_stream(12, 3, CORPUS_SEED):
        if g.m_blocks == 1:
            out.append((g, check_36(discus_and_hole(g)).tight))
        if len(out) == CORPUS_SIZE:
            break
    return out


def test_criterion_1_route_equivalence(corpus):
    t0 = time.perf_counter()
    mismatches = []
    for g, brute in corpus:
        verdicts = (pebble_game(looped_2sigma(g)).tight, pebble_game(looped_3sigma_minus(g)).tight,
                    brute, is_minimally_3_rigid_numeric(discus_and_hole(g)))
        if len(set(verdicts)) != 1:
            mismatches.append((format_face_graph(g), verdicts))
    tight = sum(t for _, t in corpus)
    dt = time.perf_counter() - t0
    ok = len(corpus) >= 500 and 0 < tight < len(corpus) and not mismatches and dt <= 300
    acceptance_line(1, ok, f"{len(corpus)} graphs ({tight} tight), {len(mismatches)} mismatches, {dt:.1f}s")
    assert ok, mismatches[:3]


def test_criterion_2_reduction(corpus):
    t0 = time.perf_counter()
    bad = []
    for g, tight in corpus:
        try:
            cert = reduce_to_K3(g)
        except ValueError:
            if tight:
                bad.append(("tight input rejected", format_face_graph(g)))
            continue
        if not tight:
            bad.append(("non-tight input reduced", format_face_graph(g)))
        elif len(cert) != discus_and_hole(g).n - 3 or not verify_certificate(g, cert):
            bad.append(("bad certificate", format_face_graph(g)))
    dt = time.perf_counter() - t0
    ok = not bad and dt <= 300
    acceptance_line(2, ok, f"{sum(t for _, t in corpus)} reductions replayed, {len(bad)} failures, {dt:.1f}s")
    assert ok, bad[:3]


def _flow_orientation(g: Multigraph, k: int = 3):
    """Outdegree-exactly-k orientation by max flow, or None (independent of the pebble game)."""
    if g.m != k * g.n:
        return None
    net = nx.DiGraph()
    for i, (u, v) in enumerate(g.edges):
        net.add_edge("s", ("e", i), capacity=1)
        for x in {u, v}:
            net.add_edge(("e", i), ("v", x), capacity=1)
    for x in range(g.n):
        net.add_edge(("v", x), "t", capacity=k)
    value, flow = nx.maximum_flow(net, "s", "t")
    if value != g.m:
        return None
    return tuple(next(x for x in {u, v} if flow[("e", i)].get(("v", x), 0) == 1)
                 for i, (u, v) in enumerate(g.edges))


def test_criterion_3_orientations(corpus):
    rng = random.Random(3)
    graphs = [f(g) for g, _ in corpus for f in (looped_2sigma, looped_3sigma_minus)]
    for _ in range(1000):
        n = rng.randint(1, 8)
        graphs.append(Multigraph(n, tuple((u, u if rng.random() < 0.15 else rng.randrange(n))
                                          for u in (rng.randrange(n) for _ in range(3 * n)))))
    exceptions = []
    tight_count = flow_count = 0
    for g in graphs:
        res = pebble_game(g)
        if res.tight:
            tight_count += 1
            if not verify_orientation(g, res.orientation, 3):
                exceptions.append(("pebble orientation rejected", g))
        o = _flow_orientation(g)
        if o is not None and verify_orientation(g, o, 3):
            flow_count += 1
            if not res.tight:
                exceptions.append(("orientable but not tight", g))
    # the transferred orientation between the two looped graphs is also valid
    for g, tight in corpus:
        if tight:
            o2 = pebble_game(looped_2sigma(g)).orientation
            if not verify_orientation(looped_3sigma_minus(g), boundary_orientation_transfer(g, o2), 3):
                exceptions.append(("transfer rejected", g))
    ok = not exceptions
    acceptance_line(3, ok, f"{len(graphs)} multigraphs, {tight_count} tight, {flow_count} flow-orientable, "
                           f"{len(exceptions)} exceptions")
    assert ok, exceptions[:3]


def _agree(g: Multigraph) -> bool:
    res, rep = pebble_game(g, 3, 0), check_30(g)
    return (res.sparse, res.tight) == (rep.sparse, rep.tight)


def test_criterion_4_pebble_vs_brute():
    t0 = time.perf_counter()
    rng = random.Random(4)
    random_bad = 0
    for _ in range(1000):
        g = random_multigraph(rng, 10)
        if not _agree(g):
            random_bad += 1
    remaining = 120 - (time.perf_counter() - t0)
    rep = sweep(6, 18, _agree, budget=max(remaining, 0))
    dt = time.perf_counter() - t0
    done = sorted({n for n, m, _ in rep.completed if m == 18})
    ok = rep.finished and not rep.disagreements and random_bad == 0 and dt <= 120
    coverage = (f"exhaustive sweep {'finished' if rep.finished else f'stopped at n={rep.stopped_at[0]} m={rep.stopped_at[1]}'}, "
                f"{rep.checked} classes checked, complete for n<={max(done) if done else -1}")
    acceptance_line(4, ok, f"{coverage}; {len(rep.disagreements)} sweep and {random_bad} random "
                           f"disagreements; {dt:.1f}s")
    assert ok


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_criterion_5_fixtures(tmp_path):
    problems = []
    g5 = F.hexagon_three_quads()
    if freedom(looped_2sigma(g5)) != 0:
        problems.append("freedom of the 2-loop graph")
    if not (pebble_game(looped_2sigma(g5)).tight and pebble_game(looped_3sigma_minus(g5)).tight):
        problems.append("looped graphs not tight")
    if cli.main(["check", _write(tmp_path, "g5.fg", format_face_graph(g5)), "--route", "all"]) != 0:
        problems.append("check --route=all exit status")
    left = F.hexagon_three_quads()
    if not (is_indivisible(left) and len(bh_edges(left)) == 3 and not tt_edges(left)
            and all(len(left.faces[i].cycle) == 4 for i in left.faces_with("H"))):
        problems.append("indivisible fixture structure")
    for g, c in ((F.heptagon_four_quads(), HEPTAGON_CYCLE), (F.octagon_five_quads(), OCTAGON_CYCLE)):
        found = enumerate_critical_separating_cycles(g, nonfacial_only=True)
        if not found or canonical_cycle(c) not in found:
            problems.append(f"critical cycle {c} missing")
    ok = not problems
    acceptance_line(5, ok, "all fixture checks hold" if ok else "; ".join(problems))
    assert ok


def test_criterion_6_spheres():
    spheres = [g for g in corpus_stream(10, 0, 0, patience=5000)]
    bad = []
    for g in spheres:
        u = g.underlying()
        rep = euclidean_rigidity_rank(u)
        if not (rep.rank == u.m == 3 * u.n - 6):
            bad.append(format_face_graph(g))
    ok = not bad and len(spheres) > 0
    acceptance_line(6, ok, f"{len(spheres)} distinct spheres on <=10 vertices, {len(bad)} exceptions")
    assert ok


def test_criterion_7_double_banana(tmp_path, capsys):
    from rigidkit.graph import format_multigraph
    g = F.double_banana()
    rep = euclidean_rigidity_rank(g)
    path = _write(tmp_path, "db.mg", format_multigraph(g))
    codes = (cli.main(["oracle", path]), cli.main(["numeric", path]))
    capsys.readouterr()
    ok = check_36(g).tight and (rep.rank, g.m) == (17, 18) and codes == (0, 1) and 3 not in codes
    acceptance_line(7, ok, f"count-tight {check_36(g).tight}, rank {rep.rank} of {g.m}, exit codes {codes}")
    assert ok


PROPERTIES = {
    "shared-hole": check_shared_hole,
    "inheritance": check_inheritance,
    "bh-lower-bound": check_bh_lower_bound,
    "three-bh": check_three_bh,
    "terminal-triangles": check_terminal_triangles,
}


def _property_sources(seed: int):
    """Alternate the plain stream and the TT-free stream, fresh seeds each round."""
    for s in itertools.count(seed):
        yield from itertools.islice(corpus_stream(14, 3, s), 150)
        yield from itertools.islice(tt_free_stream(14, s), 15)


def test_criterion_8_property_census():
    budget = float(os.environ.get("RIGIDKIT_ACCEPTANCE_BUDGET", "600"))
    t0 = time.perf_counter()
    trig = dict.fromkeys(PROPERTIES, 0)
    viol = dict.fromkeys(PROPERTIES, 0)
    seen = set()
    for g in _property_sources(0):
        if time.perf_counter() - t0 > budget or min(trig.values()) >= 50:
            break
        key = face_graph_hash(g)
        if key in seen:
            continue
        seen.add(key)
        for name, check in PROPERTIES.items():
            res = check(g)
            trig[name] += res.triggered
            viol[name] += len(res.violations)
    dt = time.perf_counter() - t0
    ok = all(trig[k] >= 50 and viol[k] == 0 for k in PROPERTIES)
    detail = ", ".join(f"{k}: {trig[k]} triggered/{viol[k]} violated" for k in PROPERTIES)
    acceptance_line(8, ok, f"{len(seen)} graphs in {dt:.0f}s; {detail}")
    assert ok


def test_criterion_9_lp_evidence(corpus):
    tight = [g for g, t in corpus if t]
    relaxed, failed = [], []
    for g in tight:
        d = discus_and_hole(g)
        if lp_independence_check(d, p=4, trials=5, tol=1e-8):
            continue
        if lp_independence_check(d, p=4, trials=5, tol=1e-6):
            relaxed.append(face_graph_hash(g))
        else:
            failed.append(format_face_graph(g))
    ok = len(tight) >= 50 and not failed
    acceptance_line(9, ok, f"{len(tight)} tight instances, {len(relaxed)} needed tol 1e-6, "
                           f"{len(failed)} dependent (numerical evidence)")
    assert ok
