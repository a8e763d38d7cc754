"""Seeded random face graphs.

A triangulated sphere is grown from K4 by random planar vertex splits.  Discs
are then carved out of it by random face-region growth: a region is kept
only while its boundary stays a single simple cycle, so each disc is a
simplicial disc, and discs never share a triangle.  The first disc becomes
the B face and the others H faces.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .construct import discus_and_hole
from .facegraph import FaceGraph, FaceGraphError, face_graph_hash, format_face_graph

MAX_CORPUS_VERTICES = 14
K4_FACES = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]


@dataclass(frozen=True)
class CorpusEntry:
    graph: FaceGraph
    m: int
    n: int
    tight: bool

    def header(self) -> str:
        return f"# class {self.m} {self.n} {'tight' if self.tight else 'not-tight'}"


def random_sphere(nv: int, rng: random.Random) -> list[tuple[int, int, int]]:
    """Oriented triangle list of a random triangulated sphere on ``nv`` vertices."""
    if nv < 4:
        raise ValueError("a triangulated sphere needs at least 4 vertices")
    faces = list(K4_FACES)
    for w in range(4, nv):
        v = rng.randrange(w)
        # rotation at v: face (v, x, y) sends x -> y
        nxt = {}
        for f in faces:
            if v in f:
                i = f.index(v)
                nxt[f[(i + 1) % 3]] = f[(i + 2) % 3]
        ring = [min(nxt)]
        while nxt[ring[-1]] != ring[0]:
            ring.append(nxt[ring[-1]])
        d = len(ring)
        i = rng.randrange(d)
        j = (i + rng.randrange(1, d)) % d
        moved = set()
        t = i
        while t != j:
            moved.add((ring[t], ring[(t + 1) % d]))
            t = (t + 1) % d
        out = []
        for f in faces:
            if v in f:
                k = f.index(v)
                if (f[(k + 1) % 3], f[(k + 2) % 3]) in moved:
                    f = tuple(w if x == v else x for x in f)
            out.append(f)
        out += [(v, ring[i], w), (v, w, ring[j])]
        faces = out
    return faces


def _boundary_cycle(region: set[int], faces) -> list[int] | None:
    """Boundary of a triangle region if it is one simple cycle, else None."""
    count: dict[tuple[int, int], int] = {}
    darts = {}
    for fi in region:
        f = faces[fi]
        for k in range(3):
            a, b = f[k], f[(k + 1) % 3]
            e = (min(a, b), max(a, b))
            count[e] = count.get(e, 0) + 1
            darts[e] = (a, b)
    succ = {}
    for e, c in count.items():
        if c == 1:
            a, b = darts[e]
            if a in succ:
                return None
            succ[a] = b
    if not succ:
        return None
    start = min(succ)
    cyc = [start]
    while succ[cyc[-1]] != start:
        cyc.append(succ[cyc[-1]])
        if len(cyc) > len(succ):
            return None
    return cyc if len(cyc) == len(succ) else None


def _grow_disc(faces, free: set[int], adj, target: int, rng: random.Random,
               extra: float = 0.5, steps: int = 60) -> tuple[set[int], list[int]] | None:
    seeds = sorted(free)
    if not seeds:
        return None
    region = {rng.choice(seeds)}
    cyc = _boundary_cycle(region, faces)
    for _ in range(steps):
        if len(cyc) == target and (len(cyc) >= 4) and rng.random() > extra:
            return region, cyc
        cand = sorted({g for f in region for g in adj[f] if g in free and g not in region})
        rng.shuffle(cand)
        for g in cand:
            trial = region | {g}
            c = _boundary_cycle(trial, faces)
            if c is not None and len(c) <= target + 1 and len(trial) < len(faces) - 1:
                region, cyc = trial, c
                break
        else:
            break
    if len(cyc) == target and target >= 4:
        return region, cyc
    return None


def _face_adjacency(faces) -> list[list[int]]:
    by_edge: dict[tuple[int, int], list[int]] = {}
    for i, f in enumerate(faces):
        for k in range(3):
            a, b = f[k], f[(k + 1) % 3]
            by_edge.setdefault((min(a, b), max(a, b)), []).append(i)
    adj: list[list[int]] = [[] for _ in faces]
    for fs in by_edge.values():
        a, b = fs
        adj[a].append(b)
        adj[b].append(a)
    return adj


def _hole_lengths(block: int, holes: int, rng: random.Random, balanced: bool) -> list[int]:
    if balanced:
        # sum of (length - 3) over holes equals block - 3
        k = min(holes, block - 3)
        cuts = sorted(rng.sample(range(1, block - 3), k - 1)) if k > 1 else []
        parts = [b - a for a, b in zip([0] + cuts, cuts + [block - 3])]
        return [p + 3 for p in parts]
    return [rng.randint(4, max(4, block)) for _ in range(rng.randint(1, holes))]


def random_face_graph(max_vertices: int, max_holes: int, rng: random.Random,
                      balanced: bool = True, quads: bool = False, tries: int = 50) -> FaceGraph | None:
    """One random face graph (one B face when ``max_holes > 0``)."""
    for _ in range(tries):
        nv = rng.randint(4, max_vertices)
        faces = random_sphere(nv, rng)
        if max_holes == 0:
            return FaceGraph([("T", f) for f in faces])
        adj = _face_adjacency(faces)
        free = set(range(len(faces)))
        lb = rng.randint(4, max(4, min(nv - 1, 3 + max_holes if quads else nv)))
        got = _grow_disc(faces, free, adj, lb, rng)
        if got is None:
            continue
        discs = [("B", got)]
        free -= got[0]
        lengths = [4] * min(max_holes, lb - 3) if quads else _hole_lengths(lb, max_holes, rng, balanced)
        ok = True
        for h in lengths:
            got = _grow_disc(faces, free, adj, h, rng, extra=0.3)
            if got is None:
                ok = False
                break
            discs.append(("H", got))
            free -= got[0]
        if not ok:
            continue
        out = [("T", faces[i]) for i in sorted(free)]
        out += [(lab, tuple(cyc)) for lab, (_, cyc) in discs]
        if not free and len(discs) == 2:
            continue  # the B and H discs share one boundary: a bare cycle
        try:
            return FaceGraph(out).canonical()
        except FaceGraphError:
            continue
    return None


def corpus_stream(max_vertices: int, max_holes: int, seed: int, balanced: float = 0.6,
                  quads: float = 0.0, patience: int = 20000) -> Iterator[FaceGraph]:
    """Deterministic stream of distinct face graphs; ends after ``patience``
    consecutive repeats."""
    if not 4 <= max_vertices <= MAX_CORPUS_VERTICES:
        raise ValueError(f"max_vertices must lie in 4..{MAX_CORPUS_VERTICES}")
    if max_holes < 0:
        raise ValueError("max_holes must be non-negative")
    rng = random.Random(seed)
    seen: set[str] = set()
    misses = 0
    while True:
        g = random_face_graph(max_vertices, max_holes, rng,
                              balanced=rng.random() < balanced, quads=rng.random() < quads)
        if g is None:
            continue
        key = face_graph_hash(g)
        if key in seen:
            misses += 1
            if misses > patience:
                return
            continue
        misses = 0
        seen.add(key)
        yield g


def _tt_free_partitions(faces, adj, free: set[int], budget: int, ring, cap: int):
    """Split ``free`` into isolated triangles and 2- or 3-triangle holes.

    Holes cost ``|H| - 3`` (1 or 2) and must use up ``budget`` exactly.
    Holes meeting the ring in two vertices that are not consecutive on it, or
    in more than two vertices, are skipped: they always produce a
    non-facial critical separating cycle.
    """
    ring_set = set(ring)
    ring_edges = {(min(a, b), max(a, b)) for a, b in zip(ring, list(ring[1:]) + [ring[0]])}
    order = sorted(free)
    state: dict[int, object] = {}
    out: list[dict] = []

    memo: dict[frozenset, bool] = {}

    def hole_ok(tris) -> bool:
        key = frozenset(tris)
        if key not in memo:
            memo[key] = _hole_ok(tris)
        return memo[key]

    def _hole_ok(tris) -> bool:
        on = set().union(*(faces[t] for t in tris)) & ring_set
        if len(on) > 2:
            return False
        if len(on) == 2 and tuple(sorted(on)) not in ring_edges:
            return False
        c = _boundary_cycle(set(tris), faces)
        return c is not None and len(c) == len(tris) + 2

    def rec(i: int, left: int):
        if len(out) >= cap:
            return
        while i < len(order) and order[i] in state:
            i += 1
        if i == len(order):
            if left == 0:
                out.append(dict(state))
            return
        x = order[i]
        if all(state.get(y) != "S" for y in adj[x] if y in free):
            state[x] = "S"
            forced = sum(1 for t in order if t not in state
                         and any(state.get(y) == "S" for y in adj[t]))
            if forced <= 3 * left:
                rec(i + 1, left)
            del state[x]
        if left == 0:
            return
        for y in adj[x]:
            if y not in free or y in state:
                continue
            if hole_ok((x, y)):
                state[x] = state[y] = (x, y)
                rec(i + 1, left - 1)
                del state[x], state[y]
            if left >= 2:
                for z in sorted({*adj[x], *adj[y]}):
                    if z in free and z not in state and z not in (x, y) and (x < z or z not in adj[x]) \
                            and hole_ok((x, y, z)):
                        state[x] = state[y] = state[z] = (x, y, z)
                        rec(i + 1, left - 2)
                        del state[x], state[y], state[z]

    rec(0, budget)
    return out


def tt_free_stream(max_vertices: int, seed: int, cap: int = 200, patience: int = 3000) -> Iterator[FaceGraph]:
    """Distinct face graphs with one B face, no TT edge and freedom-6 counts.

    Meant for exercising statements about graphs without TT edges, which the
    plain stream almost never produces.  Ends after ``patience`` consecutive
    sphere draws without a new graph.
    """
    if not 6 <= max_vertices <= MAX_CORPUS_VERTICES:
        raise ValueError(f"max_vertices must lie in 6..{MAX_CORPUS_VERTICES}")
    rng = random.Random(seed)
    seen: set[str] = set()
    misses = 0
    while misses < patience:
        misses += 1
        nv = rng.randint(6, max_vertices)
        faces = random_sphere(nv, rng)
        adj = _face_adjacency(faces)
        lb = rng.randint(4, min(nv - 1, 10))
        got = _grow_disc(faces, set(range(len(faces))), adj, lb, rng, extra=0.0)
        if got is None:
            continue
        region, ring = got
        free = set(range(len(faces))) - region
        sols = _tt_free_partitions(faces, adj, free, lb - 3, ring, cap)
        rng.shuffle(sols)
        for sol in sols:
            out = [("B", tuple(ring))]
            done = set()
            for t, tag in sorted(sol.items(), key=lambda kv: kv[0]):
                if tag == "S":
                    out.append(("T", faces[t]))
                elif tag not in done:
                    done.add(tag)
                    out.append(("H", tuple(_boundary_cycle(set(tag), faces))))
            if len(out) == 2 and out[1][0] == "H":
                continue
            try:
                g = FaceGraph(out).canonical()
            except FaceGraphError:
                continue
            key = face_graph_hash(g)
            if key not in seen:
                seen.add(key)
                misses = 0
                yield g


def generate_corpus(max_vertices: int, max_holes: int, count: int, seed: int, **kw) -> list[FaceGraph]:
    """``count`` distinct face graphs (fewer if the space is exhausted)."""
    out = []
    for g in corpus_stream(max_vertices, max_holes, seed, **kw):
        out.append(g)
        if len(out) == count:
            break
    return out


def classify(g: FaceGraph) -> CorpusEntry:
    from .oracle import check_36
    tight = check_36(discus_and_hole(g)).tight
    return CorpusEntry(g, g.m_blocks, g.n_holes, tight)


def format_archive(graphs) -> str:
    parts = []
    for g in graphs:
        e = classify(g)
        parts.append(e.header() + "\n" + format_face_graph(g))
    return "\n".join(parts)


def parse_archive(text: str) -> list[FaceGraph]:
    from .facegraph import parse_face_graph
    blocks = [b for b in text.split("\n\n") if b.strip()]
    return [parse_face_graph(b) for b in blocks]
