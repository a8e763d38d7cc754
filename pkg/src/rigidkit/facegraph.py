"""Sphere-embedded face graphs with B/H-labelled non-triangular faces.

The face list is authoritative.  Faces are re-oriented on construction so
that every edge ``{a, b}`` is traversed ``a -> b`` by one face and
``b -> a`` by the other; the rotation system and per-edge face pairs are
derived from that.
"""
from __future__ import annotations

import hashlib
import os
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .graph import SimpleGraph

LABELS = ("T", "B", "H")
MAX_CYCLE_VERTICES = 24
MAX_CYCLES = 10**6


class FaceGraphError(ValueError):
    pass


def _enum_bound(default: int) -> int:
    env = os.environ.get("RIGIDKIT_MAX_VERTICES")
    return int(env) if env else default


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Face:
    label: str
    cycle: tuple[int, ...]

    def edges(self) -> Iterator[tuple[int, int]]:
        c = self.cycle
        for i in range(len(c)):
            yield _edge(c[i], c[(i + 1) % len(c)])

    def darts(self) -> Iterator[tuple[int, int]]:
        c = self.cycle
        for i in range(len(c)):
            yield c[i], c[(i + 1) % len(c)]


def _same_cycle(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b) or set(a) != set(b):
        return False
    return canonical_cycle(a) == canonical_cycle(b)


def canonical_cycle(c: Sequence[int]) -> tuple[int, ...]:
    """Rotation/reflection-invariant representative of a cyclic vertex list."""
    c = list(c)
    i = c.index(min(c))
    fwd = c[i:] + c[:i]
    bwd = [fwd[0]] + fwd[1:][::-1]
    return tuple(min(fwd, bwd))


class FaceGraph:
    """A face graph: a sphere embedding given by faces labelled T, B or H.

    Vertex labels are arbitrary non-negative integers; they are kept through
    splitting and contraction so moves can be reported in the caller's ids.
    """

    def __init__(self, faces: Iterable[tuple[str, Sequence[int]]], validate: bool = True):
        fs = []
        for label, cycle in faces:
            if isinstance(label, Face):
                label, cycle = label.label, label.cycle
            fs.append(Face(str(label), tuple(int(x) for x in cycle)))
        self.faces: tuple[Face, ...] = tuple(_orient(fs)) if validate else tuple(fs)
        if validate:
            self._validate()

    # -- derived structure -------------------------------------------------

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.faces for v in f.cycle}))

    @cached_property
    def edge_faces(self) -> dict[tuple[int, int], tuple[int, ...]]:
        out: dict[tuple[int, int], list[int]] = {}
        for i, f in enumerate(self.faces):
            for e in f.edges():
                out.setdefault(e, []).append(i)
        return {e: tuple(v) for e, v in out.items()}

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edge_faces))

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def dart_face(self) -> dict[tuple[int, int], int]:
        return {d: i for i, f in enumerate(self.faces) for d in f.darts()}

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    @cached_property
    def rotation(self) -> dict[int, tuple[int, ...]]:
        """Cyclic neighbour order at each vertex, consistent with face orientation."""
        succ: dict[int, dict[int, int]] = {v: {} for v in self.vertices}
        for f in self.faces:
            c = f.cycle
            k = len(c)
            for i in range(k):
                v, q, p = c[i], c[(i + 1) % k], c[i - 1]
                succ[v][q] = p
        rot = {}
        for v, nxt in succ.items():
            start = min(nxt)
            order = [start]
            while nxt[order[-1]] != start:
                order.append(nxt[order[-1]])
            rot[v] = tuple(order)
        return rot

    @property
    def n(self) -> int:
        return len(self.vertices)

    def faces_with(self, label: str) -> list[int]:
        return [i for i, f in enumerate(self.faces) if f.label == label]

    @property
    def m_blocks(self) -> int:
        return len(self.faces_with("B"))

    @property
    def n_holes(self) -> int:
        return len(self.faces_with("H"))

    def block_face(self) -> Face:
        """The unique B face; rejects graphs with zero or several B faces."""
        bs = self.faces_with("B")
        if len(bs) != 1:
            raise FaceGraphError(f"expected exactly one B face, found {len(bs)}")
        return self.faces[bs[0]]

    def underlying(self) -> SimpleGraph:
        return SimpleGraph.from_labelled(self.edges, self.vertices)

    def freedom(self) -> int:
        return 3 * self.n - len(self.edges)

    def dagger_freedom(self) -> int:
        """Freedom of the discus-and-hole graph, from the face counts alone."""
        return self.freedom() + sum(6 - 2 * len(self.faces[i].cycle) for i in self.faces_with("B"))

    def is_facial(self, cycle: Sequence[int]) -> bool:
        return any(_same_cycle(f.cycle, cycle) for f in self.faces)

    def __eq__(self, other):
        if not isinstance(other, FaceGraph):
            return NotImplemented
        return sorted((f.label, canonical_cycle(f.cycle)) for f in self.faces) == \
            sorted((f.label, canonical_cycle(f.cycle)) for f in other.faces)

    def __hash__(self):
        return hash(tuple(sorted((f.label, canonical_cycle(f.cycle)) for f in self.faces)))

    def __repr__(self):
        return f"FaceGraph(n={self.n}, m={self.m_blocks}, holes={self.n_holes}, faces={len(self.faces)})"

    def relabelled(self, mapping: dict[int, int]) -> "FaceGraph":
        return FaceGraph([(f.label, [mapping[v] for v in f.cycle]) for f in self.faces])

    def canonical(self) -> "FaceGraph":
        """Copy with vertices renamed densely 0..n-1 in sorted label order."""
        return self.relabelled({v: i for i, v in enumerate(self.vertices)})

    # -- validation --------------------------------------------------------

    def _validate(self):
        if not self.faces:
            raise FaceGraphError("no faces")
        for f in self.faces:
            if f.label not in LABELS:
                raise FaceGraphError(f"unknown face label {f.label!r}")
            if len(set(f.cycle)) != len(f.cycle):
                raise FaceGraphError(f"face boundary {f.cycle} is not a simple cycle")
            if min(f.cycle) < 0:
                raise FaceGraphError("negative vertex id")
            if f.label == "T" and len(f.cycle) != 3:
                raise FaceGraphError(f"T face {f.cycle} must have length 3")
            if f.label != "T" and len(f.cycle) < 4:
                what = "labelled triangle" if len(f.cycle) == 3 else "face shorter than 3"
                raise FaceGraphError(f"{what}: {f.label} {f.cycle}")
        for e, fs in self.edge_faces.items():
            if len(fs) != 2:
                raise FaceGraphError(f"edge {e} lies in {len(fs)} faces (expected 2)")
        euler = self.n - len(self.edges) + len(self.faces)
        if euler != 2:
            raise FaceGraphError(f"Euler characteristic {euler} != 2: not a sphere")
        # each vertex link must be a single cycle (no pinched vertices)
        for v in self.vertices:
            link: dict[int, list[int]] = {}
            for f in self.faces:
                c = f.cycle
                if v in c:
                    i = c.index(v)
                    a, b = c[i - 1], c[(i + 1) % len(c)]
                    link.setdefault(a, []).append(b)
                    link.setdefault(b, []).append(a)
            if any(len(x) != 2 for x in link.values()) or not _connected(link):
                raise FaceGraphError(f"vertex {v} is pinched (its faces do not form a disc)")
        if not _connected({v: list(s) for v, s in self.adjacency.items()}):
            raise FaceGraphError("graph is disconnected")


def _connected(adj: dict[int, Sequence[int]]) -> bool:
    if not adj:
        return True
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(adj)


def _orient(faces: list[Face]) -> list[Face]:
    """Flip face cycles so adjacent faces traverse shared edges oppositely."""
    by_edge: dict[tuple[int, int], list[int]] = {}
    for i, f in enumerate(faces):
        for e in f.edges():
            by_edge.setdefault(e, []).append(i)
    out: list[Face | None] = [None] * len(faces)
    for root in range(len(faces)):
        if out[root] is not None:
            continue
        out[root] = faces[root]
        queue = deque([root])
        while queue:
            i = queue.popleft()
            darts = set(out[i].darts())
            for e in out[i].edges():
                for j in by_edge.get(e, ()):
                    if j == i:
                        continue
                    a, b = e
                    # face i traverses e as (a, b) or (b, a); face j must do the opposite
                    fwd_i = (a, b) in darts
                    cand = faces[j]
                    fwd_j = (a, b) in set(cand.darts())
                    if fwd_i == fwd_j:
                        cand = Face(cand.label, (cand.cycle[0],) + tuple(reversed(cand.cycle[1:])))
                    if out[j] is None:
                        out[j] = cand
                        queue.append(j)
                    elif set(out[j].darts()) != set(cand.darts()) and len(by_edge[e]) == 2:
                        raise FaceGraphError("face orientations are inconsistent: not an orientable surface")
    return out  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# text format

def parse_face_graph(text: str) -> FaceGraph:
    n = None
    faces = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "facegraph" or len(parts) != 2:
                raise FaceGraphError(f"line {lineno}: expected 'facegraph <n>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise FaceGraphError(f"line {lineno}: bad vertex count") from None
            continue
        if parts[0] != "face" or len(parts) < 2:
            raise FaceGraphError(f"line {lineno}: expected 'face <T|B|H> v1 ... vk'")
        label = parts[1]
        if label not in LABELS:
            raise FaceGraphError(f"line {lineno}: unknown face label {label!r}")
        try:
            cycle = [int(x) for x in parts[2:]]
        except ValueError:
            raise FaceGraphError(f"line {lineno}: non-integer vertex id") from None
        if any(not 0 <= v < n for v in cycle):
            raise FaceGraphError(f"line {lineno}: vertex id out of range 0..{n - 1}")
        faces.append((label, cycle))
    if n is None:
        raise FaceGraphError("empty face-graph description")
    if len(faces) == 2 and all(lab != "T" for lab, _ in faces):
        raise FaceGraphError("a bare cycle with two non-triangular faces is not a face graph")
    g = FaceGraph(faces)
    if g.vertices != tuple(range(n)):
        raise FaceGraphError(f"faces use {g.n} vertices but header declares {n}")
    return g


def format_face_graph(g: FaceGraph) -> str:
    if g.vertices != tuple(range(g.n)):
        g = g.canonical()
    lines = [f"facegraph {g.n}"]
    lines += [f"face {f.label} " + " ".join(map(str, f.cycle)) for f in g.faces]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# map isomorphism

def face_graph_hash(g: FaceGraph) -> str:
    """Digest equal for face graphs related by a label-preserving map isomorphism
    (orientation reversal included)."""
    best = None
    for mirror in (False, True):
        rot = g.rotation
        if mirror:
            rot = {v: (r[0],) + tuple(reversed(r[1:])) for v, r in rot.items()}
        for u in g.vertices:
            for v in rot[u]:
                code = _map_code(g, rot, u, v, mirror)
                if best is None or code < best:
                    best = code
    return hashlib.sha256(repr(best).encode()).hexdigest()


def _map_code(g: FaceGraph, rot, root: int, first: int, mirror: bool) -> tuple:
    label = {root: 0}
    entry = {root: first}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        r = rot[x]
        i = r.index(entry[x])
        for y in r[i:] + r[:i]:
            if y not in label:
                label[y] = len(label)
                entry[y] = x
                queue.append(y)
    faces = []
    for f in g.faces:
        c = [label[v] for v in (reversed(f.cycle) if mirror else f.cycle)]
        j = c.index(min(c))
        faces.append((f.label, tuple(c[j:] + c[:j])))
    return (len(label), tuple(sorted(faces)))


# ---------------------------------------------------------------------------
# edges

def classify_edge(g: FaceGraph, e: tuple[int, int]) -> str:
    """Unordered pair of incident face labels, e.g. ``'BH'`` or ``'TT'``."""
    e = _edge(*e)
    if e not in g.edge_faces:
        raise FaceGraphError(f"{e} is not an edge")
    a, b = (g.faces[i].label for i in g.edge_faces[e])
    return "".join(sorted(a + b))


def common_neighbours(g: FaceGraph, u: int, v: int) -> frozenset[int]:
    return g.adjacency[u] & g.adjacency[v]


def nonfacial_triangles_through(g: FaceGraph, e: tuple[int, int]) -> list[tuple[int, int, int]]:
    u, v = e
    out = []
    for w in sorted(common_neighbours(g, u, v)):
        if not g.is_facial((u, v, w)):
            out.append((u, v, w))
    return out


def triangles_through(g: FaceGraph, e: tuple[int, int]) -> list[tuple[int, int, int]]:
    u, v = e
    return [(u, v, w) for w in sorted(common_neighbours(g, u, v))]


# ---------------------------------------------------------------------------
# cycles

def _check_cycle(g: FaceGraph, c: Sequence[int]) -> tuple[int, ...]:
    c = tuple(c)
    if len(c) < 3 or len(set(c)) != len(c):
        raise FaceGraphError(f"{c} is not a simple cycle")
    for i in range(len(c)):
        if _edge(c[i], c[(i + 1) % len(c)]) not in g.edge_faces:
            raise FaceGraphError(f"{c} is not a cycle of the graph")
    return c


def simple_cycles(g: FaceGraph, through: tuple[int, int] | None = None,
                  max_cycles: int = MAX_CYCLES, max_length: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every simple cycle once, as a vertex tuple.

    With ``through=(u, v)`` only cycles using that edge are produced, each
    starting ``u, v``.
    """
    adj = {v: sorted(s) for v, s in g.adjacency.items()}
    count = 0
    limit = max_length or len(g.vertices)
    if through is not None:
        u, v = through
        if _edge(u, v) not in g.edge_faces:
            raise FaceGraphError(f"{through} is not an edge")
        path = [u, v]
        on = {u, v}
        stack = [iter(adj[v])]
        while stack:
            for w in stack[-1]:
                if w == u and len(path) >= 3:
                    count += 1
                    if count > max_cycles:
                        raise FaceGraphError(f"more than {max_cycles} cycles")
                    yield tuple(path)
                elif w not in on and len(path) < limit:
                    path.append(w)
                    on.add(w)
                    stack.append(iter(adj[w]))
                    break
            else:
                stack.pop()
                on.discard(path.pop())
        return
    for s in g.vertices:
        path = [s]
        on = {s}
        stack = [iter([w for w in adj[s] if w > s])]
        while stack:
            for w in stack[-1]:
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        count += 1
                        if count > max_cycles:
                            raise FaceGraphError(f"more than {max_cycles} cycles")
                        yield tuple(path)
                elif w > s and w not in on and len(path) < limit:
                    path.append(w)
                    on.add(w)
                    stack.append(iter(adj[w]))
                    break
            else:
                stack.pop()
                on.discard(path.pop())


class _SideIndex:
    """Precomputed dual structure for splitting faces along cycles quickly."""

    def __init__(self, g: FaceGraph):
        self.g = g
        self.face_nbrs: list[list[tuple[tuple[int, int], int]]] = [[] for _ in g.faces]
        for e, (a, b) in g.edge_faces.items():
            self.face_nbrs[a].append((e, b))
            self.face_nbrs[b].append((e, a))
        self.vertex_faces = {v: [] for v in g.vertices}
        for i, f in enumerate(g.faces):
            for v in f.cycle:
                self.vertex_faces[v].append(i)
        self.root = g.faces_with("B")[0] if g.faces_with("B") else 0

    def exterior(self, c: Sequence[int]) -> set[int]:
        cyc = {_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c))}
        seen = {self.root}
        stack = [self.root]
        while stack:
            f = stack.pop()
            for e, h in self.face_nbrs[f]:
                if h not in seen and e not in cyc:
                    seen.add(h)
                    stack.append(h)
        return seen

    def interior_counts(self, c: Sequence[int]) -> tuple[int, int, set[int]]:
        """(interior vertex count, interior edge count, exterior faces)."""
        ext = self.exterior(c)
        on_c = set(c)
        vin = sum(1 for v, fs in self.vertex_faces.items()
                  if v not in on_c and not any(f in ext for f in fs))
        ein = sum(1 for a, b in self.g.edge_faces.values() if a not in ext and b not in ext)
        return vin, ein, ext


def sides(g: FaceGraph, c: Sequence[int]) -> tuple[list[int], list[int]]:
    """Face indices on the B side (exterior) and the other side (interior) of ``c``."""
    c = _check_cycle(g, c)
    g.block_face()
    ext = _SideIndex(g).exterior(c)
    inner = [i for i in range(len(g.faces)) if i not in ext]
    if not inner:
        raise FaceGraphError("cycle does not separate the sphere")
    return sorted(ext), inner


def external_face_graph(g: FaceGraph, c: Sequence[int]) -> FaceGraph:
    c = _check_cycle(g, c)
    ext, _ = sides(g, c)
    new = ("H" if len(c) >= 4 else "T", c)
    return FaceGraph([(g.faces[i].label, g.faces[i].cycle) for i in ext] + [new])


def internal_face_graph(g: FaceGraph, c: Sequence[int]) -> FaceGraph:
    c = _check_cycle(g, c)
    _, inner = sides(g, c)
    new = ("B" if len(c) >= 4 else "T", c)
    return FaceGraph([(g.faces[i].label, g.faces[i].cycle) for i in inner] + [new])


def split_at_cycle(g: FaceGraph, c: Sequence[int]) -> tuple[FaceGraph, FaceGraph]:
    """External and internal face graphs of ``c``.

    A cycle bounding a single H face is rejected: its interior is empty.
    """
    c = _check_cycle(g, c)
    _, inner = sides(g, c)
    if len(inner) == 1 and g.faces[inner[0]].label == "H":
        raise FaceGraphError("cycle bounds an H face: empty interior")
    return external_face_graph(g, c), internal_face_graph(g, c)


def ext_dagger(g: FaceGraph, c: Sequence[int]) -> SimpleGraph:
    from .construct import discus_and_hole
    return discus_and_hole(external_face_graph(g, c))


def is_critical_separating(g: FaceGraph, c: Sequence[int], oracle: str = "pebble") -> bool:
    """Is the external discus-and-hole graph of ``c`` (3,6)-tight?

    ``oracle`` is ``"pebble"`` (looped face graph of the external face graph)
    or ``"brute"`` (subset enumeration on the discus-and-hole graph).
    """
    g1 = external_face_graph(g, c)
    if g1.dagger_freedom() != 6:
        return False
    if oracle == "pebble":
        from .construct import looped_2sigma
        from .pebble import pebble_game
        return pebble_game(looped_2sigma(g1)).tight
    if oracle == "brute":
        from .construct import discus_and_hole
        from .oracle import check_36
        return check_36(discus_and_hole(g1)).tight
    raise ValueError(f"unknown oracle {oracle!r}")


def is_tight(g: FaceGraph) -> bool:
    """Is the discus-and-hole graph of a single-B face graph (3,6)-tight? (pebble route)"""
    from .construct import looped_2sigma
    from .pebble import pebble_game
    if g.m_blocks == 0:
        return all(f.label == "T" for f in g.faces)
    return g.dagger_freedom() == 6 and pebble_game(looped_2sigma(g)).tight


def enumerate_critical_separating_cycles(g: FaceGraph, nonfacial_only: bool = False,
                                         through: tuple[int, int] | None = None,
                                         oracle: str = "pebble",
                                         max_vertices: int | None = None,
                                         max_cycles: int = MAX_CYCLES) -> list[tuple[int, ...]]:
    """All critical separating cycles (canonical vertex order), sorted.

    Freedom of the external discus-and-hole graph is read off the interior
    counts, so most cycles are discarded without building anything.  When the
    whole discus-and-hole graph is tight, every external one with freedom 6
    is a subgraph of it and hence tight as well, so no further check is made.
    """
    if g.m_blocks == 0:
        return []
    g.block_face()
    bound = max_vertices if max_vertices is not None else _enum_bound(MAX_CYCLE_VERTICES)
    if g.n > bound:
        raise FaceGraphError(f"cycle enumeration: {g.n} vertices exceeds bound {bound}")
    total = g.dagger_freedom()
    parent_tight = total == 6 and is_tight(g)
    idx = _SideIndex(g)
    facial = {canonical_cycle(f.cycle) for f in g.faces}
    found = []
    for c in simple_cycles(g, through=through, max_cycles=max_cycles):
        key = canonical_cycle(c)
        if nonfacial_only and key in facial:
            continue
        vin, ein, _ = idx.interior_counts(c)
        if total - 3 * vin + ein != 6:
            continue
        if parent_tight or is_critical_separating(g, c, oracle=oracle):
            found.append(key)
    return sorted(set(found))


# ---------------------------------------------------------------------------
# contractions

def contract_edge(g: FaceGraph, u: int, v: int, keep: int | None = None) -> FaceGraph:
    """Identify ``u`` and ``v``; collapsed triangles and loops disappear, longer
    faces shrink by one and turn into T faces on reaching length three."""
    e = _edge(u, v)
    if e not in g.edge_faces:
        raise FaceGraphError(f"{e} is not an edge")
    keep = min(u, v) if keep is None else keep
    if keep not in (u, v):
        raise FaceGraphError("kept vertex must be an endpoint")
    gone = v if keep == u else u
    faces = []
    for f in g.faces:
        cyc = [keep if x == gone else x for x in f.cycle]
        out = [x for i, x in enumerate(cyc) if x != cyc[i - 1]]
        if len(out) < 3:
            continue
        if len(set(out)) != len(out):
            raise FaceGraphError(f"contracting {e} pinches face {f.cycle}")
        label = f.label if len(out) >= 4 else "T"
        faces.append((label, out))
    return FaceGraph(faces)


def is_contractible_TT(g: FaceGraph, e: tuple[int, int]) -> bool:
    return classify_edge(g, e) == "TT" and not nonfacial_triangles_through(g, _edge(*e))


def is_contractible_BH(g: FaceGraph, e: tuple[int, int]) -> bool:
    return classify_edge(g, e) == "BH" and not triangles_through(g, _edge(*e))


def contract_TT(g: FaceGraph, e: tuple[int, int], keep: int | None = None) -> FaceGraph:
    e = _edge(*e)
    if classify_edge(g, e) != "TT":
        raise FaceGraphError(f"{e} is not a TT edge")
    if nonfacial_triangles_through(g, e):
        raise FaceGraphError(f"{e} lies in a non-facial 3-cycle")
    return contract_edge(g, *e, keep=keep)


def contract_BH(g: FaceGraph, e: tuple[int, int], keep: int | None = None) -> FaceGraph:
    e = _edge(*e)
    if classify_edge(g, e) != "BH":
        raise FaceGraphError(f"{e} is not a BH edge")
    if triangles_through(g, e):
        raise FaceGraphError(f"{e} lies in a 3-cycle")
    return contract_edge(g, *e, keep=keep)


def is_admissible_TT(g: FaceGraph, e: tuple[int, int], oracle: str = "pebble") -> bool:
    """Contractible TT edge on no non-facial critical separating cycle."""
    e = _edge(*e)
    if not is_contractible_TT(g, e):
        raise FaceGraphError(f"{e} is not a contractible TT edge")
    if g.m_blocks == 0:
        return True
    return not enumerate_critical_separating_cycles(g, nonfacial_only=True, through=e, oracle=oracle)


def contraction_preserves_tightness(g: FaceGraph, e: tuple[int, int]) -> bool:
    """Independent admissibility test: contract, then run the pebble route."""
    try:
        h = contract_edge(g, *_edge(*e))
    except FaceGraphError:
        return False
    return is_tight(h)


# ---------------------------------------------------------------------------
# predicates

def bh_edges(g: FaceGraph) -> list[tuple[int, int]]:
    return [e for e in g.edges if classify_edge(g, e) == "BH"]


def tt_edges(g: FaceGraph) -> list[tuple[int, int]]:
    return [e for e in g.edges if classify_edge(g, e) == "TT"]


def is_BH_reduced(g: FaceGraph) -> bool:
    return not any(is_contractible_BH(g, e) for e in bh_edges(g))


def is_terminal(g: FaceGraph) -> bool:
    return not any(is_admissible_TT(g, e) for e in tt_edges(g) if is_contractible_TT(g, e))


def is_indivisible(g: FaceGraph) -> bool:
    return not enumerate_critical_separating_cycles(g, nonfacial_only=True)
