"""Isomorphism classes of small loopy multigraphs, layer by layer.

Every multigraph with ``m + 1`` edges arises from one with ``m`` edges by
adding an edge, so extending each class representative of layer ``m`` by
every possible edge (loops included) and deduplicating by canonical form
gives layer ``m + 1``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .graph import Multigraph, canonical_form


@dataclass
class SweepReport:
    completed: list[tuple[int, int, int]] = field(default_factory=list)  # (n, m, classes)
    checked: int = 0
    disagreements: list[Multigraph] = field(default_factory=list)
    finished: bool = False
    stopped_at: tuple[int, int] | None = None


def _key(g: Multigraph) -> tuple:
    return canonical_form(g)


def layers(n: int, max_edges: int, deadline: float | None = None) -> Iterator[tuple[int, list[Multigraph]]]:
    """Yield ``(m, representatives)`` for m = 0 .. max_edges.

    Raises ``TimeoutError`` once ``perf_counter()`` passes ``deadline``.
    """
    pairs = [(u, v) for u in range(n) for v in range(u, n)]
    layer = [Multigraph(n, ())]
    yield 0, layer
    for m in range(1, max_edges + 1):
        seen: dict[tuple, Multigraph] = {}
        for g in layer:
            if deadline is not None and time.perf_counter() > deadline:
                raise TimeoutError(m)
            for e in pairs:
                h = Multigraph(n, tuple(sorted(g.edges + (e,))))
                k = _key(h)
                if k not in seen:
                    seen[k] = h
        layer = list(seen.values())
        yield m, layer


def sweep(max_vertices: int, max_edges: int, check: Callable[[Multigraph], bool],
          budget: float | None = None) -> SweepReport:
    """Run ``check`` on every class; stop when ``budget`` seconds run out."""
    rep = SweepReport()
    t0 = time.perf_counter()
    deadline = None if budget is None else t0 + budget
    for n in range(max_vertices + 1):
        try:
            for m, reps in layers(n, max_edges, deadline):
                for g in reps:
                    if deadline is not None and time.perf_counter() > deadline:
                        rep.stopped_at = (n, m)
                        return rep
                    rep.checked += 1
                    if not check(g):
                        rep.disagreements.append(g)
                rep.completed.append((n, m, len(reps)))
        except TimeoutError as exc:
            rep.stopped_at = (n, exc.args[0])
            return rep
    rep.finished = True
    return rep
