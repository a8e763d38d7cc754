"""How long each generator takes to produce a given fixture, and how many
distinct TT-free graphs exist at each size."""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from rigidkit import fixtures
from rigidkit.corpus import corpus_stream, tt_free_stream
from rigidkit.facegraph import face_graph_hash


@dataclass
class Config:
    fixture: str = "hexagon_three_quads"
    max_vertices: int = 9
    max_holes: int = 3
    seed: int = 0
    plain_limit: int = 200_000


def run(cfg: Config) -> int:
    target = face_graph_hash(getattr(fixtures, cfg.fixture)())
    t0 = time.perf_counter()
    found = None
    for i, g in enumerate(tt_free_stream(cfg.max_vertices, cfg.seed)):
        found = found if found is not None else (i if face_graph_hash(g) == target else None)
        last = i
    print(f"tt-free stream: {last + 1} distinct graphs, fixture at item {found}, "
          f"{time.perf_counter() - t0:.1f}s")
    t0 = time.perf_counter()
    for i, g in enumerate(corpus_stream(cfg.max_vertices, cfg.max_holes, cfg.seed)):
        if face_graph_hash(g) == target:
            print(f"plain stream: fixture at item {i}, {time.perf_counter() - t0:.1f}s")
            return 0
        if i >= cfg.plain_limit:
            break
    print(f"plain stream: not found in {cfg.plain_limit} items, {time.perf_counter() - t0:.1f}s")
    return 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fixture", default=Config.fixture)
    ap.add_argument("--max-vertices", type=int, default=Config.max_vertices)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--plain-limit", type=int, default=Config.plain_limit)
    raise SystemExit(run(Config(**vars(ap.parse_args()))))
