"""Exhaustive pebble game vs brute-force (3,0) comparison over small loopy multigraphs.

Prints the number of isomorphism classes per (vertices, edges) layer and the
elapsed time, so the cost of the sweep can be read off directly.
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from rigidkit.enumerate import layers
from rigidkit.oracle import check_30
from rigidkit.pebble import pebble_game


@dataclass
class Config:
    max_vertices: int = 4
    max_edges: int | None = None  # default 3n + 2 per vertex count
    k: int = 3
    l: int = 0


def run(cfg: Config) -> int:
    bad = 0
    for n in range(1, cfg.max_vertices + 1):
        t0 = time.perf_counter()
        total = 0
        top = cfg.max_edges if cfg.max_edges is not None else 3 * n + 2
        for m, reps in layers(n, top):
            for g in reps:
                res, rep = pebble_game(g, cfg.k, cfg.l), check_30(g)
                if (res.sparse, res.tight) != (rep.sparse, rep.tight):
                    bad += 1
                    print("disagreement", g)
            total += len(reps)
        print(f"n {n} max-edges {top} classes {total} disagreements {bad} "
              f"seconds {time.perf_counter() - t0:.1f}", flush=True)
    return int(bool(bad))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-vertices", type=int, default=Config.max_vertices)
    ap.add_argument("--max-edges", type=int)
    raise SystemExit(run(Config(**vars(ap.parse_args()))))
