"""Count how often each structural property's hypothesis is met, and any counterexamples.

Graphs come from the plain random stream and the TT-free stream in turn, with a
fresh seed per round, deduplicated by map hash.  Counterexamples are written to
``--out`` as a face-graph archive.
"""
from __future__ import annotations

import argparse
import itertools
import time
from dataclasses import dataclass

from rigidkit.corpus import corpus_stream, format_archive, tt_free_stream
from rigidkit.facegraph import face_graph_hash
from rigidkit.properties import CHECKS, check_shared_hole


@dataclass
class Config:
    max_vertices: int = 14
    max_holes: int = 3
    seconds: float = 600.0
    seed: int = 0
    out: str | None = None


def sources(cfg: Config):
    for s in itertools.count(cfg.seed):
        yield from itertools.islice(corpus_stream(cfg.max_vertices, cfg.max_holes, s), 150)
        yield from itertools.islice(tt_free_stream(cfg.max_vertices, s), 15)


def run(cfg: Config) -> int:
    checks = dict(CHECKS)
    checks["shared-hole (arcs leave block)"] = lambda g: check_shared_hole(g, arcs_leave_block=True)
    trig = dict.fromkeys(checks, 0)
    bad: dict[str, list] = {k: [] for k in checks}
    seen = set()
    t0 = time.perf_counter()
    for g in sources(cfg):
        if time.perf_counter() - t0 > cfg.seconds:
            break
        h = face_graph_hash(g)
        if h in seen:
            continue
        seen.add(h)
        for name, check in checks.items():
            res = check(g)
            trig[name] += res.triggered
            if res.violations:
                bad[name].append(g)
    print(f"graphs {len(seen)} seconds {time.perf_counter() - t0:.0f}")
    for name in checks:
        print(f"{name:32s} triggered {trig[name]:6d} counterexample graphs {len(bad[name])}")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(format_archive([g for gs in bad.values() for g in gs]))
    return 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-vertices", type=int, default=Config.max_vertices)
    ap.add_argument("--max-holes", type=int, default=Config.max_holes)
    ap.add_argument("--seconds", type=float, default=Config.seconds)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--out")
    raise SystemExit(run(Config(**vars(ap.parse_args()))))
