"""Compare the four tightness routes on a stream of random single-block face graphs."""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from rigidkit.construct import discus_and_hole, looped_2sigma, looped_3sigma_minus
from rigidkit.corpus import corpus_stream
from rigidkit.facegraph import format_face_graph
from rigidkit.numeric import is_minimally_3_rigid_numeric
from rigidkit.oracle import check_36
from rigidkit.pebble import pebble_game
from rigidkit.reduction import reduce_to_K3, verify_certificate


@dataclass
class Config:
    max_vertices: int = 12
    max_holes: int = 3
    count: int = 2000
    seed: int = 0
    reduce: bool = True


def run(cfg: Config) -> int:
    t0 = time.perf_counter()
    seen = tight = mismatches = bad_certs = 0
    for g in corpus_stream(cfg.max_vertices, cfg.max_holes, cfg.seed):
        if g.m_blocks != 1:
            continue
        d = discus_and_hole(g)
        v = (pebble_game(looped_2sigma(g)).tight, pebble_game(looped_3sigma_minus(g)).tight,
             check_36(d).tight, is_minimally_3_rigid_numeric(d))
        seen += 1
        if len(set(v)) != 1:
            mismatches += 1
            print("mismatch", v)
            print(format_face_graph(g))
        elif v[0]:
            tight += 1
            if cfg.reduce and not verify_certificate(g, reduce_to_K3(g)):
                bad_certs += 1
                print("bad certificate")
                print(format_face_graph(g))
        if seen == cfg.count:
            break
    print(f"graphs {seen} tight {tight} mismatches {mismatches} bad-certificates {bad_certs} "
          f"seconds {time.perf_counter() - t0:.1f}")
    return int(bool(mismatches or bad_certs))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-vertices", type=int, default=Config.max_vertices)
    ap.add_argument("--max-holes", type=int, default=Config.max_holes)
    ap.add_argument("--count", type=int, default=Config.count)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--no-reduce", dest="reduce", action="store_false")
    raise SystemExit(run(Config(**vars(ap.parse_args()))))
