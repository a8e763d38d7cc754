"""Command-line front end.

Exit status: 0 minimally 3-rigid / success, 1 not (or failed verification),
2 input error, 3 routes that should agree disagree (an implementation bug).
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .construct import discus_and_hole, looped_2sigma, looped_3sigma_minus, origami_to_block_and_hole, parse_surface
from .facegraph import (FaceGraph, FaceGraphError, canonical_cycle, enumerate_critical_separating_cycles,
                        format_face_graph, parse_face_graph)
from .graph import SimpleGraph, parse_multigraph
from .numeric import euclidean_rigidity_rank, is_minimally_3_rigid_numeric, lp_independence_check, lp_rigidity_evidence
from .oracle import check_36, check_kl
from .pebble import format_orientation, parse_orientation, pebble_game, verify_orientation

OK, NOT, INPUT_ERROR, VIOLATION = 0, 1, 2, 3
ROUTES = {"pebble2": "pebble-2sigma", "pebble3": "pebble-3sigma", "brute": "brute-36", "numeric": "numeric"}


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _entries(text: str) -> list[str]:
    return [b for b in text.split("\n\n") if b.strip() and any(
        ln.strip() and not ln.lstrip().startswith("#") for ln in b.splitlines())]


def _face_graph(text: str) -> FaceGraph:
    try:
        return parse_face_graph(text)
    except FaceGraphError as exc:
        raise InputError(str(exc)) from None


def _emit(args, record: dict, lines: list[str]):
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        for ln in lines:
            print(ln)


# ---------------------------------------------------------------------------
# check

def check_graph(G: FaceGraph, route: str, seed: int = 0) -> dict:
    """Run the requested routes; returns a record with per-route verdicts."""
    names = list(ROUTES) if route == "all" else [route]
    single = G.m_blocks == 1
    if not single and any(r.startswith("pebble") for r in names):
        if route != "all":
            raise InputError(f"the pebble routes need exactly one B face (found {G.m_blocks}); "
                             "use --route=brute or --route=numeric")
        names = [r for r in names if not r.startswith("pebble")]
    dagger = discus_and_hole(G)
    out: dict = {"vertices": G.n, "blocks": G.m_blocks, "holes": G.n_holes, "routes": {}}
    for r in names:
        t0 = time.perf_counter()
        if r == "pebble2":
            res = pebble_game(looped_2sigma(G))
            out["routes"][ROUTES[r]] = {"tight": res.tight, "orientation": res.orientation}
        elif r == "pebble3":
            res = pebble_game(looped_3sigma_minus(G))
            out["routes"][ROUTES[r]] = {"tight": res.tight, "orientation": res.orientation}
        elif r == "brute":
            rep = check_36(dagger)
            out["routes"][ROUTES[r]] = {"tight": rep.tight,
                                        "witness": sorted(dagger.label(v) for v in rep.witness or ())}
        else:
            rep = euclidean_rigidity_rank(dagger, seed=seed)
            out["routes"][ROUTES[r]] = {"tight": rep.rigid and rep.independent, "report": rep.line()}
        out["routes"][ROUTES[r]]["seconds"] = round(time.perf_counter() - t0, 6)
    flags = {v["tight"] for v in out["routes"].values()}
    out["agree"] = len(flags) == 1
    out["minimally_rigid"] = flags == {True}
    return out


def _check_one(args_tuple):
    text, route, seed = args_tuple
    try:
        G = _face_graph(text)
        return check_graph(G, route, seed), None
    except InputError as exc:
        return None, str(exc)


def cmd_check(args) -> int:
    entries = _entries(_read(args.file))
    if not entries:
        raise InputError("no face graph in input")
    jobs = [(e, args.route, args.seed) for e in entries]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_check_one, jobs))
    else:
        results = [_check_one(j) for j in jobs]
    status = OK
    for idx, (rec, err) in enumerate(results):
        if err is not None:
            _emit(args, {"entry": idx, "error": err}, [f"entry {idx} input-error {err}"])
            status = max(status, INPUT_ERROR)
            continue
        lines = []
        for name, v in rec["routes"].items():
            extra = f" {v['report']}" if "report" in v else ""
            lines.append(f"entry {idx} route {name} tight {str(v['tight']).lower()}{extra}")
        verdict = ("theorem-violation" if not rec["agree"]
                   else "minimally-rigid" if rec["minimally_rigid"] else "not-minimally-rigid")
        lines.append(f"entry {idx} verdict {verdict}")
        if args.cert:
            _write_orientations(args.cert, rec, idx if len(entries) > 1 else None)
        record = {"entry": idx, **{k: v for k, v in rec.items()}, "verdict": verdict}
        for v in record["routes"].values():
            v.pop("orientation", None)
        _emit(args, record, lines)
        status = max(status, VIOLATION if not rec["agree"] else OK if rec["minimally_rigid"] else NOT)
    return status


def _write_orientations(path: str, rec: dict, idx):
    suffix = "" if idx is None else f".{idx}"
    for name, tag in (("pebble-2sigma", ""), ("pebble-3sigma", ".3sigma")):
        v = rec["routes"].get(name)
        if v and v.get("orientation") is not None and v["tight"]:
            Path(path + tag + suffix).write_text(format_orientation(v["orientation"]))


# ---------------------------------------------------------------------------
# reduce / verify

def cmd_reduce(args) -> int:
    from .reduction import NotTightError, ReductionStuck, reduce_to_K3, verify_certificate
    G = _face_graph(_read(args.file))
    try:
        cert = reduce_to_K3(G, tt_method=args.tt_method)
    except NotTightError as exc:
        _emit(args, {"reduced": False, "witness": sorted(exc.witness), "witness_freedom": exc.witness_freedom},
              [f"not-tight witness {' '.join(map(str, sorted(exc.witness)))} freedom {exc.witness_freedom}"])
        return NOT
    except ReductionStuck as exc:
        _emit(args, {"reduced": False, "error": str(exc)}, [f"theorem-violation {exc}"])
        return VIOLATION
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.cert:
        Path(args.cert).write_text(cert.format())
    record = {"reduced": True, "moves": len(cert), "certificate": cert.format().splitlines()}
    lines = [f"moves {len(cert)}"] + ([] if args.cert else cert.format().splitlines())
    status = OK
    if args.replay:
        ok = verify_certificate(G, cert)
        record["replay"] = ok
        lines.append(f"replay {'ok' if ok else 'failed'}")
        status = OK if ok else VIOLATION
    _emit(args, record, lines)
    return status


def cmd_verify(args) -> int:
    from .reduction import parse_certificate, verify_certificate
    G = _face_graph(_read(args.file))
    text = _read(args.cert)
    first = next((ln.split()[0] for ln in text.splitlines() if ln.strip() and not ln.startswith("#")), "")
    try:
        if first == "k3":
            ok = verify_certificate(G, parse_certificate(text))
            kind = "reduction"
        elif first == "orient":
            g = looped_3sigma_minus(G) if args.looped == 3 else looped_2sigma(G)
            o = parse_orientation(text, g.m)
            ok = g.m == 3 * g.n and verify_orientation(g, o, 3)
            kind = f"orientation-{args.looped}sigma"
        else:
            raise InputError("unrecognised certificate")
    except (ValueError, FaceGraphError) as exc:
        raise InputError(str(exc)) from None
    _emit(args, {"certificate": kind, "valid": ok}, [f"{kind} {'valid' if ok else 'invalid'}"])
    return OK if ok else NOT


# ---------------------------------------------------------------------------
# csc

def cmd_csc(args) -> int:
    G = _face_graph(_read(args.file))
    try:
        G.block_face()
        cycles = enumerate_critical_separating_cycles(G, nonfacial_only=args.nonfacial, oracle=args.oracle)
    except FaceGraphError as exc:
        raise InputError(str(exc)) from None
    facial = {canonical_cycle(f.cycle) for f in G.faces}
    rows = [{"cycle": list(c), "facial": c in facial} for c in cycles]
    _emit(args, {"cycles": rows},
          [f"{'facial' if r['facial'] else 'non-facial'} {' '.join(map(str, r['cycle']))}" for r in rows]
          + [f"count {len(rows)}"])
    return OK


# ---------------------------------------------------------------------------
# origami

def cmd_origami(args) -> int:
    try:
        surf = parse_surface(_read(args.file))
        bh, notes = origami_to_block_and_hole(surf, block=args.block)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    g = bh.graph
    rep = euclidean_rigidity_rank(g, seed=args.seed)
    minimal = rep.rigid and rep.independent
    lines = ["# converted face graph", format_face_graph(bh.base).rstrip(),
             f"block-and-hole vertices {g.n} edges {g.m} freedom {3 * g.n - g.m}",
             rep.line()]
    lines += [f"caveat {n}" for n in notes]
    record = {"facegraph": format_face_graph(bh.base), "vertices": g.n, "edges": g.m,
              "rank": rep.rank, "rigid": rep.rigid, "independent": rep.independent, "caveats": notes}
    if bh.base.m_blocks == 1 and args.block == "discus":
        rec = check_graph(bh.base, "all", args.seed)
        record["routes"] = {k: v["tight"] for k, v in rec["routes"].items()}
        lines += [f"route {k} tight {str(v['tight']).lower()}" for k, v in rec["routes"].items()]
        if not rec["agree"]:
            _emit(args, record, lines + ["verdict theorem-violation"])
            return VIOLATION
    lines.append(f"verdict {rep.verdict}")
    _emit(args, record, lines)
    return OK if minimal else NOT


# ---------------------------------------------------------------------------
# gen / oracle / numeric

def cmd_gen(args) -> int:
    from .corpus import CorpusEntry, corpus_stream, classify, tt_free_stream
    try:
        stream = (tt_free_stream(args.vertices, args.seed) if args.tt_free
                  else corpus_stream(args.vertices, args.holes, args.seed))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    parts = []
    for i, g in enumerate(stream):
        if i == args.count:
            break
        e: CorpusEntry = classify(g)
        parts.append(e.header() + "\n" + format_face_graph(g))
        print(f"graph {i} vertices {g.n} class {e.m} {e.n} {'tight' if e.tight else 'not-tight'}")
    text = "\n".join(parts)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return OK


def _graph_input(text: str):
    head = next((ln.split()[0] for ln in text.splitlines()
                 if ln.strip() and not ln.lstrip().startswith("#")), "")
    try:
        if head == "facegraph":
            return discus_and_hole(parse_face_graph(text)), True
        if head == "multigraph":
            return parse_multigraph(text), False
    except ValueError as exc:
        raise InputError(str(exc)) from None
    raise InputError("expected a 'facegraph' or 'multigraph' file")


def cmd_oracle(args) -> int:
    g, from_faces = _graph_input(_read(args.file))
    k, l = (int(x) for x in args.kl.split(","))
    try:
        if (k, l) == (3, 6):
            rep = check_36(g)
        else:
            rep = check_kl(g, k, l, min_edges=0 if l == 0 else 1)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    labels = sorted(g.label(v) for v in rep.witness) if rep.witness else None
    _emit(args, {"k": k, "l": l, "sparse": rep.sparse, "tight": rep.tight, "witness": labels},
          [f"({k},{l}) sparse {str(rep.sparse).lower()} tight {str(rep.tight).lower()}"]
          + ([f"witness {' '.join(map(str, labels))} freedom {rep.witness_freedom}"] if labels else []))
    return OK if rep.tight else NOT


def cmd_numeric(args) -> int:
    g, _ = _graph_input(_read(args.file))
    try:
        g = SimpleGraph(g.n, g.edges, g.labels)
        rep = euclidean_rigidity_rank(g, seeds=args.seeds, seed=args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    record = {"rank": rep.rank, "target": rep.target, "verdict": rep.verdict, "seeds": rep.seeds_used}
    lines = [rep.line()]
    if args.lp is not None:
        ok = lp_independence_check(g, p=args.lp, seed=args.seed)
        record["lp_independent"] = ok
        lines.append(f"lp {args.lp} independent {str(ok).lower()} (numerical evidence)")
    if args.experimental_lp_rigidity:
        ev = lp_rigidity_evidence(g, p=args.lp or 4.0, seed=args.seed)
        record["lp_evidence"] = ev
        lines.append(f"lp-evidence ranks {' '.join(map(str, ev['ranks']))} full {ev['full_rank']} "
                     f"count33 {ev['count_33']} (numerical evidence, no claim)")
    _emit(args, record, lines)
    return OK if rep.rigid and rep.independent else NOT


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rigidkit", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("check", help="decide minimal 3-rigidity of a block-and-hole graph")
    s.add_argument("file")
    s.add_argument("--route", choices=list(ROUTES) + ["all"], default="all")
    s.add_argument("--cert", help="write outdegree-3 orientation certificate(s) here")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("reduce", help="contract the discus-and-hole graph down to K3")
    s.add_argument("file")
    s.add_argument("--cert")
    s.add_argument("--replay", action="store_true")
    s.add_argument("--tt-method", choices=["cycles", "pebble"], default="cycles")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("verify", help="re-check a certificate against its input")
    s.add_argument("file")
    s.add_argument("--cert", required=True)
    s.add_argument("--looped", type=int, choices=[2, 3], default=2)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("csc", help="list critical separating cycles")
    s.add_argument("file")
    s.add_argument("--nonfacial", action="store_true")
    s.add_argument("--oracle", choices=["pebble", "brute"], default="pebble")
    s.set_defaults(func=cmd_csc)

    s = sub.add_parser("origami", help="convert a polyhedral surface and decide rigidity")
    s.add_argument("file")
    s.add_argument("--block", choices=["apex", "prism", "discus"], default="apex")
    s.set_defaults(func=cmd_origami)

    s = sub.add_parser("gen", help="write a seeded corpus archive")
    s.add_argument("--vertices", type=int, required=True)
    s.add_argument("--holes", type=int, default=3)
    s.add_argument("--count", type=int, default=10)
    s.add_argument("--out")
    s.add_argument("--tt-free", action="store_true", help="only graphs without TT edges")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("oracle", help="brute-force (k,l)-sparsity")
    s.add_argument("file")
    s.add_argument("--kl", default="3,6")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("numeric", help="exact rigidity-matrix rank")
    s.add_argument("file")
    s.add_argument("--seeds", type=int, default=3)
    s.add_argument("--lp", type=float)
    s.add_argument("--experimental-lp-rigidity", action="store_true")
    s.set_defaults(func=cmd_numeric)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # allow global flags after the subcommand too
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
