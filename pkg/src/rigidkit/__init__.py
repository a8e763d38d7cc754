"""Combinatorial rigidity tools for block-and-hole graphs with a single block."""
from .graph import Multigraph, SimpleGraph, freedom, induced_subgraph, canonical_hash
from .facegraph import FaceGraph, FaceGraphError, parse_face_graph, format_face_graph, classify_edge
from .construct import discus, discus_and_hole, looped_2sigma, looped_3sigma_minus, block_and_hole, BlockSpec
from .pebble import pebble_game, verify_orientation
from .oracle import check_36, check_30, check_kl
from .numeric import euclidean_rigidity_rank, is_minimally_3_rigid_numeric, lp_independence_check
from .reduction import reduce_to_K3, replay, verify_certificate, vertex_split

__all__ = [
    "Multigraph", "SimpleGraph", "freedom", "induced_subgraph", "canonical_hash",
    "FaceGraph", "FaceGraphError", "parse_face_graph", "format_face_graph", "classify_edge",
    "discus", "discus_and_hole", "looped_2sigma", "looped_3sigma_minus", "block_and_hole", "BlockSpec",
    "pebble_game", "verify_orientation", "check_36", "check_30", "check_kl",
    "euclidean_rigidity_rank", "is_minimally_3_rigid_numeric", "lp_independence_check",
    "reduce_to_K3", "replay", "verify_certificate", "vertex_split",
]
