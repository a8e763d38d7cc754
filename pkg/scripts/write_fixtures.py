"""Write the hand-entered fixtures and sample surfaces to data/."""
from __future__ import annotations

import argparse
from pathlib import Path

from rigidkit import fixtures
from rigidkit.facegraph import format_face_graph
from rigidkit.graph import format_multigraph

FACE_GRAPHS = ["tetrahedron", "octahedron", "hexagon_three_quads", "heptagon_four_quads",
               "octagon_five_quads", "hexagon_hexagonal_hole", "hexagon_quad_hole",
               "hexagon_with_chord", "quad_block_pentagon_hole"]
GRAPHS = ["double_banana", "k7"]

SURFACES = {
    # unit cube with the top face removed
    "open_box": """surface 8
v 0 0 0
v 1 0 0
v 1 1 0
v 0 1 0
v 0 0 1
v 1 0 1
v 1 1 1
v 0 1 1
face 0 3 2 1
face 0 1 5 4
face 1 2 6 5
face 2 3 7 6
face 3 0 4 7
hole 4 5 6 7
""",
    # one rigid square panel; its outside is the hole
    "square_sheet": """surface 4
v 0 0 0
v 1 0 0
v 1 1 0
v 0 1 0
face 0 1 2 3
hole 3 2 1 0
""",
    "octahedron": """surface 6
v 1 0 0
v 0 1 0
v -1 0 0
v 0 -1 0
v 0 0 1
v 0 0 -1
face 4 0 1
face 4 1 2
face 4 2 3
face 4 3 0
face 5 1 0
face 5 2 1
face 5 3 2
face 5 0 3
""",
    # a face boundary that revisits vertex 0
    "pinched": """surface 5
v 0 0 0
v 1 0 0
v 1 1 0
v 0 1 0
v 2 2 0
face 0 1 2 0 3 4
hole 4 3 2 1
""",
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name in FACE_GRAPHS:
        (out / f"{name}.fg").write_text(format_face_graph(getattr(fixtures, name)()))
    for name in GRAPHS:
        (out / f"{name}.mg").write_text(format_multigraph(getattr(fixtures, name)()))
    for name, text in SURFACES.items():
        (out / f"{name}.surf").write_text(text)
    print(f"wrote {len(FACE_GRAPHS) + len(GRAPHS) + len(SURFACES)} files to {out}")


if __name__ == "__main__":
    main()
