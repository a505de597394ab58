"""Seeded search for the ``fig9_like`` fixture.

Looks through W-components of random near-triangulations for one where
every interior vertex has even degree, the checker finds a witness, and yet
no vertex, edge or face has a neighbour set inducing an odd hole.  The
smallest hit is printed as a Python literal ready to paste into
``generator.py``.

    python tools/find_fig9_like.py --seeds 4000
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from neighbor_shortcut import kernels, neighbor_set_is_odd_hole, shortcut_finds_hole  # noqa: E402

from planar_perfect.checker import check_component, is_perfect  # noqa: E402
from planar_perfect.decomposer import w_components  # noqa: E402
from planar_perfect.generator import GenSpec, random_near_triangulation  # noqa: E402
from planar_perfect.graph_core import build_plane_graph  # noqa: E402


def search(seeds: int):
    best = None
    for s in range(seeds):
        g = random_near_triangulation(GenSpec("random", 6 + s % 15, s))
        for comp in w_components(g):
            h = comp.graph
            if h.n < 6 or (best is not None and h.n >= best[0].n):
                continue
            if any(h.degree(v) % 2 for v in range(h.n) if v not in h.outer_vertices):
                continue
            if check_component(comp) is None:
                continue
            if any(neighbor_set_is_odd_hole(h, k) for k in kernels(h)):
                continue
            fresh = build_plane_graph(h.n, h.rotation, h.outer_face)
            if is_perfect(fresh).perfect or shortcut_finds_hole(fresh):
                continue
            best = (fresh, s)
    return best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, default=4000)
    args = ap.parse_args()
    found = search(args.seeds)
    if found is None:
        sys.exit("no instance found")
    g, seed = found
    print(f"# seed {seed}, n={g.n}, m={g.m}")
    print(json.dumps({"rotation": [list(r) for r in g.rotation], "outer_face": list(g.outer_face)}))


if __name__ == "__main__":
    main()
