"""The tempting shortcut the checker must not take.

Instead of walking the exterior boundary of N[X], it asks whether the open
neighbour set N(X) minus X itself induces an odd hole.  Used only by tests
and by ``tools/find_fig9_like.py`` to show the two answers can differ.
"""

from __future__ import annotations

from planar_perfect.decomposer import w_components
from planar_perfect.graph_core import PlaneGraph


def neighbor_set_is_odd_hole(g: PlaneGraph, kernel: tuple[int, ...]) -> bool:
    adj = g.adjacency
    ks = set(kernel)
    nb = set().union(*(adj[k] for k in kernel)) - ks
    if len(nb) < 5 or len(nb) % 2 == 0:
        return False
    if any(len(adj[v] & nb) != 2 for v in nb):
        return False
    # 2-regular: odd hole iff connected
    start = next(iter(nb))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v] & nb:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(nb)


def kernels(g: PlaneGraph) -> list[tuple[int, ...]]:
    """Every vertex, edge and inner triangular face of ``g``."""
    out: list[tuple[int, ...]] = [(v,) for v in range(g.n)]
    out += g.edges()
    out += sorted(tuple(sorted(f.vertices)) for f in g.faces if not f.is_outer and len(f) == 3)
    return out


def shortcut_finds_hole(g: PlaneGraph) -> bool:
    """True if the shortcut flags some kernel of some W-component of ``g``."""
    for comp in w_components(g):
        h = comp.graph
        if any(neighbor_set_is_odd_hole(h, k) for k in kernels(h)):
            return True
    return False
