"""Named fixtures and seeded random plane (near-)triangulations."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph_core import PlaneGraph, build_plane_graph, face_walk_from, from_drawing


class UnknownFixture(KeyError):
    pass


@dataclass(frozen=True)
class GenSpec:
    kind: str = "random"
    n: int = 10
    seed: int = 0
    flips: int | None = None


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------


def _k4() -> PlaneGraph:
    return build_plane_graph(4, [[1, 3, 2], [2, 3, 0], [0, 3, 1], [2, 0, 1]], [0, 1, 2])


def _wheel(k: int) -> PlaneGraph:
    # rim 0..k-1 counter-clockwise, hub k
    import math

    scale = 1000
    coords = [(round(scale * math.cos(2 * math.pi * i / k)), round(scale * math.sin(2 * math.pi * i / k)))
              for i in range(k)]
    coords.append((0, 0))
    edges = [(i, (i + 1) % k) for i in range(k)] + [(i, k) for i in range(k)]
    return from_drawing(coords, edges)


def _octahedron() -> PlaneGraph:
    coords = [(0, 0), (12, 0), (6, 10), (6, 2), (8, 5), (4, 5)]
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
             (0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)]
    return from_drawing(coords, edges)


def _stacked_k4() -> PlaneGraph:
    # K4 with outer face {0, 1, 2} and centre 3; vertex 4 sits in face {1, 2, 3}
    coords = [(0, 0), (6, 12), (12, 0), (6, 4), (8, 5)]
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3), (4, 1), (4, 2), (4, 3)]
    return from_drawing(coords, edges)


def _pentagon_fan() -> PlaneGraph:
    coords = [(0, 10), (10, 3), (6, -8), (-6, -8), (-10, 3)]
    edges = [(i, (i + 1) % 5) for i in range(5)] + [(0, 2), (0, 3)]
    return from_drawing(coords, edges)


def triforce(rim: int, arcs: tuple[int, int, int]) -> PlaneGraph:
    """Rim ``c0..c{rim-1}`` around an inner triangle ``x, y, z``.

    ``arcs`` gives how many rim edges each of x, y, z spans: x sees
    ``c0..c{arcs[0]}``, y continues from there and z closes the rim back to
    ``c0``.  Ids: rim vertices ``0..rim-1``, then x, y, z.
    """
    import math

    if sum(arcs) != rim:
        raise ValueError("arcs must add up to the rim length")
    scale = 1000
    coords = [(round(scale * math.cos(-2 * math.pi * i / rim)), round(scale * math.sin(-2 * math.pi * i / rim)))
              for i in range(rim)]
    x, y, z = rim, rim + 1, rim + 2
    edges = [(i, (i + 1) % rim) for i in range(rim)] + [(x, y), (y, z), (z, x)]
    start = 0
    mids = []
    for hub, span in zip((x, y, z), arcs):
        span_vs = [(start + j) % rim for j in range(span + 1)]
        edges += [(hub, c) for c in span_vs]
        mids.append(span_vs)
        start += span
    # put each hub near the middle of its arc, pulled towards the centre
    for span_vs in mids:
        mx = sum(coords[c][0] for c in span_vs) / len(span_vs)
        my = sum(coords[c][1] for c in span_vs) / len(span_vs)
        coords.append((round(0.45 * mx), round(0.45 * my)))
    return from_drawing(coords, edges)


# Even W-triangulation found by ``tools/find_fig9_like.py`` (seed 536) and
# frozen here: no kernel's neighbour set induces an odd hole, yet the walked
# boundary around the edge (0, 1) is one.
_FIG9_LIKE: dict | None = {
    "rotation": [[1, 7, 4, 6, 5, 2], [2, 9, 8, 3, 7, 0], [0, 5, 9, 1], [6, 1, 8, 5], [7, 6, 0],
                 [0, 6, 3, 8, 9, 2], [4, 3, 5, 0], [1, 4, 0], [3, 1, 9, 5], [2, 5, 8, 1]],
    "outer_face": [6, 3, 1, 7, 4],
}


def _fig9_like() -> PlaneGraph:
    if _FIG9_LIKE is None:
        raise UnknownFixture("fig9_like")
    return build_plane_graph(len(_FIG9_LIKE["rotation"]), _FIG9_LIKE["rotation"], _FIG9_LIKE["outer_face"])


FIXTURES = {
    "k4": _k4,
    "w5": lambda: _wheel(5),
    "octahedron": _octahedron,
    "stackedK4": _stacked_k4,
    "pentagon_fan": _pentagon_fan,
    "triforce5": lambda: triforce(5, (1, 1, 3)),
    "triforce7": lambda: triforce(7, (1, 3, 3)),
    "triforce9": lambda: triforce(9, (3, 3, 3)),
    "fig9_like": _fig9_like,
}


def named_fixture(name: str) -> PlaneGraph:
    try:
        make = FIXTURES[name]
    except KeyError:
        raise UnknownFixture(name) from None
    return make()


# ---------------------------------------------------------------------------
# Random triangulations
# ---------------------------------------------------------------------------


class _Builder:
    """Mutable rotation system of a triangulation with outer face (0, 1, 2)."""

    def __init__(self):
        self.rot: list[list[int]] = [[1, 2], [2, 0], [0, 1]]
        self.adj: list[set[int]] = [{1, 2}, {0, 2}, {0, 1}]
        self.inner: list[tuple[int, int, int]] = [(0, 2, 1)]

    def _insert_after(self, v: int, after: int, w: int) -> None:
        r = self.rot[v]
        r.insert(r.index(after) + 1, w)
        self.adj[v].add(w)

    def split_face(self, idx: int) -> None:
        a, b, c = self.inner[idx]
        v = len(self.rot)
        self.rot.append([a, c, b])
        self.adj.append({a, b, c})
        self._insert_after(b, a, v)
        self._insert_after(c, b, v)
        self._insert_after(a, c, v)
        self.inner[idx] = (a, b, v)
        self.inner.append((b, c, v))
        self.inner.append((c, a, v))

    def succ(self, v: int, w: int) -> int:
        r = self.rot[v]
        return r[(r.index(w) + 1) % len(r)]

    def flip(self, a: int, b: int) -> bool:
        """Replace edge ab by the other diagonal of its two faces."""
        c = self.succ(b, a)  # face (a, b, c)
        d = self.succ(a, b)  # face (b, a, d)
        if c == d or d in self.adj[c] or len(self.rot[a]) <= 3 or len(self.rot[b]) <= 3:
            return False
        if {a, b, c} == {0, 1, 2} or {a, b, d} == {0, 1, 2}:
            return False
        self.rot[a].remove(b)
        self.rot[b].remove(a)
        self.adj[a].discard(b)
        self.adj[b].discard(a)
        self._insert_after(d, a, c)
        self._insert_after(c, b, d)
        return True


def random_triangulation(spec: GenSpec) -> PlaneGraph:
    """Seeded triangulation: random face splits, then random edge flips.

    Splitting alone only gives stacked triangulations; the flips (``spec.flips``,
    default a seeded count between n and 3n) break most separating triangles.
    """
    if spec.n < 3:
        raise ValueError("a triangulation needs at least 3 vertices")
    rng = random.Random(spec.seed)
    t = _Builder()
    for _ in range(spec.n - 3):
        t.split_face(rng.randrange(len(t.inner)))
    flips = spec.flips if spec.flips is not None else rng.randint(spec.n, 3 * spec.n)
    if spec.n > 4:
        # edges drawn uniformly; a flipped edge is replaced in place by its new diagonal
        edges = [(a, b) for a in range(spec.n) for b in t.rot[a] if a < b]
        for _ in range(flips):
            i = rng.randrange(len(edges))
            a, b = edges[i]
            c, d = t.succ(b, a), t.succ(a, b)
            if t.flip(a, b):
                edges[i] = (min(c, d), max(c, d))
    return build_plane_graph(spec.n, t.rot, [0, 1, 2])


def random_near_triangulation(spec: GenSpec) -> PlaneGraph:
    """Seeded near-triangulation with ``spec.n`` vertices.

    A triangulation on ``n + k`` vertices loses ``k`` vertices, each picked
    among the exterior vertices whose removal keeps the graph connected (the
    first one may be any vertex).  ``k`` is drawn from the seed and may be 0,
    so cut vertices, chords on the exterior face and plain triangulations
    all show up.
    """
    rng = random.Random(spec.seed ^ 0x9E3779B97F4A7C15)
    k = rng.choice([0, 1, 1, 2, 3, 4, spec.n // 2])
    if spec.n + k < 4:
        k = 4 - spec.n
    base = random_triangulation(GenSpec("random", spec.n + k, spec.seed, spec.flips))
    rot = [list(r) for r in base.rotation]
    outer = list(base.outer_face)
    alive = set(range(base.n))
    for step in range(k):
        candidates = sorted(alive) if step == 0 else sorted(set(outer))
        rng.shuffle(candidates)
        for v in candidates:
            if _removal_keeps_connected(rot, alive, v):
                break
        else:
            break
        outer = _remove_vertex(rot, alive, outer, v)
    keep = sorted(alive)
    local = {v: i for i, v in enumerate(keep)}
    new_rot = [[local[w] for w in rot[v]] for v in keep]
    return build_plane_graph(len(keep), new_rot, [local[v] for v in outer])


def _removal_keeps_connected(rot, alive, v) -> bool:
    rest = [u for u in alive if u != v]
    if len(rest) <= 1:
        return len(rest) == 1
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        u = stack.pop()
        for w in rot[u]:
            if w != v and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(rest)


def _remove_vertex(rot, alive, outer, v) -> list[int]:
    # every face around v merges into one, which becomes the exterior
    x = next((w for w in rot[v] if len(rot[w]) > 1), rot[v][0])
    rx = rot[x]
    y = rx[(rx.index(v) + 1) % len(rx)]
    for w in rot[v]:
        rot[w].remove(v)
    rot[v] = []
    alive.discard(v)
    if y == v:
        return [x]
    tmp = PlaneGraph(tuple(tuple(r) for r in rot), ())
    return face_walk_from(tmp, x, y)
