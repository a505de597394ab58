"""Straight-line grid drawings and exterior boundary walks.

Coordinates come from a Schnyder wood built on a canonical ordering; every
vertex gets the vertex-count barycentric coordinates, which place the drawing
on the ``(n-2) x (n-2)`` grid.  All geometric predicates are exact integer
cross products.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Sequence

import numpy as np

from .graph_core import GraphError, PlaneGraph, VertexSet, is_triangulation


class NotATriangulation(GraphError):
    pass


class TooSmall(GraphError):
    pass


class Disconnected(GraphError):
    pass


Point = tuple[int, int]


@dataclass(frozen=True)
class GridEmbedding:
    coords: tuple[Point, ...]

    def __getitem__(self, v: int) -> Point:
        return self.coords[v]

    def __len__(self) -> int:
        return len(self.coords)

    def restrict(self, vertices: Sequence[int]) -> "GridEmbedding":
        return GridEmbedding(tuple(self.coords[v] for v in vertices))


@dataclass(frozen=True)
class SlopeOrderedAdjacency:
    lists: tuple[tuple[int, ...], ...]

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self.lists[v]


@dataclass(frozen=True)
class BoundaryCycle:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def is_simple(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


# ---------------------------------------------------------------------------
# Exact predicates
# ---------------------------------------------------------------------------


def cross(ax: int, ay: int, bx: int, by: int) -> int:
    return ax * by - ay * bx


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the turn p -> q -> r (positive = counter-clockwise)."""
    c = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (c > 0) - (c < 0)


def _half(dx: int, dy: int) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2pi)
    return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1


def _angle_cmp(a: Point, b: Point) -> int:
    """Counter-clockwise angle comparison of direction vectors from +x."""
    ha, hb = _half(*a), _half(*b)
    if ha != hb:
        return -1 if ha < hb else 1
    c = cross(a[0], a[1], b[0], b[1])
    return -1 if c > 0 else (1 if c < 0 else 0)


def clockwise_order(coords: Sequence[Point], v: int, nbrs: Iterable[int]) -> list[int]:
    """Neighbours of ``v`` sorted clockwise, starting from the one of largest angle."""
    x0, y0 = coords[v]
    key = cmp_to_key(lambda a, b: _angle_cmp((coords[a][0] - x0, coords[a][1] - y0),
                                             (coords[b][0] - x0, coords[b][1] - y0)))
    return sorted(nbrs, key=key, reverse=True)


def _slope_cmp(a: Point, b: Point) -> int:
    """-1 if direction ``a`` has the larger slope (sorts first).

    Vertical directions count as slope +inf.  Equal slopes can only come from
    opposite directions, which are ordered upward / rightward first.
    """
    va, vb = a[0] == 0, b[0] == 0
    if va or vb:
        if va and vb:
            return (a[1] < 0) - (b[1] < 0)
        return -1 if va else 1
    num = a[1] * b[0] - b[1] * a[0]  # slope_a - slope_b, times dx_a * dx_b
    s = (num > 0) - (num < 0)
    if (a[0] > 0) != (b[0] > 0):
        s = -s
    if s:
        return -s
    return (a[0] < 0) - (b[0] < 0)


def steepest_neighbor(coords: Sequence[Point], v: int, nbrs: Iterable[int]) -> int:
    x0, y0 = coords[v]
    best = None
    bd = None
    for w in nbrs:
        d = (coords[w][0] - x0, coords[w][1] - y0)
        if best is None or _slope_cmp(d, bd) < 0:
            best, bd = w, d
    if best is None:
        raise TooSmall(f"vertex {v} has no neighbours")
    return best


def sort_by_slope(g: PlaneGraph, e: GridEmbedding) -> SlopeOrderedAdjacency:
    """Neighbour lists in descending order of edge slope."""
    lists = []
    for v in range(g.n):
        x0, y0 = e[v]
        key = cmp_to_key(lambda a, b: _slope_cmp((e[a][0] - x0, e[a][1] - y0),
                                                 (e[b][0] - x0, e[b][1] - y0)))
        lists.append(tuple(sorted(g.rotation[v], key=key)))
    return SlopeOrderedAdjacency(tuple(lists))


# ---------------------------------------------------------------------------
# Schnyder drawing
# ---------------------------------------------------------------------------


def _canonical_order(g: PlaneGraph, v1: int, v2: int, vn: int) -> list[int]:
    """Vertices in a canonical ordering with ``v1, v2`` first and ``vn`` last.

    Built in reverse by peeling a chord-free contour vertex at each step.
    """
    n = g.n
    rot = g.rotation
    removed = bytearray(n)
    on_contour = bytearray(n)
    cnt = [0] * n  # neighbours on the current contour
    for v in (v1, v2, vn):
        on_contour[v] = 1
        cnt[v] = 2
    stack = [vn]
    order = []
    base = (v1, v2)
    for _ in range(n - 2):
        while True:
            v = stack.pop()
            if not removed[v] and on_contour[v] and cnt[v] == 2 and v not in base:
                break
        removed[v] = 1
        on_contour[v] = 0
        order.append(v)
        fresh = []
        for w in rot[v]:
            if removed[w]:
                continue
            if on_contour[w]:
                cnt[w] -= 1
                if cnt[w] == 2:
                    stack.append(w)
            else:
                fresh.append(w)
        for w in fresh:
            on_contour[w] = 1
        new = set(fresh)
        for w in fresh:
            c = 0
            for z in rot[w]:
                if removed[z] or not on_contour[z]:
                    continue
                c += 1
                if z not in new:
                    cnt[z] += 1
            cnt[w] = c
        for w in fresh:
            if cnt[w] == 2:
                stack.append(w)
    order.extend((v2, v1))
    order.reverse()
    return order


def schnyder_embed(g: PlaneGraph) -> GridEmbedding:
    """Planar straight-line drawing of a triangulation on the integer grid.

    The result respects the clockwise rotations of ``g`` exactly (inner
    faces counter-clockwise) and lies in ``[0, n-2]^2``.
    """
    if not is_triangulation(g):
        raise NotATriangulation("schnyder_embed needs a triangulation (all faces of length 3)")
    n = g.n
    if n == 3:
        a, b, c = g.outer_face
        coords = [None] * 3
        coords[a], coords[b], coords[c] = (0, 0), (0, 1), (1, 0)
        return GridEmbedding(tuple(coords))
    # outer face is traced clockwise: bottom-left, top, bottom-right
    a1, a3, a2 = g.outer_face
    order = _canonical_order(g, a1, a2, a3)
    rank = [0] * n
    for i, v in enumerate(order):
        rank[v] = i
    p1 = [-1] * n
    p2 = [-1] * n
    p3 = [-1] * n
    for v in order[2:]:
        r = g.rotation[v]
        k = len(r)
        if v == a3:
            i = g.position[v][a2]
            run = [r[(i + j) % k] for j in range(k)]
        else:
            lower = [rank[w] < rank[v] for w in r]
            start = next(i for i in range(k) if lower[i] and not lower[i - 1])
            run = []
            j = start
            while lower[j % k]:
                run.append(r[j % k])
                j += 1
        # clockwise run goes right-to-left along the contour
        if v != a3:
            p1[v] = run[-1]
            p2[v] = run[0]
        for w in run[1:-1]:
            p3[w] = v

    inner = [v for v in order if v not in (a1, a2, a3)]
    t1 = [0] * n
    t2 = [0] * n
    for v in inner:
        t1[v] = t2[v] = 1
    for v in reversed(inner):
        if p1[v] != a1:
            t1[p1[v]] += t1[v]
        if p2[v] != a2:
            t2[p2[v]] += t2[v]
    # path sums; P1, P2 head to lower rank, P3 to higher rank
    s21 = [0] * n
    s12 = [0] * n
    d1 = [0] * n
    for v in inner:
        q = p2[v]
        s21[v] = t1[v] + (s21[q] if q != a2 else 0)
        q = p1[v]
        s12[v] = t2[v] + (s12[q] if q != a1 else 0)
        d1[v] = 1 + (d1[q] if q != a1 else 0)
    s31 = [0] * n
    s32 = [0] * n
    d3 = [0] * n
    for v in reversed(inner):
        q = p3[v]
        top = q == a3
        s31[v] = t1[v] + (0 if top else s31[q])
        s32[v] = t2[v] + (0 if top else s32[q])
        d3[v] = 1 + (0 if top else d3[q])

    coords: list[Point] = [(0, 0)] * n
    coords[a1] = (n - 2, 1)
    coords[a2] = (0, n - 2)
    coords[a3] = (1, 0)
    for v in inner:
        r1 = 2 + s21[v] + s31[v] - t1[v]
        r2 = 2 + s32[v] + s12[v] - t2[v]
        coords[v] = (r1 - (d3[v] + 1), r2 - (d1[v] + 1))

    # inner faces must come out counter-clockwise; otherwise mirror
    f = next(f for f in g.faces if not f.is_outer)
    p, q, r = (coords[v] for v in f.vertices)
    if orient(p, q, r) < 0:
        coords = [(y, x) for x, y in coords]
    return GridEmbedding(tuple(coords))


# ---------------------------------------------------------------------------
# Verification of drawings
# ---------------------------------------------------------------------------


def respects_rotation(g: PlaneGraph, e: GridEmbedding) -> bool:
    """True iff the clockwise angular order at every vertex matches ``g``."""
    for v in range(g.n):
        r = list(g.rotation[v])
        if len(r) < 3:
            continue
        cw = clockwise_order(e.coords, v, r)
        i = cw.index(r[0])
        if cw[i:] + cw[:i] != r:
            return False
    return True


def find_crossings(g: PlaneGraph, e: GridEmbedding, limit: int | None = None) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Pairs of edges that meet other than at a shared endpoint.

    Disjoint edges are tested as closed segments; edges with a common
    endpoint are improper only when they overlap collinearly.  Exact int64
    arithmetic, vectorised over all pairs.
    """
    edges = np.array(g.edges(), dtype=np.int64).reshape(-1, 2)
    m = len(edges)
    if m < 2:
        return []
    P = np.array(e.coords, dtype=np.int64)
    A, B = P[edges[:, 0]], P[edges[:, 1]]
    bad: list[tuple[tuple[int, int], tuple[int, int]]] = []
    chunk = max(1, 2_000_000 // m)
    for s in range(0, m, chunk):
        i = np.arange(s, min(m, s + chunk))
        I, J = np.meshgrid(i, np.arange(m), indexing="ij")
        mask = J > I
        I, J = I[mask], J[mask]
        a, b, c, d = A[I], B[I], A[J], B[J]

        def orient_v(p, q, r):
            v = (q[:, 0] - p[:, 0]) * (r[:, 1] - p[:, 1]) - (q[:, 1] - p[:, 1]) * (r[:, 0] - p[:, 0])
            return np.sign(v)

        def on_seg(p, q, r):
            # r collinear with p-q and within its bounding box
            return ((np.minimum(p[:, 0], q[:, 0]) <= r[:, 0]) & (r[:, 0] <= np.maximum(p[:, 0], q[:, 0]))
                    & (np.minimum(p[:, 1], q[:, 1]) <= r[:, 1]) & (r[:, 1] <= np.maximum(p[:, 1], q[:, 1])))

        o1, o2 = orient_v(a, b, c), orient_v(a, b, d)
        o3, o4 = orient_v(c, d, a), orient_v(c, d, b)
        hit = (o1 * o2 < 0) & (o3 * o4 < 0)
        hit |= (o1 == 0) & on_seg(a, b, c)
        hit |= (o2 == 0) & on_seg(a, b, d)
        hit |= (o3 == 0) & on_seg(c, d, a)
        hit |= (o4 == 0) & on_seg(c, d, b)

        eI, eJ = edges[I], edges[J]
        first = (eI[:, 0] == eJ[:, 0]) | (eI[:, 0] == eJ[:, 1])
        share = first | (eI[:, 1] == eJ[:, 0]) | (eI[:, 1] == eJ[:, 1])
        sv = np.where(first, eI[:, 0], eI[:, 1])
        pv = np.where(first, eI[:, 1], eI[:, 0])
        qv = np.where(eJ[:, 0] == sv, eJ[:, 1], eJ[:, 0])
        ps, pp, pq = P[sv], P[pv], P[qv]
        ux, uy = pp[:, 0] - ps[:, 0], pp[:, 1] - ps[:, 1]
        wx, wy = pq[:, 0] - ps[:, 0], pq[:, 1] - ps[:, 1]
        overlap = (ux * wy - uy * wx == 0) & (ux * wx + uy * wy > 0)
        improper = np.where(share, overlap, hit)
        for k in np.nonzero(improper)[0]:
            bad.append((tuple(int(x) for x in eI[k]), tuple(int(x) for x in eJ[k])))
            if limit is not None and len(bad) >= limit:
                return bad
    return bad


def check_grid_embedding(g: PlaneGraph, e: GridEmbedding, bound: int | None = None) -> list[str]:
    """Problems with ``e`` as a plane drawing of ``g`` (empty list if none)."""
    problems = []
    if len(e) != g.n:
        return [f"{len(e)} coordinates for {g.n} vertices"]
    bound = g.n if bound is None else bound
    for v, (x, y) in enumerate(e.coords):
        if not (0 <= x <= bound and 0 <= y <= bound):
            problems.append(f"vertex {v} at {(x, y)} outside [0, {bound}]^2")
    if len(set(e.coords)) != g.n:
        problems.append("two vertices share a grid point")
        return problems
    for a, b in find_crossings(g, e, limit=5):
        problems.append(f"edges {a} and {b} cross")
    return problems


# ---------------------------------------------------------------------------
# Exterior boundary walks
# ---------------------------------------------------------------------------


def walk_boundary(rotation, position, coords, inside: bytearray, members: Sequence[int]) -> list[int]:
    """Exterior face of the subgraph induced by ``members``.

    Starts at the leftmost member (ties: lower, then smaller id), leaves it
    along the steepest kept edge and traces the face on the left using the
    restricted rotations.  Works directly on the parent's arrays so no
    subgraph object is built.
    """
    l = min(members, key=lambda v: (coords[v][0], coords[v][1], v))
    lx, ly = coords[l]
    w = -1
    bd = None
    for z in rotation[l]:
        if inside[z]:
            d = (coords[z][0] - lx, coords[z][1] - ly)
            if w < 0 or _slope_cmp(d, bd) < 0:
                w, bd = z, d
    if w < 0:
        return [l]
    walk = [l]
    prev, cur = l, w
    guard = 2 * sum(len(rotation[v]) for v in members) + 2
    while guard:
        guard -= 1
        r = rotation[cur]
        k = len(r)
        i = position[cur][prev]
        nxt = r[(i + 1) % k]
        while not inside[nxt]:
            i += 1
            nxt = r[(i + 1) % k]
        if cur == l and nxt == w:
            return walk
        walk.append(cur)
        prev, cur = cur, nxt
    raise RuntimeError("boundary walk did not close")


def exterior_boundary_walk(sub: PlaneGraph, e: GridEmbedding) -> BoundaryCycle:
    """Exterior boundary of ``sub`` under the drawing ``e`` (indexed like ``sub``).

    Vertices are reported in ``sub``'s parent ids.
    """
    if sub.n < 3:
        raise TooSmall(f"need at least 3 vertices, got {sub.n}")
    if not sub.is_connected():
        raise Disconnected("boundary walk needs a connected subgraph")
    inside = bytearray(b"\x01") * sub.n
    walk = walk_boundary(sub.rotation, sub.position, e.coords, inside, range(sub.n))
    return BoundaryCycle(tuple(sub.to_parent(v) for v in walk))


def neighborhood_boundary(g: PlaneGraph, e: GridEmbedding, s: VertexSet) -> BoundaryCycle:
    """Exterior boundary of ``g[s]`` in ``g``'s own ids."""
    walk = walk_boundary(g.rotation, g.position, e.coords, s.indicator, s.members)
    return BoundaryCycle(tuple(walk))


# ---------------------------------------------------------------------------
# Drawings of arbitrary inputs
# ---------------------------------------------------------------------------


def plane_drawing(g: PlaneGraph) -> GridEmbedding:
    """A straight-line grid drawing for display.

    Triangulations are drawn directly and near-triangulations with a simple
    exterior cycle through an apex vertex, so rotations and the exterior are
    kept.  Anything else (cut vertices) falls back to networkx's planar
    layout of the same rotation system, which may pick another exterior.
    """
    from .decomposer import apex_augment

    if is_triangulation(g) and g.n >= 3:
        return schnyder_embed(g)
    outer = g.outer_face
    if len(outer) >= 3 and len(set(outer)) == len(outer) and all(len(f) == 3 for f in g.faces if not f.is_outer):
        return GridEmbedding(schnyder_embed(apex_augment(g)).coords[: g.n])
    import networkx as nx

    emb = nx.PlanarEmbedding()
    emb.add_nodes_from(range(g.n))
    for v, r in enumerate(g.rotation):
        for i, w in enumerate(r):
            emb.add_half_edge(v, w, ccw=r[i - 1] if i else None)
    pos = nx.combinatorial_embedding_to_pos(emb)
    return GridEmbedding(tuple((int(pos[v][0]), int(pos[v][1])) for v in range(g.n)))
