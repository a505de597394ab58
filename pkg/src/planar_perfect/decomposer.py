"""Splitting a plane near-triangulation into W-components.

Pipeline: blocks (2-connected pieces) -> apex vertex on each block's exterior
-> cut the resulting triangulation along every separating triangle -> drop
the apex again.  Perfectness of the input is equivalent to perfectness of
all components.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .graph_core import (
    GraphError,
    PlaneGraph,
    build_plane_graph,
    face_walk_from,
    validate_near_triangulation,
)


class NotBiconnected(GraphError):
    pass


@dataclass(frozen=True)
class SeparatingTriangle:
    vertices: tuple[int, int, int]


@dataclass(frozen=True)
class WComponent:
    """A W-triangulation cut out of the input.

    ``graph.parent_ids`` (also exposed as :attr:`id_map`) maps component ids
    to ids of the input graph.  ``apex_removed`` tells whether the
    component touched the block's exterior, i.e. had the apex stripped.
    """

    graph: PlaneGraph
    apex_removed: bool

    @property
    def id_map(self) -> tuple[int, ...]:
        return self.graph.parent_ids

    @property
    def parent_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.graph.parent_ids))

    def sort_key(self) -> tuple:
        pv = self.parent_vertices
        return (pv[0], pv)


# ---------------------------------------------------------------------------
# Blocks
# ---------------------------------------------------------------------------


def _restrict(g: PlaneGraph, members: list[int], start: tuple[int, int]) -> PlaneGraph:
    """Induced subgraph on ``members`` whose exterior is the face left of ``start``."""
    local = {v: i for i, v in enumerate(members)}
    rot = [[local[w] for w in g.rotation[v] if w in local] for v in members]
    tmp = PlaneGraph(tuple(tuple(r) for r in rot), ())
    outer = face_walk_from(tmp, local[start[0]], local[start[1]])
    parent = [g.to_parent(v) for v in members]
    return build_plane_graph(len(members), rot, outer, parent)


def biconnected_split(g: PlaneGraph) -> list[PlaneGraph]:
    """2-connected blocks of ``g`` with at least 3 vertices.

    Single-edge blocks carry no odd hole and are dropped.  Every block of a
    near-triangulation has an exterior edge on ``g``'s exterior face, which
    fixes the block's own exterior.
    """
    if g.n < 3 or g.m < 3:
        return []
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    block_of: dict[frozenset, int] = {}
    blocks: list[list[tuple[int, int]]] = []
    for i, bedges in enumerate(nx.biconnected_component_edges(nxg)):
        bedges = list(bedges)
        blocks.append(bedges)
        for u, v in bedges:
            block_of[frozenset((u, v))] = i
    start: dict[int, tuple[int, int]] = {}
    outer = g.outer_face
    for i, u in enumerate(outer):
        v = outer[(i + 1) % len(outer)]
        if u == v:
            continue
        b = block_of[frozenset((u, v))]
        start.setdefault(b, (u, v))
    out = []
    for i, bedges in enumerate(blocks):
        if len(bedges) < 3:
            continue
        members = sorted({x for e in bedges for x in e})
        out.append(_restrict(g, members, start[i]))
    out.sort(key=lambda b: min(b.parent_ids))
    return out


# ---------------------------------------------------------------------------
# Apex augmentation
# ---------------------------------------------------------------------------


def apex_augment(g: PlaneGraph) -> PlaneGraph:
    """Add a vertex (id ``g.n``) joined to the whole exterior cycle.

    The result is a triangulation.  Its exterior face is the new triangle
    through the apex and the first two exterior vertices; ``parent_ids`` of
    the result is ``g``'s own ids (not its parents), plus ``-1`` for the apex.
    """
    outer = g.outer_face
    k = len(outer)
    if k < 3 or len(set(outer)) != k:
        raise NotBiconnected(f"exterior walk {list(outer)} is not a simple cycle")
    apex = g.n
    rot = [list(r) for r in g.rotation]
    for i, v in enumerate(outer):
        prev = outer[i - 1]
        # the exterior wedge at v runs clockwise from prev to the next outer vertex
        r = rot[v]
        r.insert(r.index(prev) + 1, apex)
    rot.append(list(reversed(outer)))
    new_outer = [outer[0], apex, outer[-1]]
    return build_plane_graph(g.n + 1, rot, new_outer, list(range(g.n)) + [-1])


# ---------------------------------------------------------------------------
# Separating triangles
# ---------------------------------------------------------------------------


def triangles(g: PlaneGraph) -> list[tuple[int, int, int]]:
    """All 3-cycles of ``g`` as sorted triples, in lexicographic order."""
    adj = g.adjacency
    out = []
    for u in range(g.n):
        for v in g.rotation[u]:
            if v <= u:
                continue
            for w in adj[u] & adj[v]:
                if w > v:
                    out.append((u, v, w))
    out.sort()
    return out


def find_separating_triangles(g: PlaneGraph) -> list[SeparatingTriangle]:
    """Triangles of a triangulation that do not bound a face."""
    facial = {tuple(sorted(f.vertices)) for f in g.faces if len(f) == 3}
    return [SeparatingTriangle(t) for t in triangles(g) if t not in facial]


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


def _parity(seq: tuple[int, int, int], base: tuple[int, int, int]) -> int:
    """0 if ``seq`` is a cyclic rotation of ``base``, else 1."""
    i = base.index(seq[0])
    return 0 if base[(i + 1) % 3] == seq[1] else 1


def split_triangulation(t: PlaneGraph) -> list[tuple[list[int], tuple[int, int, int] | None]]:
    """Vertex sets of the 4-connected pieces of a triangulation.

    Cutting along a separating triangle leaves a copy of the triangle as a
    face on each side.  Faces of ``t`` plus these two copies per triangle are
    grouped with a union-find: across an edge that lies on no separating
    triangle the two faces stay together; across an edge ``ab`` on the
    triangles ``T_1, ..., T_k`` (nested around ``ab``) the layers between
    consecutive triangles are chained.  Each group is one piece.

    Returns ``(vertices, exterior)`` per piece, where ``exterior`` is the
    traced triangle bounding the piece from outside (``None`` for the piece
    holding ``t``'s own exterior face).
    """
    seps = [s.vertices for s in find_separating_triangles(t)]
    faces = t.faces
    nf = len(faces)
    dsu = _DSU(nf + 2 * len(seps))

    on_edge: dict[tuple[int, int], list[int]] = {}
    for i, (p, q, r) in enumerate(seps):
        for a, b in ((p, q), (q, r), (p, r)):
            on_edge.setdefault((a, b), []).append(i)

    edge_face = t.edge_face
    for u in range(t.n):
        for v in t.rotation[u]:
            if v < u:
                continue
            fl, fr = edge_face[(u, v)], edge_face[(v, u)]
            tris = on_edge.get((u, v))
            if not tris:
                dsu.union(fl, fr)
                continue
            pos, deg = t.position[u], len(t.rotation[u])
            layers = []
            for ti in tris:
                base = seps[ti]
                c = next(x for x in base if x != u and x != v)
                # angular distance from v towards the fl side, around u
                dist = (pos[v] - pos[c]) % deg
                near = nf + 2 * ti + _parity((v, u, c), base)
                far = nf + 2 * ti + _parity((u, v, c), base)
                layers.append((dist, near, far))
            layers.sort()
            dsu.union(fl, layers[0][1])
            for (_, _, far), (_, near, _) in zip(layers, layers[1:]):
                dsu.union(far, near)
            dsu.union(layers[-1][2], fr)

    groups: dict[int, set[int]] = {}
    for fi, f in enumerate(faces):
        groups.setdefault(dsu.find(fi), set()).update(f.vertices)
    for ti, tri in enumerate(seps):
        for s in (0, 1):
            groups.setdefault(dsu.find(nf + 2 * ti + s), set()).update(tri)

    # walk the tree of pieces from the exterior to orient each piece's boundary
    root = dsu.find(t.outer_index)
    links: dict[int, list[tuple[int, int]]] = {}
    for ti in range(len(seps)):
        a, b = dsu.find(nf + 2 * ti), dsu.find(nf + 2 * ti + 1)
        links.setdefault(a, []).append((ti, b))
        links.setdefault(b, []).append((ti, a))
    exterior: dict[int, tuple[int, int, int] | None] = {root: None}
    stack = [root]
    while stack:
        gid = stack.pop()
        for ti, other in links.get(gid, []):
            if other in exterior:
                continue
            p, q, r = seps[ti]
            side = 0 if dsu.find(nf + 2 * ti) == other else 1
            exterior[other] = (p, q, r) if side == 0 else (p, r, q)
            stack.append(other)
    return [(sorted(vs), exterior[gid]) for gid, vs in groups.items()]


# ---------------------------------------------------------------------------
# W-components
# ---------------------------------------------------------------------------


def _component_graph(t: PlaneGraph, vertices: list[int], ext: tuple[int, int, int] | None,
                     apex: int, block: PlaneGraph) -> WComponent:
    local = {v: i for i, v in enumerate(vertices)}
    rot = [[local[w] for w in t.rotation[v] if w in local] for v in vertices]
    outer = [local[v] for v in (ext if ext is not None else t.outer_face)]
    if apex not in local:
        parent = [block.to_parent(v) for v in vertices]
        return WComponent(build_plane_graph(len(vertices), rot, outer, parent), False)
    # drop the apex; the faces around it merge into the new exterior
    a = local[apex]
    x = rot[a][0]
    rx = rot[x]
    y = rx[(rx.index(a) + 1) % len(rx)]
    keep = [v for v in vertices if v != apex]
    local2 = {v: i for i, v in enumerate(keep)}
    rot2 = [[local2[w] for w in t.rotation[v] if w in local2] for v in keep]
    tmp = PlaneGraph(tuple(tuple(r) for r in rot2), ())
    xv, yv = vertices[x], vertices[y]
    outer2 = face_walk_from(tmp, local2[xv], local2[yv])
    parent = [block.to_parent(v) for v in keep]
    return WComponent(build_plane_graph(len(keep), rot2, outer2, parent), True)


def w_components(g: PlaneGraph) -> list[WComponent]:
    """W-components of a plane near-triangulation, in canonical order
    (smallest input vertex id, then the sorted vertex tuple)."""
    validate_near_triangulation(g)
    comps: list[WComponent] = []
    for block in biconnected_split(g):
        t = apex_augment(block)
        apex = block.n
        pieces = [_component_graph(t, vs, ext, apex, block) for vs, ext in split_triangulation(t)]
        comps.extend(_drop_nested(pieces))
    comps.sort(key=WComponent.sort_key)
    return comps


def _drop_nested(pieces: list[WComponent]) -> list[WComponent]:
    # When the block's exterior is a triangle, the apex cuts off a piece that
    # is just that triangle again; it lies inside the neighbouring piece.
    if len(pieces) < 2:
        return pieces
    sets = [frozenset(p.graph.parent_ids) for p in pieces]
    out = []
    for i, p in enumerate(pieces):
        if p.apex_removed and p.graph.n == 3 and any(sets[i] < sets[j] for j in range(len(pieces)) if j != i):
            continue
        out.append(p)
    return out
