"""Plane graphs stored as rotation systems.

A :class:`PlaneGraph` keeps, for every vertex, the clockwise cyclic order of
its neighbours together with the boundary walk of the exterior face.  Faces
are traced with the rule ``(u, v) -> (v, succ_v(u))`` where ``succ_v`` is the
clockwise successor in the rotation of ``v``; this keeps every face on the
left of its directed edges, so inner faces come out counter-clockwise and the
exterior face clockwise.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------


class GraphError(ValueError):
    """Base class for structural problems with a plane graph."""


class InvalidVertex(GraphError):
    pass


class AsymmetricAdjacency(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"edge ({u}, {v}): {v} lists {u} as a neighbour but {u} does not list {v}")
        self.edge = (u, v)


class DuplicateNeighbor(GraphError):
    def __init__(self, v: int, w: int):
        what = "self-loop" if v == w else f"neighbour {w} repeated"
        super().__init__(f"vertex {v}: {what} in rotation")
        self.vertex = v
        self.neighbor = w


class OuterFaceNotAFace(GraphError):
    def __init__(self, outer: Sequence[int], detail: str = ""):
        msg = f"outer face {list(outer)} is not a face of the rotation system"
        super().__init__(msg + (f" ({detail})" if detail else ""))
        self.face = tuple(outer)


class EulerViolation(GraphError):
    def __init__(self, n: int, m: int, f: int):
        super().__init__(
            f"n - m + f = {n} - {m} + {f} = {n - m + f} != 2 "
            "(rotation system is disconnected or not planar)"
        )
        self.counts = (n, m, f)


class NotNearTriangulation(GraphError):
    def __init__(self, face: Sequence[int]):
        super().__init__(f"inner face {list(face)} has length {len(face)}, expected 3")
        self.face = tuple(face)


class KernelNotClique(GraphError):
    pass


class EmptySet(GraphError):
    pass


# ---------------------------------------------------------------------------
# Data types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Face:
    vertices: tuple[int, ...]
    is_outer: bool = False

    def __len__(self) -> int:
        return len(self.vertices)

    def directed_edges(self) -> Iterator[tuple[int, int]]:
        vs = self.vertices
        for i, v in enumerate(vs):
            yield v, vs[(i + 1) % len(vs)]


@dataclass(frozen=True, eq=False)
class PlaneGraph:
    """Immutable combinatorial embedding.

    ``parent_ids`` maps local ids to the ids of the graph this one was cut
    from (``None`` for a top-level graph).  ``outer_face`` may be empty for a
    disconnected induced subgraph, whose exterior is not a single face.
    """

    rotation: tuple[tuple[int, ...], ...]
    outer_face: tuple[int, ...]
    parent_ids: tuple[int, ...] | None = None

    # -- basic counts -------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.rotation)

    @cached_property
    def m(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(r) for r in self.rotation)

    @cached_property
    def position(self) -> tuple[dict[int, int], ...]:
        """``position[v][w]`` is the index of ``w`` in the rotation of ``v``."""
        return tuple({w: i for i, w in enumerate(r)} for r in self.rotation)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return sorted((u, v) for u, r in enumerate(self.rotation) for v in r if u < v)

    def succ(self, v: int, w: int) -> int:
        """Clockwise successor of ``w`` around ``v``."""
        r = self.rotation[v]
        return r[(self.position[v][w] + 1) % len(r)]

    def pred(self, v: int, w: int) -> int:
        r = self.rotation[v]
        return r[(self.position[v][w] - 1) % len(r)]

    def to_parent(self, v: int) -> int:
        return v if self.parent_ids is None else self.parent_ids[v]

    # -- faces --------------------------------------------------------------

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return tuple(trace_faces(self))

    @cached_property
    def edge_face(self) -> dict[tuple[int, int], int]:
        """Index into :attr:`faces` of the face on the left of each directed edge."""
        out = {}
        for i, f in enumerate(self.faces):
            for e in f.directed_edges():
                out[e] = i
        return out

    @cached_property
    def outer_index(self) -> int | None:
        for i, f in enumerate(self.faces):
            if f.is_outer:
                return i
        return None

    @cached_property
    def outer_vertices(self) -> frozenset[int]:
        return frozenset(self.outer_face)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = bytearray(self.n)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            for w in self.rotation[v]:
                if not seen[w]:
                    seen[w] = 1
                    count += 1
                    stack.append(w)
        return count == self.n


class VertexSet:
    """Membership flags over ``0..n-1`` with the members kept in insertion order."""

    __slots__ = ("indicator", "members")

    def __init__(self, n: int, members: Iterable[int] = ()):
        self.indicator = bytearray(n)
        self.members: list[int] = []
        for v in members:
            self.add(v)

    def add(self, v: int) -> None:
        if not self.indicator[v]:
            self.indicator[v] = 1
            self.members.append(v)

    def __contains__(self, v: int) -> bool:
        return bool(self.indicator[v])

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def __repr__(self) -> str:
        return f"VertexSet({self.sorted()})"


# ---------------------------------------------------------------------------
# Construction and tracing
# ---------------------------------------------------------------------------


def _trace_raw(rotation: Sequence[Sequence[int]], position) -> list[tuple[int, ...]]:
    n = len(rotation)
    seen: set[tuple[int, int]] = set()
    faces: list[tuple[int, ...]] = []
    for u in range(n):
        if not rotation[u]:
            faces.append((u,))
            continue
        for v in rotation[u]:
            if (u, v) in seen:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                rb = rotation[b]
                a, b = b, rb[(position[b][a] + 1) % len(rb)]
            faces.append(tuple(walk))
    return faces


def _same_closed_walk(face: Sequence[int], outer: Sequence[int]) -> bool:
    if len(face) != len(outer):
        return False
    k = len(face)
    for s in range(k):
        if all(face[(s + i) % k] == outer[i] for i in range(k)):
            return True
    return False


def trace_faces(g: PlaneGraph) -> list[Face]:
    """Every face of ``g``; each directed edge is used by exactly one face."""
    faces = []
    outer_found = False
    for walk in _trace_raw(g.rotation, g.position):
        is_outer = False
        if not outer_found and g.outer_face and _same_closed_walk(walk, g.outer_face):
            is_outer = outer_found = True
        faces.append(Face(walk, is_outer))
    return faces


def build_plane_graph(
    vertex_count: int,
    rotations: Sequence[Sequence[int]],
    outer_face: Sequence[int],
    parent_ids: Sequence[int] | None = None,
) -> PlaneGraph:
    """Validate a rotation system and wrap it as a :class:`PlaneGraph`.

    Raises one of the :class:`GraphError` subclasses naming the offending
    vertex, edge or face.
    """
    if len(rotations) != vertex_count:
        raise GraphError(f"expected {vertex_count} rotations, got {len(rotations)}")
    if vertex_count == 0:
        raise GraphError("graph has no vertices")
    if not outer_face:
        raise OuterFaceNotAFace(outer_face, "empty")
    rot = tuple(tuple(int(w) for w in r) for r in rotations)
    for v, r in enumerate(rot):
        seen = set()
        for w in r:
            if not 0 <= w < vertex_count:
                raise InvalidVertex(f"vertex {v}: neighbour {w} out of range 0..{vertex_count - 1}")
            if w == v or w in seen:
                raise DuplicateNeighbor(v, w)
            seen.add(w)
    adj = [set(r) for r in rot]
    for v, r in enumerate(rot):
        for w in r:
            if v not in adj[w]:
                raise AsymmetricAdjacency(w, v)
    outer = tuple(int(v) for v in outer_face)
    for v in outer:
        if not 0 <= v < vertex_count:
            raise InvalidVertex(f"outer face vertex {v} out of range")

    g = PlaneGraph(rot, outer, tuple(parent_ids) if parent_ids is not None else None)
    faces = g.faces
    f = len(faces)
    if vertex_count - g.m + f != 2:
        raise EulerViolation(vertex_count, g.m, f)
    if g.outer_index is None:
        raise OuterFaceNotAFace(outer)
    return g


@dataclass
class NearTriangulationReport:
    ok: bool
    inner_faces: int
    offending: list[tuple[int, ...]] = field(default_factory=list)


def validate_near_triangulation(g: PlaneGraph, raise_on_error: bool = True) -> NearTriangulationReport:
    """Accept iff every face other than the exterior one is a triangle."""
    bad = [f.vertices for f in g.faces if not f.is_outer and len(f) != 3]
    inner = sum(1 for f in g.faces if not f.is_outer)
    if bad and raise_on_error:
        raise NotNearTriangulation(bad[0])
    return NearTriangulationReport(not bad, inner, bad)


def is_triangulation(g: PlaneGraph) -> bool:
    return g.n >= 3 and all(len(f) == 3 for f in g.faces)


# ---------------------------------------------------------------------------
# Neighbourhoods and induced subgraphs
# ---------------------------------------------------------------------------


def closed_neighborhood(g: PlaneGraph, kernel: Iterable[int]) -> VertexSet:
    """``N[X]``: the kernel together with all neighbours of its vertices."""
    ks = list(dict.fromkeys(kernel))
    if not 1 <= len(ks) <= 3:
        raise KernelNotClique(f"kernel must have 1 to 3 vertices, got {ks}")
    for i, u in enumerate(ks):
        if not 0 <= u < g.n:
            raise InvalidVertex(f"kernel vertex {u} out of range")
        for v in ks[i + 1:]:
            if not g.has_edge(u, v):
                raise KernelNotClique(f"kernel vertices {u} and {v} are not adjacent")
    s = VertexSet(g.n, ks)
    for u in ks:
        for w in g.rotation[u]:
            s.add(w)
    return s


def _inherited_outer_start(g: PlaneGraph, keep: bytearray) -> tuple[int, int] | None:
    """A directed edge of the kept subgraph whose left face contains the
    exterior of ``g``.

    Faces of ``g`` are flooded from the exterior across edges that do not
    survive the restriction; the first surviving edge bordering the flooded
    region lies on the exterior face of the subgraph.
    """
    oi = g.outer_index
    if oi is None:
        return None
    faces, edge_face = g.faces, g.edge_face
    reached = {oi}
    queue = deque([oi])
    while queue:
        fi = queue.popleft()
        for a, b in faces[fi].directed_edges():
            if a == b:
                continue
            if keep[a] and keep[b]:
                return a, b
            other = edge_face[(b, a)]
            if other not in reached:
                reached.add(other)
                queue.append(other)
    return None


def induced_subgraph(g: PlaneGraph, s: VertexSet | Iterable[int]) -> PlaneGraph:
    """Restrict ``g`` to ``s`` keeping the inherited clockwise orders.

    Local ids follow the increasing order of the kept ids; ``parent_ids`` of
    the result maps back to ``g``'s own parent ids when ``g`` has them.  The
    exterior face is the one that swallowed ``g``'s exterior; it is left
    empty when the restriction is disconnected.
    """
    members = sorted(set(s))
    if not members:
        raise EmptySet("cannot induce a subgraph on an empty vertex set")
    keep = bytearray(g.n)
    local = {}
    for i, v in enumerate(members):
        keep[v] = 1
        local[v] = i
    rot = tuple(tuple(local[w] for w in g.rotation[v] if keep[w]) for v in members)
    parent = tuple(g.to_parent(v) for v in members)
    sub = PlaneGraph(rot, (), parent)
    if not sub.is_connected():
        return sub
    if sub.m == 0:
        return PlaneGraph(rot, (0,), parent)
    start = _inherited_outer_start(g, keep)
    if start is None:
        return sub
    a, b = local[start[0]], local[start[1]]
    walk = [a]
    x, y = a, b
    while True:
        x, y = y, sub.succ(y, x)
        if (x, y) == (a, b):
            break
        walk.append(x)
    return PlaneGraph(rot, tuple(walk), parent)


def face_walk_from(g: PlaneGraph, a: int, b: int) -> list[int]:
    """The face on the left of the directed edge ``a -> b``."""
    walk = [a]
    x, y = a, b
    while True:
        x, y = y, g.succ(y, x)
        if (x, y) == (a, b):
            return walk
        walk.append(x)


def connected_components(g: PlaneGraph) -> list[list[int]]:
    seen = bytearray(g.n)
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.rotation[v]:
                if not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def from_drawing(coords: Sequence[tuple[int, int]], edges: Iterable[tuple[int, int]]) -> PlaneGraph:
    """Build a plane graph from a straight-line drawing.

    Rotations are the clockwise angular orders at each vertex; the exterior
    face is traced from the lowest of the leftmost vertices along its
    steepest edge.  Handy for writing fixtures by hand.
    """
    # imported lazily: embedder depends on this module
    from .embedder import clockwise_order, steepest_neighbor

    n = len(coords)
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    rot = [clockwise_order(coords, v, adj[v]) for v in range(n)]
    tmp = PlaneGraph(tuple(tuple(r) for r in rot), ())
    l = min(range(n), key=lambda v: (coords[v][0], coords[v][1], v))
    if not rot[l]:
        outer = [l]
    else:
        w = steepest_neighbor(coords, l, rot[l])
        outer = face_walk_from(tmp, l, w)
    return build_plane_graph(n, rot, outer)
