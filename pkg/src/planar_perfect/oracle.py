"""Brute-force reference checks.

Nothing here is used by :func:`planar_perfect.checker.is_perfect`; these are
the independent answers the checker is tested against.  The hole search works
on bare adjacency and ignores the embedding entirely.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING, Iterable, Iterator, Mapping, Sequence

from .graph_core import PlaneGraph, induced_subgraph

if TYPE_CHECKING:
    from .checker import Witness

DEFAULT_LIMIT = 16


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    hole_found: bool
    hole: tuple[int, ...] | None = None


def as_adjacency(g) -> list[frozenset[int]]:
    """Adjacency sets from a PlaneGraph, a networkx graph, a mapping or a list of lists."""
    if isinstance(g, PlaneGraph):
        return list(g.adjacency)
    if hasattr(g, "adj") and hasattr(g, "nodes"):
        nodes = sorted(g.nodes)
        if nodes != list(range(len(nodes))):
            raise ValueError("networkx graph must use nodes 0..n-1")
        return [frozenset(g.adj[v]) for v in nodes]
    if isinstance(g, Mapping):
        n = len(g)
        return [frozenset(g[v]) for v in range(n)]
    return [frozenset(r) for r in g]


def _odd_holes(adj: Sequence[frozenset[int]], first_only: bool) -> Iterator[tuple[int, ...]]:
    # Induced paths grown from their smallest vertex s in increasing
    # neighbour order, so the first hole met is the lexicographically least.
    n = len(adj)
    for s in range(n):
        # blocked[v] counts interior path vertices adjacent to v
        blocked = [0] * n
        for hole in _start(adj, s, [s], {s}, blocked):
            yield hole
            if first_only:
                return


def _start(adj, s, path, on_path, blocked):
    # s never blocks anything: the closing vertex is one of its neighbours.
    for x in sorted(adj[s]):
        if x <= s:
            continue
        path.append(x)
        on_path.add(x)
        yield from _grow(adj, s, x, path, on_path, blocked)
        on_path.discard(x)
        path.pop()


def _grow(adj, s, tip, path, on_path, blocked):
    for y in sorted(adj[tip]):
        if y <= s or y in on_path or blocked[y]:
            continue
        if s in adj[y]:
            # neighbours of s end the path: close it, never pass through
            if len(path) + 1 >= 5 and (len(path) + 1) % 2 == 1:
                yield tuple(path) + (y,)
            continue
        path.append(y)
        on_path.add(y)
        for z in adj[tip]:
            blocked[z] += 1
        yield from _grow(adj, s, y, path, on_path, blocked)
        for z in adj[tip]:
            blocked[z] -= 1
        on_path.discard(y)
        path.pop()


def find_odd_hole_bruteforce(g, limit: int = DEFAULT_LIMIT) -> OracleResult:
    """Exhaustive search for an induced odd cycle of length at least 5.

    Returns the lexicographically least such cycle (as a vertex sequence
    starting at its smallest vertex).
    """
    adj = as_adjacency(g)
    if len(adj) > limit:
        raise TooLarge(f"{len(adj)} vertices exceeds the oracle limit of {limit}")
    for hole in _odd_holes(adj, first_only=True):
        return OracleResult(True, hole)
    return OracleResult(False, None)


def all_odd_holes(g, limit: int = DEFAULT_LIMIT) -> list[tuple[int, ...]]:
    """Every odd hole once, normalised to start at its minimum and run
    towards the smaller of its two neighbours."""
    adj = as_adjacency(g)
    if len(adj) > limit:
        raise TooLarge(f"{len(adj)} vertices exceeds the oracle limit of {limit}")
    return [h for h in _odd_holes(adj, first_only=False) if h[1] < h[-1]]


def is_hole(adj: Sequence[frozenset[int]], cycle: Sequence[int]) -> str | None:
    """None if ``cycle`` is an odd hole of ``adj``, else the reason it is not."""
    k = len(cycle)
    if k < 5:
        return "too-short"
    if k % 2 == 0:
        return "even-length"
    if len(set(cycle)) != k:
        return "not-simple"
    if any(not 0 <= v < len(adj) for v in cycle):
        return "bad-vertex"
    for i in range(k):
        if cycle[(i + 1) % k] not in adj[cycle[i]]:
            return "not-a-cycle"
    members = set(cycle)
    for v in cycle:
        if len(adj[v] & members) != 2:
            return "chord"
    return None


# ---------------------------------------------------------------------------
# Witness verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Verification:
    ok: bool
    reason: str = "ok"

    def __bool__(self) -> bool:
        return self.ok


def _same_cycle(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b) or set(a) != set(b):
        return False
    k = len(a)
    i = list(b).index(a[0])
    fwd = [b[(i + j) % k] for j in range(k)]
    bwd = [b[(i - j) % k] for j in range(k)]
    return list(a) == fwd or list(a) == bwd


def verify_witness(g: PlaneGraph, w: "Witness") -> Verification:
    """Check a witness against the input graph on its own terms.

    The hole must be an odd hole of ``g`` around the kernel, and must equal
    the exterior face of the kernel's closed neighbourhood (restricted to
    the witness's component).  That face is recomputed combinatorially, by
    flooding ``g``'s faces from the exterior, not from coordinates.
    """
    adj = g.adjacency
    kernel = tuple(w.kernel.vertices)
    hole = tuple(w.hole)
    if any(not 0 <= v < g.n for v in kernel + hole):
        return Verification(False, "bad-vertex")
    if not 1 <= len(kernel) <= 3 or len(set(kernel)) != len(kernel):
        return Verification(False, "bad-kernel")
    for a, b in combinations(kernel, 2):
        if b not in adj[a]:
            return Verification(False, "kernel-not-clique")
    reason = is_hole(adj, hole)
    if reason:
        return Verification(False, reason)
    near = set(kernel)
    for k in kernel:
        near |= adj[k]
    if not set(hole) <= near:
        return Verification(False, "hole-not-around-kernel")
    scope = set(w.component) if w.component else set(range(g.n))
    if not set(kernel) <= scope:
        return Verification(False, "kernel-outside-component")
    sub = induced_subgraph(g, near & scope)
    if not sub.outer_face:
        return Verification(False, "neighbourhood-disconnected")
    boundary = [sub.to_parent(v) for v in sub.outer_face]
    if not _same_cycle(hole, boundary):
        return Verification(False, "not-the-exterior-boundary")
    return Verification(True)


# ---------------------------------------------------------------------------
# Structure checks
# ---------------------------------------------------------------------------


def _connected_without(adj: Sequence[frozenset[int]], vertices: Iterable[int], removed: set[int]) -> bool:
    rest = [v for v in vertices if v not in removed]
    if len(rest) <= 1:
        return True
    allowed = set(rest)
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w in allowed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(rest)


def cut_vertices_bruteforce(g) -> list[int]:
    adj = as_adjacency(g)
    vs = range(len(adj))
    return [v for v in vs if not _connected_without(adj, vs, {v})]


def edge_separators_bruteforce(g) -> list[tuple[int, int]]:
    """Edges whose two endpoints together disconnect the graph."""
    adj = as_adjacency(g)
    vs = range(len(adj))
    return [(u, v) for u in vs for v in adj[u] if u < v and not _connected_without(adj, vs, {u, v})]


def separating_triangles_bruteforce(g) -> list[tuple[int, int, int]]:
    """Triangles whose removal disconnects the graph."""
    adj = as_adjacency(g)
    vs = range(len(adj))
    out = []
    for a, b, c in combinations(vs, 3):
        if b in adj[a] and c in adj[a] and c in adj[b] and not _connected_without(adj, vs, {a, b, c}):
            out.append((a, b, c))
    return out
