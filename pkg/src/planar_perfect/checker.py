"""Perfectness test for plane near-triangulations.

A plane near-triangulation is not perfect exactly when some W-component has
a vertex, an edge or a facial triangle whose closed neighbourhood has an odd
hole as its exterior boundary.  Each component is drawn once on the grid and
the three kinds of kernel are scanned in that order; every boundary is the
walked exterior face of the neighbourhood, never the cycle structure of the
neighbour set.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Literal

from .decomposer import WComponent, apex_augment, w_components
from .embedder import GridEmbedding, schnyder_embed, walk_boundary
from .graph_core import PlaneGraph, is_triangulation

log = logging.getLogger("planar_perfect")

KernelKind = Literal["vertex", "edge", "triangle"]
STAGES: tuple[KernelKind, ...] = ("vertex", "edge", "triangle")


@dataclass(frozen=True)
class Kernel:
    kind: KernelKind
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class Witness:
    """An odd hole together with the kernel whose neighbourhood it bounds.

    All ids are ids of the graph passed to :func:`is_perfect`.  ``component``
    lists the vertices of the W-component the kernel was found in; the hole
    is the exterior boundary of the kernel's neighbourhood within it.
    """

    kernel: Kernel
    hole: tuple[int, ...]
    component_index: int
    component: tuple[int, ...] = ()


@dataclass(frozen=True)
class Verdict:
    status: Literal["Perfect", "NotPerfect"]
    witness: Witness | None = None
    components: int = 0
    timings: dict[str, float] = field(default_factory=dict)
    kernels_checked: int = 0

    @property
    def perfect(self) -> bool:
        return self.status == "Perfect"


# ---------------------------------------------------------------------------
# Per-component scan
# ---------------------------------------------------------------------------


class _Scanner:
    """Shared state for the boundary walks of one component."""

    def __init__(self, h: PlaneGraph, e: GridEmbedding):
        self.h = h
        self.coords = e.coords
        self.inside = bytearray(h.n)
        self.mark = bytearray(h.n)
        self.checked = 0

    def hole_around(self, kernel: tuple[int, ...]) -> list[int] | None:
        """Walked exterior boundary of N[kernel] if it is an odd hole."""
        h = self.h
        rot = h.rotation
        inside = self.inside
        members: list[int] = []
        for k in kernel:
            if not inside[k]:
                inside[k] = 1
                members.append(k)
            for w in rot[k]:
                if not inside[w]:
                    inside[w] = 1
                    members.append(w)
        self.checked += 1
        try:
            if len(members) < 5:
                return None
            walk = walk_boundary(rot, h.position, self.coords, inside, members)
            return walk if self._is_hole(walk) else None
        finally:
            for v in members:
                inside[v] = 0

    def _is_hole(self, walk: list[int]) -> bool:
        k = len(walk)
        if k < 5 or k % 2 == 0:
            return False
        mark = self.mark
        for v in walk:
            if mark[v]:
                # repeated vertex: not a simple cycle
                for u in walk:
                    mark[u] = 0
                return False
            mark[v] = 1
        try:
            rot = self.h.rotation
            # chordless: every walk vertex sees exactly its two walk neighbours
            return all(sum(mark[w] for w in rot[v]) == 2 for v in walk)
        finally:
            for v in walk:
                mark[v] = 0


def component_embedding(comp: WComponent) -> GridEmbedding:
    """Grid drawing of a component, through its apex triangulation if it has
    a longer exterior."""
    h = comp.graph
    if is_triangulation(h):
        return schnyder_embed(h)
    t = apex_augment(h)
    return GridEmbedding(schnyder_embed(t).coords[: h.n])


def _scan_component(args: tuple[WComponent, bool]) -> tuple[Kernel | None, tuple[int, ...], dict[str, float], int]:
    """Find the canonically first kernel of a component.

    Returns ``(kernel, hole, stage timings, kernels checked)`` in component ids.
    With ``exhaustive`` every kernel is walked even after a hit (for timing).
    """
    comp, exhaustive = args
    h = comp.graph
    timings = dict.fromkeys(("embed",) + STAGES, 0.0)
    if h.n < 4:
        return None, (), timings, 0
    t0 = time.perf_counter()
    scan = _Scanner(h, component_embedding(comp))
    timings["embed"] = time.perf_counter() - t0
    found: tuple[Kernel, list[int]] | None = None

    def consider(kind: KernelKind, kernel: tuple[int, ...]) -> bool:
        nonlocal found
        walk = scan.hole_around(kernel)
        if walk is not None and found is None:
            found = (Kernel(kind, kernel), walk)
        return found is not None and not exhaustive

    outer = h.outer_vertices
    stages = [
        ("vertex", [(v,) for v in range(h.n) if v not in outer and h.degree(v) % 2 == 1]),
        ("edge", h.edges()),
        ("triangle", sorted(tuple(sorted(f.vertices)) for f in h.faces if not f.is_outer and len(f) == 3)),
    ]
    for kind, kernels in stages:
        t0 = time.perf_counter()
        for kernel in kernels:
            if consider(kind, kernel):
                break
        timings[kind] = time.perf_counter() - t0
        if found is not None and not exhaustive:
            break
    if found is None:
        return None, (), timings, scan.checked
    kernel, walk = found
    return kernel, tuple(walk), timings, scan.checked


def check_component(comp: WComponent, exhaustive: bool = False) -> Witness | None:
    """First witness of a single component, in the input's ids."""
    kernel, hole, _, _ = _scan_component((comp, exhaustive))
    return None if kernel is None else _lift(comp, kernel, hole, 0)


def _lift(comp: WComponent, kernel: Kernel, hole: tuple[int, ...], index: int) -> Witness:
    up = comp.graph.to_parent
    return Witness(
        Kernel(kernel.kind, tuple(up(v) for v in kernel.vertices)),
        tuple(up(v) for v in hole),
        index,
        comp.parent_vertices,
    )


# Single-stage entry points.  Each scans only its own kind of kernel.


def _single_stage(comp: WComponent, kind: KernelKind, e: GridEmbedding | None) -> Witness | None:
    h = comp.graph
    if h.n < 4:
        return None
    scan = _Scanner(h, e if e is not None else component_embedding(comp))
    if kind == "vertex":
        outer = h.outer_vertices
        kernels = [(v,) for v in range(h.n) if v not in outer and h.degree(v) % 2 == 1]
    elif kind == "edge":
        kernels = h.edges()
    else:
        kernels = sorted(tuple(sorted(f.vertices)) for f in h.faces if not f.is_outer and len(f) == 3)
    for kernel in kernels:
        walk = scan.hole_around(kernel)
        if walk is not None:
            return _lift(comp, Kernel(kind, kernel), tuple(walk), 0)
    return None


def check_vertex_parity(comp: WComponent, e: GridEmbedding | None = None) -> Witness | None:
    """Smallest odd-degree interior vertex whose link is an odd hole."""
    return _single_stage(comp, "vertex", e)


def edge_neighborhood_check(comp: WComponent, e: GridEmbedding | None = None) -> Witness | None:
    """First edge (lexicographic) whose neighbourhood boundary is an odd hole."""
    return _single_stage(comp, "edge", e)


def triangle_neighborhood_check(comp: WComponent, e: GridEmbedding | None = None) -> Witness | None:
    """First inner face (lexicographic) whose neighbourhood boundary is an odd hole."""
    return _single_stage(comp, "triangle", e)


# ---------------------------------------------------------------------------
# Whole graph
# ---------------------------------------------------------------------------


def is_perfect(g: PlaneGraph, jobs: int = 1, exhaustive: bool = False) -> Verdict:
    """Decide whether a plane near-triangulation is perfect.

    Components are scanned in canonical order and the first witness wins, so
    the result does not depend on ``jobs``.  ``exhaustive`` keeps walking
    every kernel after a hit; the verdict is unchanged, only slower.
    """
    g = PlaneGraph(g.rotation, g.outer_face)  # report in g's own ids
    t0 = time.perf_counter()
    comps = w_components(g)
    timings = {"decompose": time.perf_counter() - t0, "embed": 0.0, "vertex": 0.0, "edge": 0.0, "triangle": 0.0}
    log.info("decomposed n=%d into %d components in %.3fs", g.n, len(comps), timings["decompose"])
    tasks = [(c, exhaustive) for c in comps]
    witness = None
    checked = 0
    if jobs > 1 and len(comps) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_component, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = _lazy(tasks, exhaustive)
    for i, (kernel, hole, stage_t, n_checked) in enumerate(results):
        for k, v in stage_t.items():
            timings[k] += v
        checked += n_checked
        if kernel is not None and witness is None:
            witness = _lift(comps[i], kernel, hole, i)
            log.info("component %d: %s kernel %s", i, kernel.kind, witness.kernel.vertices)
            if not exhaustive and jobs <= 1:
                break
    for k in ("embed",) + STAGES:
        log.info("stage %-8s %.3fs", k, timings[k])
    status = "Perfect" if witness is None else "NotPerfect"
    return Verdict(status, witness, len(comps), timings, checked)


def _lazy(tasks, exhaustive):
    for t in tasks:
        yield _scan_component(t)
