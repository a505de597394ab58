"""JSON graph and verdict documents, plus DOT and SVG renderings.

Graph documents::

    {"format_version": 1, "n": 4,
     "rotation": [[1, 3, 2], [2, 3, 0], [0, 3, 1], [2, 0, 1]],
     "outer_face": [0, 1, 2],
     "coords": [[0, 0], [0, 2], [2, 0], [1, 1]]}      # optional

Rotations list neighbours clockwise; ``outer_face`` is the exterior walk in
tracing order.  DOT output is one-way (DOT has no notion of rotation order).
"""

from __future__ import annotations

import json
from html import escape
from typing import Any, NamedTuple, Sequence

from .checker import Kernel, Verdict, Witness
from .decomposer import WComponent
from .embedder import GridEmbedding, find_crossings, plane_drawing, respects_rotation, walk_boundary
from .graph_core import (
    AsymmetricAdjacency,
    DuplicateNeighbor,
    GraphError,
    OuterFaceNotAFace,
    PlaneGraph,
    build_plane_graph,
)
from .oracle import OracleResult

FORMAT_VERSION = 1


class ParseError(ValueError):
    """Malformed document text.  ``location`` is ``"line L, column C"`` or a field path."""

    def __init__(self, message: str, location: str):
        super().__init__(f"{location}: {message}")
        self.location = location


class ValidationError(ValueError):
    """Well-formed document describing an invalid graph or drawing."""

    def __init__(self, message: str, location: str):
        super().__init__(f"{location}: {message}")
        self.location = location


class ParsedGraph(NamedTuple):
    graph: PlaneGraph
    embedding: GridEmbedding | None


# ---------------------------------------------------------------------------
# Graph documents
# ---------------------------------------------------------------------------


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None


def _int_list(value: Any, where: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise ParseError("expected a list of integers", where)
    return value


def graph_from_dict(doc: Any) -> ParsedGraph:
    if not isinstance(doc, dict):
        raise ParseError("expected a JSON object", "document")
    for key in ("format_version", "n", "rotation", "outer_face"):
        if key not in doc:
            raise ParseError("missing field", key)
    if doc["format_version"] != FORMAT_VERSION:
        raise ParseError(f"unsupported version {doc['format_version']!r}", "format_version")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("expected a positive integer", "n")
    rot = doc["rotation"]
    if not isinstance(rot, list):
        raise ParseError("expected a list of lists", "rotation")
    if len(rot) != n:
        raise ValidationError(f"{len(rot)} rotations for n = {n}", "rotation")
    rotation = [_int_list(r, f"rotation[{i}]") for i, r in enumerate(rot)]
    outer = _int_list(doc["outer_face"], "outer_face")
    try:
        g = build_plane_graph(n, rotation, outer)
    except AsymmetricAdjacency as exc:
        raise ValidationError(str(exc), f"rotation[{exc.edge[0]}]") from None
    except DuplicateNeighbor as exc:
        raise ValidationError(str(exc), f"rotation[{exc.vertex}]") from None
    except OuterFaceNotAFace as exc:
        raise ValidationError(str(exc), "outer_face") from None
    except GraphError as exc:
        raise ValidationError(str(exc), "rotation") from None

    emb = None
    if doc.get("coords") is not None:
        coords = doc["coords"]
        if not isinstance(coords, list) or len(coords) != n:
            raise ParseError(f"expected {n} coordinate pairs", "coords")
        pts = []
        for i, p in enumerate(coords):
            pair = _int_list(p, f"coords[{i}]")
            if len(pair) != 2:
                raise ParseError("expected an [x, y] pair", f"coords[{i}]")
            pts.append((pair[0], pair[1]))
        emb = GridEmbedding(tuple(pts))
        problem = drawing_problem(g, emb)
        if problem:
            raise ValidationError(problem, "coords")
    return ParsedGraph(g, emb)


def drawing_problem(g: PlaneGraph, e: GridEmbedding) -> str | None:
    """Why ``e`` is not a plane drawing of ``g`` with its rotations and exterior."""
    if len(set(e.coords)) != g.n:
        return "two vertices share a point"
    bad = find_crossings(g, e, limit=1)
    if bad:
        return f"edges {bad[0][0]} and {bad[0][1]} cross"
    if not respects_rotation(g, e):
        return "clockwise order around some vertex differs from its rotation"
    if g.n >= 3 and g.is_connected():
        inside = bytearray(b"\x01") * g.n
        walk = walk_boundary(g.rotation, g.position, e.coords, inside, range(g.n))
        outer = list(g.outer_face)
        k = len(outer)
        if len(walk) != k or not any(walk == outer[i:] + outer[:i] for i in range(k)):
            return "drawn exterior face differs from outer_face"
    return None


def parse_graph(text: str) -> ParsedGraph:
    """Parse and validate a graph document."""
    return graph_from_dict(_load(text))


def graph_to_dict(g: PlaneGraph, e: GridEmbedding | None = None) -> dict:
    doc: dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "n": g.n,
        "rotation": [list(r) for r in g.rotation],
        "outer_face": list(g.outer_face),
    }
    if e is not None:
        doc["coords"] = [list(p) for p in e.coords]
    return doc


def emit_graph(g: PlaneGraph, e: GridEmbedding | None = None) -> str:
    return json.dumps(graph_to_dict(g, e))


def emit_components(comps: Sequence[WComponent]) -> str:
    docs = []
    for c in comps:
        d = graph_to_dict(c.graph)
        d["parent_ids"] = list(c.id_map)
        d["apex_removed"] = c.apex_removed
        docs.append(d)
    return json.dumps({"components": docs})


# ---------------------------------------------------------------------------
# Verdicts
# ---------------------------------------------------------------------------


def verdict_to_dict(v: Verdict) -> dict:
    doc: dict[str, Any] = {"status": "perfect" if v.perfect else "not_perfect", "components": v.components}
    if v.witness is not None:
        w = v.witness
        doc["kernel"] = {"kind": w.kernel.kind, "vertices": list(w.kernel.vertices)}
        doc["hole"] = list(w.hole)
        doc["component_index"] = w.component_index
        doc["component"] = list(w.component)
    doc["timings"] = dict(v.timings)
    doc["kernels_checked"] = v.kernels_checked
    return doc


def verdict_from_dict(doc: dict) -> Verdict:
    status = {"perfect": "Perfect", "not_perfect": "NotPerfect"}.get(doc.get("status"))
    if status is None:
        raise ParseError(f"unknown status {doc.get('status')!r}", "status")
    witness = None
    if "hole" in doc:
        k = doc["kernel"]
        witness = Witness(Kernel(k["kind"], tuple(k["vertices"])), tuple(doc["hole"]),
                          doc["component_index"], tuple(doc.get("component", ())))
    if (witness is None) != (status == "Perfect"):
        raise ParseError("hole must be present exactly when the graph is not perfect", "hole")
    return Verdict(status, witness, doc.get("components", 0), dict(doc.get("timings", {})),
                   doc.get("kernels_checked", 0))


def parse_verdict(text: str) -> Verdict:
    return verdict_from_dict(_load(text))


def emit_verdict(v: Verdict, format: str = "json", graph: PlaneGraph | None = None,
                 embedding: GridEmbedding | None = None) -> str:
    """Render a verdict.  ``dot`` and ``svg`` draw ``graph`` with the kernel
    and hole highlighted; they need the graph, JSON does not."""
    if format == "json":
        return json.dumps(verdict_to_dict(v))
    if graph is None:
        raise ValueError(f"format {format!r} needs the graph")
    if format == "dot":
        return _dot(v, graph)
    if format == "svg":
        return _svg(v, graph, embedding if embedding is not None else plane_drawing(graph))
    raise ValueError(f"unknown format {format!r}")


def emit_oracle(r: OracleResult) -> str:
    return json.dumps({"hole_found": r.hole_found, "hole": list(r.hole) if r.hole else None})


def _roles(v: Verdict) -> tuple[set[int], set[int], set[frozenset[int]]]:
    if v.witness is None:
        return set(), set(), set()
    hole = v.witness.hole
    edges = {frozenset((hole[i], hole[(i + 1) % len(hole)])) for i in range(len(hole))}
    return set(v.witness.kernel.vertices), set(hole), edges


def _dot(v: Verdict, g: PlaneGraph) -> str:
    kernel, hole, hole_edges = _roles(v)
    lines = ["graph G {", '  node [shape=circle, style=filled, fillcolor="#ffffff"];']
    for u in range(g.n):
        attrs = []
        if u in kernel:
            attrs.append('fillcolor="#4c72b0", fontcolor="#ffffff"')
        elif u in hole:
            attrs.append('fillcolor="#dd8452"')
        if u in hole:
            attrs.append("penwidth=3")
        lines.append(f"  {u}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    for a, b in g.edges():
        style = ' [color="#c44e52", penwidth=3]' if frozenset((a, b)) in hole_edges else ""
        lines.append(f"  {a} -- {b}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _svg(v: Verdict, g: PlaneGraph, e: GridEmbedding, size: int = 480, pad: int = 24) -> str:
    kernel, hole, hole_edges = _roles(v)
    xs = [p[0] for p in e.coords]
    ys = [p[1] for p in e.coords]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    scale = (size - 2 * pad) / span

    def at(u: int) -> tuple[float, float]:
        x, y = e.coords[u]
        # grid y grows upwards, SVG y downwards
        return pad + (x - min(xs)) * scale, size - pad - (y - min(ys)) * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        "<style>",
        "line.edge{stroke:#999;stroke-width:1.5}",
        "line.hole-edge{stroke:#c44e52;stroke-width:4}",
        "circle{fill:#fff;stroke:#333;stroke-width:1.5}",
        "circle.hole{fill:#dd8452}",
        "circle.kernel{fill:#4c72b0}",
        "text{font:11px sans-serif;text-anchor:middle;dominant-baseline:central}",
        "</style>",
        f"<title>{escape('perfect' if v.perfect else 'not perfect')}</title>",
    ]
    for a, b in g.edges():
        (x1, y1), (x2, y2) = at(a), at(b)
        cls = "hole-edge" if frozenset((a, b)) in hole_edges else "edge"
        out.append(f'<line class="{cls}" x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}"/>')
    for u in range(g.n):
        x, y = at(u)
        classes = [c for c, s in (("kernel", kernel), ("hole", hole)) if u in s]
        cls = f' class="{" ".join(classes)}"' if classes else ""
        out.append(f'<circle{cls} cx="{x:.1f}" cy="{y:.1f}" r="9"/>')
        out.append(f'<text x="{x:.1f}" y="{y:.1f}">{u}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
