"""Perfectness testing for plane near-triangulations."""

from __future__ import annotations

from .checker import (
    Kernel,
    Verdict,
    Witness,
    check_vertex_parity,
    edge_neighborhood_check,
    is_perfect,
    triangle_neighborhood_check,
)
from .cli_io import ParseError, ValidationError, emit_graph, emit_verdict, parse_graph
from .decomposer import WComponent, apex_augment, biconnected_split, find_separating_triangles, w_components
from .embedder import (
    BoundaryCycle,
    GridEmbedding,
    exterior_boundary_walk,
    find_crossings,
    neighborhood_boundary,
    schnyder_embed,
    sort_by_slope,
)
from .generator import GenSpec, named_fixture, random_near_triangulation, random_triangulation
from .graph_core import (
    GraphError,
    PlaneGraph,
    VertexSet,
    build_plane_graph,
    closed_neighborhood,
    induced_subgraph,
    trace_faces,
    validate_near_triangulation,
)
from .oracle import OracleResult, TooLarge, find_odd_hole_bruteforce, verify_witness

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_") and name != "annotations"]
