from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st
from reference_split import reference_components

from planar_perfect.decomposer import (
    NotBiconnected,
    apex_augment,
    biconnected_split,
    find_separating_triangles,
    w_components,
)
from planar_perfect.generator import GenSpec, named_fixture, random_near_triangulation, random_triangulation
from planar_perfect.graph_core import from_drawing, is_triangulation
from planar_perfect.oracle import (
    cut_vertices_bruteforce,
    edge_separators_bruteforce,
    separating_triangles_bruteforce,
)


def bowtie():
    coords = [(0, 0), (-4, 2), (-4, -2), (4, 2), (4, -2)]
    return from_drawing(coords, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])


def path3():
    return from_drawing([(0, 0), (1, 0), (2, 1)], [(0, 1), (1, 2)])


def as_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


# ---------------------------------------------------------------------------
# Blocks and apex
# ---------------------------------------------------------------------------


def test_bowtie_has_two_triangle_blocks():
    blocks = biconnected_split(bowtie())
    assert [sorted(b.parent_ids) for b in blocks] == [[0, 1, 2], [0, 3, 4]]
    assert all(b.m == 3 for b in blocks)


def test_k4_is_one_block():
    blocks = biconnected_split(named_fixture("k4"))
    assert len(blocks) == 1 and blocks[0].n == 4


def test_path_blocks_are_discarded():
    assert biconnected_split(path3()) == []


def test_apex_on_pentagon_fan():
    t = apex_augment(named_fixture("pentagon_fan"))
    assert t.n == 6 and is_triangulation(t)
    assert t.degree(5) == 5
    assert list(t.rotation[5]) == list(reversed(named_fixture("pentagon_fan").outer_face))


def test_apex_on_k4_and_triangle():
    t = apex_augment(named_fixture("k4"))
    assert t.n == 5 and is_triangulation(t) and t.degree(4) == 3
    tri = from_drawing([(0, 0), (2, 0), (1, 2)], [(0, 1), (1, 2), (2, 0)])
    k4 = apex_augment(tri)
    assert is_triangulation(k4) and nx.is_isomorphic(as_nx(k4), nx.complete_graph(4))


def test_apex_needs_simple_exterior():
    with pytest.raises(NotBiconnected):
        apex_augment(bowtie())


@given(st.integers(4, 30), st.integers(0, 2**32))
def test_apex_gives_triangulation_for_every_block(n, seed):
    g = random_near_triangulation(GenSpec("random", n, seed))
    for b in biconnected_split(g):
        t = apex_augment(b)
        assert is_triangulation(t)
        assert t.degree(b.n) == len(b.outer_face)


# ---------------------------------------------------------------------------
# Separating triangles
# ---------------------------------------------------------------------------


def test_separating_triangle_examples():
    assert find_separating_triangles(named_fixture("octahedron")) == []
    assert find_separating_triangles(named_fixture("k4")) == []
    assert [s.vertices for s in find_separating_triangles(named_fixture("stackedK4"))] == [(1, 2, 3)]


@given(st.integers(4, 13), st.integers(0, 2**32))
def test_separating_triangles_match_bruteforce(n, seed):
    t = random_triangulation(GenSpec("random", n, seed))
    found = [s.vertices for s in find_separating_triangles(t)]
    assert found == separating_triangles_bruteforce(t)


# ---------------------------------------------------------------------------
# W-components
# ---------------------------------------------------------------------------


def test_component_examples():
    comps = w_components(named_fixture("stackedK4"))
    assert [c.parent_vertices for c in comps] == [(0, 1, 2, 3), (1, 2, 3, 4)]
    assert all(nx.is_isomorphic(as_nx(c.graph), nx.complete_graph(4)) for c in comps)

    fan = w_components(named_fixture("pentagon_fan"))
    assert [c.parent_vertices for c in fan] == [(0, 1, 2), (0, 2, 3), (0, 3, 4)]

    octa = w_components(named_fixture("octahedron"))
    assert len(octa) == 1 and octa[0].parent_vertices == tuple(range(6))


def test_bowtie_components():
    assert [c.parent_vertices for c in w_components(bowtie())] == [(0, 1, 2), (0, 3, 4)]


def test_components_are_induced_subgraphs():
    g = random_near_triangulation(GenSpec("random", 40, 3))
    for c in w_components(g):
        h = c.graph
        ids = c.id_map
        for a, b in h.edges():
            assert g.has_edge(ids[a], ids[b])
        members = set(ids)
        for a in ids:
            assert len(g.adjacency[a] & members) == h.degree(ids.index(a))


@given(st.integers(4, 13), st.integers(0, 2**32))
def test_matches_slow_reference(n, seed):
    g = random_near_triangulation(GenSpec("random", n, seed))
    assert {frozenset(c.parent_vertices) for c in w_components(g)} == reference_components(g)


@given(st.integers(4, 13), st.integers(0, 2**32))
def test_components_are_w_triangulations(n, seed):
    g = random_near_triangulation(GenSpec("random", n, seed))
    for c in w_components(g):
        h = c.graph
        if h.n <= 3:
            continue
        assert cut_vertices_bruteforce(h) == []
        assert edge_separators_bruteforce(h) == []
        assert separating_triangles_bruteforce(h) == []
        # re-augmented, a component has no separating triangle either
        if is_triangulation(h):
            assert find_separating_triangles(h) == []
        else:
            assert find_separating_triangles(apex_augment(h)) == []


def test_order_is_canonical():
    g = random_triangulation(GenSpec("random", 300, 9))
    keys = [c.sort_key() for c in w_components(g)]
    assert keys == sorted(keys)
