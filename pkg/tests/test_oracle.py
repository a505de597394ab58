from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from planar_perfect.checker import Kernel, Witness, is_perfect, triangle_neighborhood_check
from planar_perfect.decomposer import w_components
from planar_perfect.embedder import neighborhood_boundary, plane_drawing
from planar_perfect.generator import GenSpec, named_fixture, random_near_triangulation
from planar_perfect.graph_core import closed_neighborhood
from planar_perfect.oracle import (
    TooLarge,
    all_odd_holes,
    as_adjacency,
    find_odd_hole_bruteforce,
    is_hole,
    verify_witness,
)


def test_c5_is_its_own_hole():
    r = find_odd_hole_bruteforce(nx.cycle_graph(5))
    assert r.hole_found and r.hole == (0, 1, 2, 3, 4)


def test_k4_has_none():
    r = find_odd_hole_bruteforce(named_fixture("k4"))
    assert not r.hole_found and r.hole is None


def test_triforce7_hole_is_rim():
    assert find_odd_hole_bruteforce(named_fixture("triforce7")).hole == tuple(range(7))


def test_even_cycle_and_long_odd_cycle():
    assert not find_odd_hole_bruteforce(nx.cycle_graph(6)).hole_found
    assert find_odd_hole_bruteforce(nx.cycle_graph(9)).hole == tuple(range(9))


def test_adjacency_inputs_agree():
    g = named_fixture("w5")
    lists = [list(r) for r in g.rotation]
    mapping = {v: set(r) for v, r in enumerate(g.rotation)}
    expected = find_odd_hole_bruteforce(g)
    assert find_odd_hole_bruteforce(lists) == expected == find_odd_hole_bruteforce(mapping)


def test_limit():
    with pytest.raises(TooLarge):
        find_odd_hole_bruteforce(nx.cycle_graph(17))
    assert find_odd_hole_bruteforce(nx.cycle_graph(17), limit=17).hole_found


def test_lexicographically_least():
    # two odd holes sharing vertex 0: 0-1-2-3-4 and 0-5-6-7-8
    h = nx.Graph()
    h.add_edges_from([(0, 5), (5, 6), (6, 7), (7, 8), (8, 0), (0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert find_odd_hole_bruteforce(h).hole == (0, 1, 2, 3, 4)


def _holes_by_networkx(g):
    # chordless cycles from networkx, filtered and normalised like all_odd_holes
    out = set()
    for c in nx.chordless_cycles(nx.Graph([(u, v) for u, v in g.edges()])):
        if len(c) >= 5 and len(c) % 2:
            i = c.index(min(c))
            c = c[i:] + c[:i]
            if c[1] > c[-1]:
                c = [c[0]] + c[1:][::-1]
            out.add(tuple(c))
    return out


@given(st.integers(4, 13), st.integers(0, 2**32))
def test_enumeration_matches_networkx(n, seed):
    g = random_near_triangulation(GenSpec("random", n, seed))
    mine = all_odd_holes(g)
    assert len(mine) == len(set(mine))
    assert set(mine) == _holes_by_networkx(g)
    first = find_odd_hole_bruteforce(g).hole
    assert first == (min(mine) if mine else None)
    adj = as_adjacency(g)
    assert all(is_hole(adj, h) is None for h in mine)


# ---------------------------------------------------------------------------
# verify_witness
# ---------------------------------------------------------------------------


def test_w5_witness_verifies():
    g = named_fixture("w5")
    w = is_perfect(g).witness
    assert verify_witness(g, w)


def test_tampered_witness_rejected():
    g = named_fixture("w5")
    w = is_perfect(g).witness
    bad = Witness(w.kernel, (5,) + w.hole[1:], w.component_index, w.component)
    r = verify_witness(g, bad)
    assert not r and r.reason in {"not-a-cycle", "chord"}


def test_triforce7_triangle_witness_verifies():
    g = named_fixture("triforce7")
    (comp,) = w_components(g)
    w = triangle_neighborhood_check(comp)
    assert w.kernel.kind == "triangle" and sorted(w.hole) == list(range(7))
    assert verify_witness(g, w)
    # the face {x, y, z} itself, walked independently
    s = closed_neighborhood(g, [7, 8, 9])
    rim = neighborhood_boundary(g, plane_drawing(g), s).vertices
    assert verify_witness(g, Witness(Kernel("triangle", (7, 8, 9)), rim, 0, tuple(range(10))))


def test_witness_must_be_the_boundary():
    # the 7-rim is an odd hole, but it is not the boundary around vertex x's neighbourhood
    g = named_fixture("triforce7")
    w = Witness(Kernel("vertex", (7,)), tuple(range(7)), 0, tuple(range(10)))
    assert verify_witness(g, w).reason == "hole-not-around-kernel"
    w = Witness(Kernel("edge", (0, 7)), tuple(range(7)), 0, tuple(range(10)))
    assert not verify_witness(g, w)


def test_non_clique_kernel_rejected():
    g = named_fixture("triforce7")
    w = Witness(Kernel("edge", (0, 3)), tuple(range(7)), 0, tuple(range(10)))
    assert verify_witness(g, w).reason == "kernel-not-clique"
