from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from planar_perfect.checker import is_perfect
from planar_perfect.generator import (
    FIXTURES,
    GenSpec,
    UnknownFixture,
    named_fixture,
    random_near_triangulation,
    random_triangulation,
)
from planar_perfect.graph_core import build_plane_graph, is_triangulation, validate_near_triangulation


def rebuild(g):
    return build_plane_graph(g.n, g.rotation, g.outer_face)


def test_all_fixtures_build():
    for name in FIXTURES:
        g = rebuild(named_fixture(name))
        assert validate_near_triangulation(g).ok, name


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        named_fixture("dodecahedron")


def test_fixture_shapes():
    w5 = named_fixture("w5")
    assert w5.n == 6 and w5.degree(5) == 5
    s = named_fixture("stackedK4")
    assert (s.n, s.m) == (5, 9)
    t5 = named_fixture("triforce5")
    assert t5.n == 8 and set(t5.outer_face) == set(range(5))
    t9 = named_fixture("triforce9")
    assert t9.n == 12 and all(t9.degree(v) == 6 for v in (9, 10, 11))


def test_n4_is_k4():
    for seed in range(5):
        g = random_triangulation(GenSpec("random", 4, seed))
        h = nx.Graph(g.edges())
        assert nx.is_isomorphic(h, nx.complete_graph(4))


def test_seed_42():
    a = random_triangulation(GenSpec("random", 10, 42))
    b = random_triangulation(GenSpec("random", 10, 42))
    assert validate_near_triangulation(a).ok and a.n - a.m + len(a.faces) == 2
    assert a.rotation == b.rotation


@given(st.integers(3, 200), st.integers(0, 2**64 - 1))
def test_triangulations_valid(n, seed):
    g = random_triangulation(GenSpec("random", n, seed))
    assert g.n == n and is_triangulation(g)
    assert g.m == 3 * n - 6 or n == 3
    rebuild(g)


@given(st.integers(3, 60), st.integers(0, 2**64 - 1))
def test_near_triangulations_valid(n, seed):
    g = random_near_triangulation(GenSpec("random", n, seed))
    assert g.n == n and g.is_connected()
    assert validate_near_triangulation(rebuild(g)).ok


def test_flips_break_separating_triangles():
    from planar_perfect.decomposer import find_separating_triangles

    stacked = random_triangulation(GenSpec("random", 200, 1, flips=0))
    flipped = random_triangulation(GenSpec("random", 200, 1, flips=2000))
    assert len(find_separating_triangles(flipped)) < len(find_separating_triangles(stacked))


def test_corpus_has_both_verdicts():
    statuses = {is_perfect(random_near_triangulation(GenSpec("random", 13, s))).status for s in range(2000)}
    assert statuses == {"Perfect", "NotPerfect"}
