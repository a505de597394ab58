from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from planar_perfect.generator import FIXTURES, GenSpec, named_fixture, random_near_triangulation

settings.register_profile(
    "repo",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


def small_graphs(count: int = 300, lo: int = 4, hi: int = 13):
    """Seeded near-triangulations with ``lo <= n <= hi``, cycling through sizes."""
    span = hi - lo + 1
    return [random_near_triangulation(GenSpec("random", lo + s % span, s)) for s in range(count)]


@pytest.fixture(scope="session")
def corpus():
    return small_graphs()


@pytest.fixture(scope="session")
def fixtures():
    return {name: named_fixture(name) for name in FIXTURES}
