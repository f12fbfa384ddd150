from __future__ import annotations

import os

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from mngraph.catalog import connected_graphs
from mngraph.core import Labeling, UnderlyingGraph

settings.register_profile("mngraph", deadline=None)
settings.load_profile("mngraph")

CATALOG_FIXTURE = os.path.join(os.path.dirname(__file__), "data", "connected_graphs_le9.txt.gz")

_CATALOG_CACHE: dict[int, list] = {}


def cached_connected_graphs(max_n: int) -> dict[int, list]:
    """Generate each catalog level once per test session."""
    top = max(_CATALOG_CACHE, default=0)
    if max_n > top:
        _CATALOG_CACHE.update(connected_graphs(max_n))
    return {n: _CATALOG_CACHE[n] for n in range(1, max_n + 1)}


@pytest.fixture(scope="session")
def catalog_path() -> str:
    if not os.path.exists(CATALOG_FIXTURE):
        pytest.skip("catalog fixture missing; regenerate with python -m mngraph.catalog 9 ...")
    return CATALOG_FIXTURE


@st.composite
def mixed_graphs(draw, max_vertices: int = 6, mn_options=((1, 1), (0, 2), (2, 0), (1, 0))):
    """Random small (m,n)-graphs via a random labeling of a random graph."""
    m, n = draw(st.sampled_from(mn_options))
    count = draw(st.integers(min_value=1, max_value=max_vertices))
    pairs = [(u, v) for u in range(count) for v in range(u + 1, count)]
    chosen = draw(
        st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))
        if pairs
        else st.just([])
    )
    graph = UnderlyingGraph(count, chosen)
    types = {
        e: draw(st.integers(min_value=0, max_value=2 * m + n - 1)) for e in graph.edges
    }
    return Labeling(m, n, types).apply(graph)
