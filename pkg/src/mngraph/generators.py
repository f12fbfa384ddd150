"""Small catalog of named underlying graphs used by constructions and tests."""

from __future__ import annotations

from itertools import combinations

from .core import UnderlyingGraph


def path_graph(k: int) -> UnderlyingGraph:
    return UnderlyingGraph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> UnderlyingGraph:
    return UnderlyingGraph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> UnderlyingGraph:
    return UnderlyingGraph(k, list(combinations(range(k), 2)))


def star_graph(leaves: int) -> UnderlyingGraph:
    return UnderlyingGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> UnderlyingGraph:
    return UnderlyingGraph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> UnderlyingGraph:
    """Outer cycle 0..4, inner vertices 5..9, spokes i -- i+5, pentagram step 2."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return UnderlyingGraph(10, edges)


def wagner_graph() -> UnderlyingGraph:
    """The Moebius ladder V8: an 8-cycle plus the four antipodal chords."""
    edges = [(i, (i + 1) % 8) for i in range(8)]
    edges += [(i, i + 4) for i in range(4)]
    return UnderlyingGraph(8, edges)
