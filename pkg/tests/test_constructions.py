import itertools
import random

import pytest

from mngraph.catalog import masks_to_graph
from mngraph.constructions import (
    admits_proper_edge_coloring,
    build_c5_02,
    build_from_diameter2,
    build_girth5_planar_six,
    build_partial2tree_extremal,
    build_petersen_11,
    build_star,
    build_trianglefree_extremal,
    build_vizing_edge_coloring,
    build_wagner_02,
    is_proper_edge_coloring,
)
from conftest import cached_connected_graphs
from mngraph.core import InputError, MixedGraph, UnderlyingGraph
from mngraph.generators import cycle_graph, path_graph, petersen_graph, wagner_graph
from mngraph.recognizers import diameter, girth, is_partial_2_tree, is_planar, max_degree
from mngraph.seeing import sees
from mngraph.solvers import (
    absolute_clique_number,
    is_absolute_clique,
    relative_clique_number,
)

MN_LIST = [(1, 0), (0, 2), (1, 1), (2, 0), (0, 3)]


def _all_incident_types_distinct(g: MixedGraph) -> bool:
    for x in range(g.vertex_count):
        labels = list(g.neighbor_labels(x).values())
        if len(labels) != len(set(labels)):
            return False
    return True


# -- edge coloring ------------------------------------------------------------


def test_vizing_path():
    g = path_graph(4)
    col = build_vizing_edge_coloring(g)
    assert is_proper_edge_coloring(g, col)
    assert col.color_count() <= 3


def test_vizing_c5_uses_exactly_three_colors():
    g = cycle_graph(5)
    col = build_vizing_edge_coloring(g)
    assert is_proper_edge_coloring(g, col)
    assert col.color_count() == 3
    assert not admits_proper_edge_coloring(g, 2)


def test_vizing_petersen_uses_exactly_four_colors():
    g = petersen_graph()
    col = build_vizing_edge_coloring(g)
    assert is_proper_edge_coloring(g, col)
    assert col.color_count() == 4
    assert not admits_proper_edge_coloring(g, 3)
    assert admits_proper_edge_coloring(g, 4)


def test_vizing_on_all_connected_graphs_up_to_7():
    catalog = cached_connected_graphs(7)
    for n in range(2, 8):
        for masks in catalog[n]:
            g = masks_to_graph(masks)
            col = build_vizing_edge_coloring(g)
            assert is_proper_edge_coloring(g, col), masks
            assert col.color_count() <= max_degree(g) + 1, masks


def test_vizing_on_random_graphs():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randint(2, 12)
        edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < 0.45]
        g = UnderlyingGraph(n, edges)
        col = build_vizing_edge_coloring(g)
        assert is_proper_edge_coloring(g, col)
        assert col.color_count() <= max_degree(g) + 1


# -- diameter-2 conversion ------------------------------------------------------


def test_build_from_diameter2_c5():
    g = build_from_diameter2(cycle_graph(5), 1, 1)
    assert g.underlying() == cycle_graph(5)
    assert is_absolute_clique(g)
    assert _all_incident_types_distinct(g)


def test_build_from_diameter2_petersen():
    g = build_from_diameter2(petersen_graph(), 2, 0)
    assert g.underlying() == petersen_graph()
    assert is_absolute_clique(g)
    assert _all_incident_types_distinct(g)


def test_build_from_diameter2_k2():
    g = build_from_diameter2(path_graph(2), 1, 0)
    assert g.arc_records() == [(0, 1, 1)]
    assert absolute_clique_number(g).value == 2


def test_build_from_diameter2_other_mn():
    for m, n in [(0, 3), (1, 1), (2, 0), (0, 4)]:
        g = build_from_diameter2(cycle_graph(5), m, n)
        assert is_absolute_clique(g)
        assert _all_incident_types_distinct(g)


def test_build_from_diameter2_errors_name_the_bound():
    with pytest.raises(InputError) as err:
        build_from_diameter2(path_graph(4), 2, 2)  # diameter 3
    assert "diameter" in str(err.value)
    with pytest.raises(InputError) as err:
        build_from_diameter2(cycle_graph(5), 1, 0)  # Delta = 2m+n = 2
    assert "Delta" in str(err.value)
    with pytest.raises(InputError) as err:
        build_from_diameter2(UnderlyingGraph(4, [(0, 1), (2, 3)]), 1, 1)
    assert "diameter" in str(err.value)


# -- stars ---------------------------------------------------------------------


def test_star_1_0_exact_records():
    g = build_star(1, 0)
    assert g.vertex_count == 3
    assert g.arc_records() == [(0, 1, 1), (2, 0, 1)]


def test_star_0_2_exact_records():
    g = build_star(0, 2)
    assert g.vertex_count == 3
    assert g.edge_records() == [(0, 1, 1), (0, 2, 2)]


def test_star_1_1_absolute():
    g = build_star(1, 1)
    assert g.vertex_count == 4
    assert absolute_clique_number(g).value == 4


@pytest.mark.parametrize("mn", MN_LIST)
def test_star_orders_and_property(mn):
    m, n = mn
    g = build_star(m, n)
    assert g.vertex_count == 2 * m + n + 1
    assert is_absolute_clique(g)
    assert girth(g.underlying()) is None


def test_star_rejects_excluded_cases():
    with pytest.raises(InputError):
        build_star(0, 1)
    with pytest.raises(InputError):
        build_star(0, 0)


# -- partial 2-tree extremal -----------------------------------------------------


@pytest.mark.parametrize(
    "mn,order", [((1, 0), 7), ((0, 2), 7), ((1, 1), 13), ((2, 0), 21), ((0, 3), 13)]
)
def test_partial2tree_extremal(mn, order):
    m, n = mn
    g = build_partial2tree_extremal(m, n)
    assert g.vertex_count == order
    assert is_absolute_clique(g)
    und = g.underlying()
    assert is_partial_2_tree(und)
    assert girth(und) == 3


@pytest.mark.parametrize(
    "mn,order", [((0, 2), 6), ((1, 1), 11), ((1, 0), 6), ((2, 0), 18), ((0, 3), 11)]
)
def test_trianglefree_extremal(mn, order):
    m, n = mn
    g = build_trianglefree_extremal(m, n)
    assert g.vertex_count == order
    assert is_absolute_clique(g)
    und = g.underlying()
    assert girth(und) == 4
    assert is_partial_2_tree(und)
    assert und.degree(0) == (2 * m + n) ** 2
    assert und.degree(1) == (2 * m + n) ** 2


def test_extremal_builders_reject_excluded_cases():
    for builder in (build_partial2tree_extremal, build_trianglefree_extremal):
        with pytest.raises(InputError):
            builder(0, 1)
        with pytest.raises(InputError):
            builder(0, 0)


# -- figure fixtures --------------------------------------------------------------


def test_petersen_fixture():
    g = build_petersen_11()
    assert (g.m, g.n, g.vertex_count) == (1, 1, 10)
    assert is_absolute_clique(g)
    und = g.underlying()
    assert und == petersen_graph()
    assert all(und.degree(v) == 3 for v in range(10))
    assert diameter(und) == 2


def test_wagner_fixture():
    g = build_wagner_02()
    assert (g.m, g.n, g.vertex_count) == (0, 2, 8)
    assert len(g.edge_records()) == 12
    assert is_absolute_clique(g)
    und = g.underlying()
    assert und == wagner_graph()
    assert all(und.degree(v) == 3 for v in range(8))
    assert girth(und) == 4


def test_c5_fixture():
    g = build_c5_02()
    assert relative_clique_number(g).value == 4
    assert absolute_clique_number(g).value == 3
    assert girth(g.underlying()) == 5
    # exactly the quoted labeling, shifted to 0-based vertices
    assert g.sigma(0, 1) == 1 and g.sigma(2, 3) == 1 and g.sigma(4, 0) == 1
    assert g.sigma(1, 2) == 2 and g.sigma(3, 4) == 2


# -- planar girth-5 witness --------------------------------------------------------


def test_girth5_planar_six():
    g = build_girth5_planar_six(1, 1)
    assert g.vertex_count == 11
    und = g.underlying()
    assert is_planar(und)
    assert girth(und) == 5
    witness = range(6)
    assert all(sees(g, a, b) for a, b in itertools.combinations(witness, 2))
    assert relative_clique_number(g).value == 6


@pytest.mark.parametrize("mn", [(0, 3), (2, 0), (1, 2)])
def test_girth5_planar_six_other_mn(mn):
    g = build_girth5_planar_six(*mn)
    assert relative_clique_number(g).value >= 6
    assert girth(g.underlying()) == 5
    assert is_planar(g.underlying())


def test_girth5_planar_six_rejects_small_types():
    with pytest.raises(InputError):
        build_girth5_planar_six(1, 0)
    with pytest.raises(InputError):
        build_girth5_planar_six(0, 2)
