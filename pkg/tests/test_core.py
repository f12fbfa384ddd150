import pytest
from hypothesis import given

from mngraph.core import (
    InputError,
    MixedGraph,
    ParseError,
    UnderlyingGraph,
    canonical_types,
    parse,
    serialize,
    serialize_underlying,
)
from mngraph.constructions import build_petersen_11, build_wagner_02
from mngraph.generators import petersen_graph

from conftest import mixed_graphs


def test_sign_convention_arc():
    g = MixedGraph(1, 1, 2, arcs=[(0, 1, 1)])
    assert g.sigma(0, 1) == 1
    assert g.sigma(1, 0) == -1


def test_sign_convention_edge():
    g = MixedGraph(1, 1, 2, edges=[(0, 1, 2)])
    assert g.sigma(0, 1) == 2
    assert g.sigma(1, 0) == 2


def test_neighbors_of_type_single_arc():
    g = MixedGraph(1, 0, 2, arcs=[(0, 1, 1)])
    assert g.neighbors_of_type(0, 1) == {1}
    assert g.neighbors_of_type(1, -1) == {0}
    assert g.neighbors_of_type(0, -1) == set()


def test_neighbors_of_type_wagner_fixture():
    # vertex 0 of the 8-vertex fixture meets 1 (cycle edge) and 4 (chord) by type 1
    g = build_wagner_02()
    assert g.neighbors_of_type(0, 1) == {1, 4}
    assert g.neighbors_of_type(0, 2) == {7}


def test_neighbors_of_type_rejects_bad_input():
    g = MixedGraph(1, 1, 2, arcs=[(0, 1, 1)])
    with pytest.raises(InputError):
        g.neighbors_of_type(5, 1)
    with pytest.raises(InputError):
        g.neighbors_of_type(0, 0)
    with pytest.raises(InputError):
        g.neighbors_of_type(0, 3)
    with pytest.raises(InputError):
        g.neighbors_of_type(0, -2)  # negative labels only reach -m


def test_constructor_rejects_duplicates_and_loops():
    with pytest.raises(InputError):
        MixedGraph(1, 1, 3, arcs=[(0, 1, 1)], edges=[(0, 1, 2)])
    with pytest.raises(InputError):
        MixedGraph(1, 1, 3, arcs=[(0, 0, 1)])
    with pytest.raises(InputError):
        MixedGraph(1, 1, 2, arcs=[(0, 1, 2)])  # arc label beyond m
    with pytest.raises(InputError):
        MixedGraph(1, 1, 2, edges=[(0, 1, 1)])  # edge label must exceed m


def test_type_count_sums_to_degree():
    g = build_petersen_11()
    for u in range(g.vertex_count):
        total = sum(len(g.neighbors_of_type(u, a)) for a in canonical_types(1, 1))
        assert total == g.degree(u)


@given(mixed_graphs())
def test_type_counts_partition_every_neighborhood(g):
    for u in range(g.vertex_count):
        total = sum(len(g.neighbors_of_type(u, a)) for a in canonical_types(g.m, g.n))
        assert total == g.degree(u)


def test_parse_basic():
    text = "mngraph v1\nm 1 n 1\nvertices 3\narc 0 1 1\nedge 1 2 2\n"
    g = parse(text)
    assert g.vertex_count == 3
    assert g.sigma(0, 1) == 1
    assert g.sigma(2, 1) == 2


def test_parse_comments_and_whitespace():
    text = "# header\nmngraph v1\n m 0 n 2 # two edge types\nvertices 2\n\nedge 0 1 2\n"
    g = parse(text)
    assert g.sigma(0, 1) == 2


@pytest.mark.parametrize(
    "body,fragment",
    [
        ("edge 0 1 1\n", "edge label"),  # under m=1,n=1 edge labels are {2}
        ("arc 0 1 1\nedge 0 1 2\n", "duplicate"),
        ("arc 0 0 1\n", "loop"),
        ("arc 0 1 9\n", "arc label"),
        ("frob 0 1 1\n", "expected"),
    ],
)
def test_parse_errors_name_the_problem(body, fragment):
    text = "mngraph v1\nm 1 n 1\nvertices 3\n" + body
    with pytest.raises(ParseError) as err:
        parse(text)
    assert fragment in str(err.value)


def test_parse_bad_header():
    with pytest.raises(ParseError):
        parse("mngraph v2\nm 1 n 1\nvertices 0\n")
    with pytest.raises(ParseError):
        parse("mngraph v1\nm 1\nvertices 0\n")
    with pytest.raises(ParseError):
        parse("mngraph v1\nm 1 n 1\n")


def test_underlying_examples():
    single = MixedGraph(1, 0, 2, arcs=[(0, 1, 1)])
    assert single.underlying().edges == ((0, 1),)
    assert build_petersen_11().underlying() == petersen_graph()
    edgeless = MixedGraph(1, 1, 4)
    assert edgeless.underlying().edge_count == 0


def test_underlying_graph_format_roundtrip():
    u = petersen_graph()
    text = serialize_underlying(u)
    assert parse(text).underlying() == u


@given(mixed_graphs())
def test_parse_serialize_roundtrip(g):
    assert parse(serialize(g)) == g


@given(mixed_graphs())
def test_sigma_pairing_invariant(g):
    for u in range(g.vertex_count):
        for v, s in g.neighbor_labels(u).items():
            back = g.sigma(v, u)
            if 1 <= abs(s) <= g.m:
                assert back == -s
            else:
                assert g.m < s <= g.m + g.n
                assert back == s


def test_underlying_graph_rejects_bad_edges():
    with pytest.raises(InputError):
        UnderlyingGraph(3, [(0, 0)])
    with pytest.raises(InputError):
        UnderlyingGraph(3, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        UnderlyingGraph(2, [(0, 5)])


def test_labeling_must_cover_exactly_the_edge_set():
    from mngraph.core import Labeling

    square = UnderlyingGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    partial = Labeling(1, 1, {(0, 1): 0, (1, 2): 1})
    with pytest.raises(InputError):
        partial.apply(square)
    full = Labeling(1, 1, {e: 2 for e in square.edges})
    g = full.apply(square)
    assert g.underlying() == square
