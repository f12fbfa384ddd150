import random

import pytest

from mngraph.core import InputError, MixedGraph
from mngraph.constructions import build_c5_02, build_petersen_11, build_star, build_wagner_02
from mngraph.recognizers import max_degree
from mngraph.verification import (
    DEFAULT_MN_LIST,
    SUITE_IDS,
    random_mixed_graph,
    verify_bound_properties,
    verify_degeneracy_bound,
    verify_lemma1_equivalence,
    verify_max_degree_cap,
    verify_sandwich,
    verify_theorem_suite,
)


def test_verify_sandwich_examples():
    rec = verify_sandwich(build_star(1, 1))
    assert rec.passed
    assert rec.computed == "4 <= 4 <= 4"
    rec = verify_sandwich(build_c5_02())
    assert rec.passed
    assert rec.computed.startswith("3 <= 4 <= ")
    two_path = MixedGraph(0, 2, 3, edges=[(0, 1, 2), (1, 2, 2)])
    rec = verify_sandwich(two_path)
    assert rec.passed
    assert rec.computed == "2 <= 2 <= 2"


def test_verify_degeneracy_bound_examples():
    rec = verify_degeneracy_bound(build_petersen_11())
    assert rec.passed
    assert rec.computed == "9"  # G^2 is K10, bound floor(2*9/3)+3 = 9, tight
    assert rec.claimed == "<= 9"
    rec = verify_degeneracy_bound(build_star(0, 2))
    assert rec.passed
    assert rec.computed == "2"
    assert rec.claimed == "<= 4"


def test_verify_degeneracy_bound_rejects_excluded_case():
    g = MixedGraph(0, 1, 2, edges=[(0, 1, 1)])
    with pytest.raises(InputError):
        verify_degeneracy_bound(g)


def test_verify_max_degree_cap_examples():
    rec = verify_max_degree_cap(build_wagner_02())
    assert rec.passed and rec.computed == "8" and rec.claimed == "<= 10"
    rec = verify_max_degree_cap(build_petersen_11())
    assert rec.passed and rec.computed == "10" and rec.claimed == "<= 10"


def test_verify_degeneracy_bound_randomized():
    rng = random.Random(6)
    for _ in range(100):
        g = random_mixed_graph(rng, 1, 1, max_vertices=10, max_degree_target=6)
        assert verify_degeneracy_bound(g).passed


def test_verify_max_degree_cap_random_subcubic():
    rng = random.Random(8)
    for _ in range(60):
        g = random_mixed_graph(rng, 0, 2, max_vertices=10, max_degree_target=3)
        assert verify_max_degree_cap(g).passed


@pytest.mark.parametrize("suite", SUITE_IDS)
def test_theorem_suites_pass(suite):
    report = verify_theorem_suite(suite)
    assert report.passed, report.text()


def test_unknown_suite_rejected():
    with pytest.raises(InputError):
        verify_theorem_suite("nonsense")


def test_excluded_mn_rejected_by_suites():
    with pytest.raises(InputError) as err:
        verify_theorem_suite("trees", mn_list=((0, 1),))
    assert "(0, 1)" in str(err.value)


def test_lemma1_small_corpus():
    rng = random.Random(0)
    corpus = [random_mixed_graph(rng, 1, 1, max_vertices=5) for _ in range(30)]
    report = verify_lemma1_equivalence(corpus=corpus)
    assert report.passed


def test_bound_properties_sampled():
    report = verify_bound_properties(seed=1, samples=40)
    assert report.passed


def test_reports_are_deterministic_and_stable():
    a = verify_theorem_suite("partial2tree", seed=0)
    b = verify_theorem_suite("partial2tree", seed=0)
    assert a.text() == b.text()
    assert a.tsv() == b.tsv()
    assert a.tsv().splitlines()[0] == "suite\tcheck\tclaim\tclaimed\tcomputed\tpass"


def test_report_line_format():
    report = verify_theorem_suite("trees")
    line = report.records[0].line()
    assert line.startswith("trees/star(1,0): claimed=")
    assert line.endswith("PASS")


def test_random_mixed_graph_respects_limits():
    rng = random.Random(2)
    for _ in range(50):
        g = random_mixed_graph(rng, 0, 2, max_vertices=12, max_degree_target=6)
        assert 2 <= g.vertex_count <= 12
        assert max_degree(g.underlying()) <= 6
        assert (g.m, g.n) == (0, 2)


def test_default_mn_list():
    assert DEFAULT_MN_LIST == ((1, 0), (0, 2), (1, 1), (2, 0), (0, 3))
