from collections import Counter

import pytest
from hypothesis import given, settings

from kdegen.cliques import (
    bron_kerbosch_pivot,
    count_maximal_cliques,
    eppstein_maximal_cliques,
    iter_candidates,
    iter_maximal_cliques,
    list_maximal_cliques,
)
from kdegen.generators import complete, complete_multipartite, cycle, path, petersen, random_k_degenerate
from kdegen.graph import Graph, build_family
from kdegen.oracle import oracle_maximal_cliques

from .conftest import graphs, random_graphs


def _sets(cliques):
    return {frozenset(c) for c in cliques}


def test_bk_triangle():
    assert list(bron_kerbosch_pivot(complete(3))) == [[0, 1, 2]]


def test_bk_path():
    assert sorted(bron_kerbosch_pivot(path(3))) == [[0, 1], [1, 2]]


def test_bk_c5():
    found = list(bron_kerbosch_pivot(cycle(5)))
    assert len(found) == 5
    assert _sets(found) == oracle_maximal_cliques(cycle(5))


@settings(max_examples=150)
@given(graphs(max_n=12))
def test_bk_matches_oracle(g):
    found = list(bron_kerbosch_pivot(g))
    assert len(found) == len(_sets(found))
    assert _sets(found) == oracle_maximal_cliques(g)


def test_k4_single_clique_with_rejections():
    report = list_maximal_cliques(complete(4))
    assert [sorted(c) for c in report] == [[0, 1, 2, 3]]
    assert sum(report.rejected) >= 1


def test_petersen_fifteen_edges():
    report = list_maximal_cliques(petersen())
    assert len(report) == 15
    assert all(len(c) == 2 for c in report)


def test_complete_tripartite():
    g = complete_multipartite([3, 3, 3])
    report = list_maximal_cliques(g)
    assert len(report) == 27
    assert all(len(c) == 3 for c in report)
    assert count_maximal_cliques(g) == 27


@pytest.mark.parametrize("g, count", [(Graph.empty(1), 1), (Graph.empty(5), 5), (Graph.empty(0), 0)])
def test_count_trivial(g, count):
    assert count_maximal_cliques(g) == count


def test_words_are_rank_sorted():
    g = random_k_degenerate(200, 4, seed=1)
    fam = build_family(g)
    rank = fam.ordering.rank
    for w in iter_maximal_cliques(g, fam):
        assert list(w) == sorted(w, key=rank.__getitem__)
        assert len(w) <= fam.k + 1


def _check_against_oracle(g, **kw):
    report = list_maximal_cliques(g, debug=True, **kw)
    got = [frozenset(c) for c in report]
    assert len(got) == len(set(got))
    assert set(got) == oracle_maximal_cliques(g)
    return report


@pytest.mark.parametrize("skip_unseen", [True, False])
def test_random_graphs_match_oracle(skip_unseen):
    for g in random_graphs(100, 25, seed=11):
        _check_against_oracle(g, skip_unseen=skip_unseen)


@settings(max_examples=150)
@given(graphs(max_n=12))
def test_pipeline_properties(g):
    report = _check_against_oracle(g)
    cliques = list(report)
    for c in cliques:
        cs = set(c)
        for v in range(g.n):
            if v not in cs:
                assert not all(g.has_edge(v, u) for u in cs)
    # a rejected word is a proper suffix of an accepted word that strictly contains it
    for w, witness in report.witnesses:
        assert len(witness) > len(w) and witness[-len(w):] == w
        assert set(w) < set(witness)
    assert sum(report.accepted) == len(cliques)
    assert sum(report.rejected) == len(report.witnesses)


@settings(max_examples=100)
@given(graphs(max_n=11))
def test_each_maximal_clique_from_exactly_one_piece(g):
    fam = build_family(g)
    per_piece = Counter()
    for i, w in set(iter_candidates(fam)):
        per_piece[frozenset(w)] += 1
    for c in oracle_maximal_cliques(g):
        assert per_piece[c] == 1


@settings(max_examples=100)
@given(graphs(max_n=11))
def test_residual_candidates_never_nest(g):
    fam = build_family(g)
    residual = len(fam.subgraphs)
    words = [frozenset(w) for i, w in iter_candidates(fam) if i == residual]
    for a in words:
        for b in words:
            assert a == b or not a < b


def test_threads_do_not_change_output():
    g = random_k_degenerate(500, 5, seed=3)
    assert list(iter_maximal_cliques(g, threads=4)) == list(iter_maximal_cliques(g))


def test_output_deterministic():
    g = random_k_degenerate(300, 4, seed=9)
    assert list(iter_maximal_cliques(g)) == list(iter_maximal_cliques(g))


def test_eppstein_cross_check_on_larger_graphs():
    for seed in range(3):
        g = random_k_degenerate(400, 6, seed=seed)
        ours = [frozenset(c) for c in iter_maximal_cliques(g)]
        assert len(ours) == len(set(ours))
        assert set(ours) == set(eppstein_maximal_cliques(g))


def test_report_counters_and_timings():
    g = random_k_degenerate(50, 3, seed=2)
    report = list_maximal_cliques(g)
    fam = build_family(g)
    assert len(report.accepted) == len(fam.subgraphs) + 1
    assert set(report.timings) == {"family", "enumerate", "dedup"}
