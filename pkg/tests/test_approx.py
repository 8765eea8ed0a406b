from fractions import Fraction

import pytest
from hypothesis import given, settings

from kdegen.approx import (
    EXACT,
    GREEDY,
    CliqueSolver,
    half_integral_lp,
    max_clique_approx,
    max_clique_exact,
    vertex_cover_approx,
)
from kdegen.generators import complete, complete_multipartite, cycle, petersen, random_k_degenerate, star
from kdegen.graph import Graph
from kdegen.oracle import oracle_max_clique, oracle_min_vertex_cover

from .conftest import graphs


def _is_cover(g, cover):
    cs = set(cover)
    return all(u in cs or v in cs for u, v in g.edges())


def test_star_cover_is_centre():
    res = vertex_cover_approx(star(5))
    assert res.cover == (0,)
    assert res.lp_lower_bound == 1


def test_c4_cover():
    res = vertex_cover_approx(cycle(4))
    assert res.size == 2 == len(oracle_min_vertex_cover(cycle(4)))


def test_k4_cover():
    res = vertex_cover_approx(complete(4))
    assert res.k == 3 and res.size == 3
    assert res.lp_lower_bound == 2


def test_edgeless_cover_empty():
    res = vertex_cover_approx(Graph.empty(3))
    assert res.cover == () and res.ratio_certificate == 1


def test_lp_half_integral_on_odd_cycle():
    assert half_integral_lp(cycle(5)) == [Fraction(1, 2)] * 5


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_lp_is_feasible_and_half_integral(g):
    x = half_integral_lp(g)
    assert set(x) <= {0, Fraction(1, 2), 1}
    assert all(x[u] + x[v] >= 1 for u, v in g.edges())
    assert sum(x) <= len(oracle_min_vertex_cover(g))


@pytest.mark.parametrize("eliminate", [False, True])
@settings(max_examples=150, deadline=None)
@given(g=graphs(max_n=12))
def test_cover_ratio(g, eliminate):
    res = vertex_cover_approx(g, eliminate_triangles=eliminate)
    assert _is_cover(g, res.cover)
    opt = len(oracle_min_vertex_cover(g))
    assert res.lp_lower_bound <= opt <= res.size
    if res.k >= 1:
        assert res.size <= (2 - Fraction(1, res.k)) * opt


def test_max_clique_examples():
    assert len(max_clique_exact(complete(5))) == 5
    assert len(max_clique_exact(petersen())) == 2
    chord = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    assert sorted(max_clique_exact(chord)) == [0, 1, 2]
    assert len(max_clique_exact(Graph.empty(3))) == 1
    assert max_clique_exact(Graph.empty(0)) == ()


def test_greedy_solver_on_k33():
    g = complete_multipartite([3, 3])
    found = max_clique_approx(g, GREEDY)
    assert len(found) == 2 == len(oracle_max_clique(g))
    assert g.has_edge(*found)


def test_max_clique_approx_empty_graph():
    assert len(max_clique_approx(Graph.empty(3), GREEDY)) == 1


def test_bad_solver_is_reported():
    liar = CliqueSolver("liar", lambda h: list(range(h.n)), 1.0)
    with pytest.raises(ValueError, match="non-clique"):
        max_clique_approx(cycle(5), liar)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=13))
def test_max_clique_matches_oracle(g):
    best = max_clique_exact(g)
    assert len(best) == len(oracle_max_clique(g))
    assert all(g.has_edge(u, v) for i, u in enumerate(best) for v in best[i + 1 :])
    assert len(max_clique_approx(g, EXACT)) == len(best)
    greedy = max_clique_approx(g, GREEDY)
    assert all(g.has_edge(u, v) for i, u in enumerate(greedy) for v in greedy[i + 1 :])


def test_larger_graph_cover_valid():
    g = random_k_degenerate(2000, 5, seed=1)
    res = vertex_cover_approx(g)
    assert _is_cover(g, res.cover)
    assert res.size <= (2 - Fraction(1, res.k)) * res.lp_lower_bound * 2
