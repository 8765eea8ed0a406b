import pytest
from hypothesis import given, settings

from kdegen.generators import complete, cycle, path
from kdegen.graph import Graph
from kdegen.oracle import (
    OracleSizeError,
    oracle_l_cliques,
    oracle_max_clique,
    oracle_maximal_bicliques,
    oracle_maximal_cliques,
    oracle_min_vertex_cover,
    oracle_triangles,
)

from .conftest import graphs


def test_examples():
    assert oracle_maximal_cliques(complete(3)) == {frozenset({0, 1, 2})}
    assert oracle_maximal_cliques(path(3)) == {frozenset({0, 1}), frozenset({1, 2})}
    assert oracle_maximal_cliques(Graph.empty(3)) == {frozenset({v}) for v in range(3)}
    assert len(oracle_triangles(complete(4))) == 4
    assert len(oracle_min_vertex_cover(cycle(5))) == 3
    assert oracle_maximal_bicliques(cycle(4)) == {((0, 2), (1, 3))}


def test_size_guards():
    with pytest.raises(OracleSizeError):
        oracle_maximal_cliques(Graph.empty(26))
    with pytest.raises(OracleSizeError):
        oracle_maximal_bicliques(Graph.empty(15))


@settings(max_examples=100)
@given(graphs(max_n=10))
def test_max_clique_agrees_with_l_clique_counts(g):
    omega = len(oracle_max_clique(g))
    assert all(oracle_l_cliques(g, l) for l in range(1, omega + 1))
    assert not oracle_l_cliques(g, omega + 1)
    assert oracle_triangles(g) == oracle_l_cliques(g, 3)
    assert max((len(c) for c in oracle_maximal_cliques(g)), default=0) == omega
