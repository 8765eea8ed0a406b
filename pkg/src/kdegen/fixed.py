"""Cliques of a fixed size, triangle listing and triangle removal.

A clique whose earliest-ranked vertex owns a forward subgraph is found only
in that subgraph; cliques lying entirely in the residual graph are found only
there.  So every clique is produced exactly once without a global seen-set.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations

from .graph import Graph, LocalGraph, SubgraphFamily, build_family


def _local_cliques(sub: LocalGraph, size: int) -> Iterator[tuple[int, ...]]:
    masks = sub.masks
    for combo in combinations(range(sub.n), size):
        if all(masks[a] >> b & 1 for i, a in enumerate(combo) for b in combo[i + 1 :]):
            yield combo


def list_l_cliques(g: Graph, l: int, family: SubgraphFamily | None = None) -> Iterator[tuple[int, ...]]:
    """Every clique of size ``l >= 3`` once, as a rank-sorted tuple of vertices.

    Candidate ``(l-1)``-subsets are taken lexicographically over local ids.
    """
    if l < 3:
        raise ValueError(f"clique size must be at least 3, got {l}")
    if family is None:
        family = build_family(g)
    for sub in family.subgraphs:
        if sub.n < l - 1:
            continue
        verts = sub.vertices
        for combo in _local_cliques(sub, l - 1):
            yield (sub.owner, *(verts[i] for i in combo))
    res = family.residual
    for combo in _local_cliques(res, l):
        yield tuple(res.vertices[i] for i in combo)


def count_l_cliques(g: Graph, l: int, family: SubgraphFamily | None = None) -> int:
    if l < 1:
        raise ValueError(f"clique size must be positive, got {l}")
    if l == 1:
        return g.n
    if l == 2:
        return g.m
    return sum(1 for _ in list_l_cliques(g, l, family))


def list_triangles(g: Graph, family: SubgraphFamily | None = None) -> Iterator[tuple[int, int, int]]:
    """Each triangle once: an edge ``u-w`` inside ``G_i`` closes ``{v_i, u, w}``."""
    if family is None:
        family = build_family(g)
    for sub in family.subgraphs:
        verts = sub.vertices
        for a, b in sub.edges():
            yield sub.owner, verts[a], verts[b]
    res = family.residual
    rv = res.vertices
    for a in range(res.n):
        later = res.masks[a] >> (a + 1)
        for b, c in combinations([a + 1 + j for j in range(later.bit_length()) if later >> j & 1], 2):
            if res.masks[b] >> c & 1:
                yield rv[a], rv[b], rv[c]


def triangle_edges(g: Graph, family: SubgraphFamily | None = None) -> set[tuple[int, int]]:
    """Edges (``u < v``) lying on at least one triangle."""
    marked = set()
    for a, b, c in list_triangles(g, family):
        for u, v in ((a, b), (a, c), (b, c)):
            marked.add((u, v) if u < v else (v, u))
    return marked


def remove_triangles(g: Graph, family: SubgraphFamily | None = None) -> Graph:
    """Delete every edge that lies on a triangle of ``g``; vertices are kept."""
    marked = triangle_edges(g, family)
    return Graph.from_edges(g.n, (e for e in g.edges() if e not in marked))
