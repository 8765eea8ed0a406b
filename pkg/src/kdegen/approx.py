"""Approximate vertex cover and maximum clique on graphs of small degeneracy.

Vertex cover: the half-integral LP optimum is read off a maximum matching of
the bipartite double cover (Nemhauser-Trotter).  Vertices at 1 join the
cover; the vertices at 1/2 induce a graph of degeneracy ``k' <= k`` that is
greedily ``(k'+1)``-coloured, and all of them except the largest colour class
join the cover.  The ratio is at most ``2 - 2/(k'+1) <= 2 - 1/k``.

Maximum clique: run a solver on every closed forward neighbourhood and on
the residual graph and keep the largest answer.  A solver with ratio ``beta``
on these small graphs gives ratio ``beta`` overall.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Collection
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .fixed import list_triangles
from .graph import Graph, SubgraphFamily, bits, build_family, degeneracy_ordering, induced_subgraph


@dataclass(frozen=True)
class VertexCoverResult:
    cover: tuple[int, ...]
    lp_lower_bound: Fraction
    ratio_certificate: Fraction
    k: int

    @property
    def size(self) -> int:
        return len(self.cover)


def half_integral_lp(g: Graph) -> list[Fraction]:
    """Optimal vertex-cover LP solution with values in {0, 1/2, 1}."""
    n = g.n
    if g.m == 0:
        return [Fraction(0)] * n
    rows = np.repeat(np.arange(n), [len(a) for a in g.adj])
    cols = np.fromiter((u for a in g.adj for u in a), dtype=np.int64, count=len(rows))
    bip = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    match_left = maximum_bipartite_matching(bip, perm_type="column")
    match_right = [-1] * n
    for left, right in enumerate(match_left):
        if right >= 0:
            match_right[right] = left
    # Konig: Z = vertices reachable from free left vertices by alternating paths
    left_z = [match_left[v] < 0 for v in range(n)]
    right_z = [False] * n
    queue = deque(v for v in range(n) if left_z[v])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if not right_z[u]:
                right_z[u] = True
                w = match_right[u]
                if w >= 0 and not left_z[w]:
                    left_z[w] = True
                    queue.append(w)
    half = Fraction(1, 2)
    return [half * ((not left_z[v]) + right_z[v]) for v in range(n)]


def _greedy_coloring(g: Graph) -> list[int]:
    """Colour in reverse degeneracy order; each vertex sees at most ``k`` coloured neighbours."""
    ordering = degeneracy_ordering(g)
    color = [-1] * g.n
    for v in reversed(ordering.order):
        used = {color[u] for u in g.adj[v]}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


def _nt_cover(g: Graph) -> list[int]:
    x = half_integral_lp(g)
    cover = [v for v in range(g.n) if x[v] == 1]
    halves = [v for v in range(g.n) if x[v] == Fraction(1, 2)]
    if halves:
        h, vmap = induced_subgraph(g, halves)
        color = _greedy_coloring(h)
        sizes = [0] * (max(color) + 1)
        for c in color:
            sizes[c] += 1
        keep = sizes.index(max(sizes))
        cover += [vmap[i] for i in range(h.n) if color[i] != keep]
    return cover


def vertex_cover_approx(g: Graph, eliminate_triangles: bool = False) -> VertexCoverResult:
    """A vertex cover within ``2 - 1/k`` of optimum, ``k`` the degeneracy of ``g``.

    With ``eliminate_triangles`` a maximal family of vertex-disjoint triangles
    (found with the triangle lister) is put into the cover first; each costs
    3 against an optimum of at least 2, which stays within ``2 - 1/k`` for
    ``k >= 2``.
    """
    k = degeneracy_ordering(g).k
    lp = sum(half_integral_lp(g), Fraction(0))
    if eliminate_triangles:
        taken: set[int] = set()
        for tri in list_triangles(g):
            if not taken.intersection(tri):
                taken.update(tri)
        rest, vmap = induced_subgraph(g, [v for v in range(g.n) if v not in taken])
        cover = sorted(taken) + [vmap[v] for v in _nt_cover(rest)]
    else:
        cover = _nt_cover(g)
    cover = tuple(sorted(cover))
    ratio = Fraction(len(cover)) / lp if lp else Fraction(1)
    return VertexCoverResult(cover, lp, ratio, k)


@dataclass(frozen=True)
class CliqueSolver:
    """A maximum-clique routine for small graphs and its approximation ratio."""

    name: str
    solve: Callable[[Graph], Collection[int]]
    ratio: float


def exact_max_clique(g: Graph) -> list[int]:
    """Branch and bound over bitmasks; prunes when ``|R| + |P|`` cannot beat the best."""
    masks = [sum(1 << u for u in a) for a in g.adj]
    best = 0
    best_size = 0
    stack = [(0, 0, (1 << g.n) - 1)]
    while stack:
        r, rsize, p = stack.pop()
        if not p:
            if rsize > best_size:
                best, best_size = r, rsize
            continue
        if rsize + bin(p).count("1") <= best_size:
            continue
        for v in bits(p):
            stack.append((r | 1 << v, rsize + 1, p & masks[v]))
            p &= ~(1 << v)
            if rsize + bin(p).count("1") <= best_size:
                break
    return bits(best)


def greedy_max_clique(g: Graph) -> list[int]:
    """Repeatedly add the highest-degree vertex adjacent to everything chosen so far."""
    cand = set(range(g.n))
    clique: list[int] = []
    while cand:
        v = max(sorted(cand), key=g.degree)
        clique.append(v)
        cand &= g.neighbors(v)
    return sorted(clique)


EXACT = CliqueSolver("exact", exact_max_clique, 1.0)
GREEDY = CliqueSolver("greedy", greedy_max_clique, float("inf"))
SOLVERS = {s.name: s for s in (EXACT, GREEDY)}


def max_clique_approx(g: Graph, solver: CliqueSolver, family: SubgraphFamily | None = None) -> tuple[int, ...]:
    """Largest clique the solver finds over all closed forward neighbourhoods and the residual."""
    if family is None:
        family = build_family(g)
    best: tuple[int, ...] = ()
    for sub in (*family.subgraphs, family.residual):
        bound = sub.n + (sub.owner is not None)
        if bound <= len(best):
            continue
        h, vmap = sub.to_graph(closed=True)
        found = [vmap[i] for i in solver.solve(h)]
        if any(not g.has_edge(u, v) for i, u in enumerate(found) for v in found[i + 1 :]):
            raise ValueError(f"solver {solver.name!r} returned a non-clique")
        if len(found) > len(best):
            best = tuple(sorted(found))
    return best


def max_clique_exact(g: Graph, family: SubgraphFamily | None = None) -> tuple[int, ...]:
    return max_clique_approx(g, EXACT, family)
