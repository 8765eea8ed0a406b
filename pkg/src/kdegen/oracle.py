"""Brute-force reference answers for small graphs.

Everything here works from plain adjacency sets and exhaustive enumeration
and deliberately shares no code with the main algorithms.  Size guards raise
:class:`OracleSizeError` instead of running for hours.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph

SUBSET_LIMIT = 25
PAIR_LIMIT = 14


class OracleSizeError(ValueError):
    pass


def _guard(g: Graph, limit: int) -> list[set[int]]:
    if g.n > limit:
        raise OracleSizeError(f"oracle limited to n <= {limit}, got n={g.n}")
    return [set(a) for a in g.adj]


def _is_clique(adj: list[set[int]], vs) -> bool:
    return all(v in adj[u] for u, v in combinations(vs, 2))


def _is_independent(adj: list[set[int]], vs) -> bool:
    return all(v not in adj[u] for u, v in combinations(vs, 2))


def _common(adj: list[set[int]], n: int, vs) -> frozenset[int]:
    return frozenset(w for w in range(n) if all(w in adj[v] for v in vs))


def oracle_maximal_cliques(g: Graph) -> set[frozenset[int]]:
    """All maximal cliques, by unpruned recursion over clique extensions."""
    adj = _guard(g, SUBSET_LIMIT)
    found: set[frozenset[int]] = set()

    def grow(clique: list[int], start: int) -> None:
        extendable = [v for v in range(g.n) if v not in clique and all(v in adj[u] for u in clique)]
        if not extendable:
            found.add(frozenset(clique))
        for v in range(start, g.n):
            if v in extendable:
                clique.append(v)
                grow(clique, v + 1)
                clique.pop()

    if g.n:
        grow([], 0)
    return found


def oracle_l_cliques(g: Graph, l: int) -> set[frozenset[int]]:
    adj = _guard(g, SUBSET_LIMIT)
    return {frozenset(c) for c in combinations(range(g.n), l) if _is_clique(adj, c)}


def oracle_triangles(g: Graph) -> set[frozenset[int]]:
    adj = [set(a) for a in g.adj]
    out = set()
    for a in range(g.n):
        for b in range(a + 1, g.n):
            for c in range(b + 1, g.n):
                if b in adj[a] and c in adj[a] and c in adj[b]:
                    out.add(frozenset((a, b, c)))
    return out


def oracle_max_clique(g: Graph) -> frozenset[int]:
    adj = _guard(g, SUBSET_LIMIT)
    for size in range(g.n, 0, -1):
        for c in combinations(range(g.n), size):
            if _is_clique(adj, c):
                return frozenset(c)
    return frozenset()


def oracle_max_independent_set(g: Graph) -> frozenset[int]:
    adj = _guard(g, SUBSET_LIMIT)
    for size in range(g.n, 0, -1):
        for c in combinations(range(g.n), size):
            if _is_independent(adj, c):
                return frozenset(c)
    return frozenset()


def oracle_min_vertex_cover(g: Graph) -> frozenset[int]:
    adj = _guard(g, SUBSET_LIMIT)
    edges = [(u, v) for u in range(g.n) for v in adj[u] if u < v]
    for size in range(g.n + 1):
        for c in combinations(range(g.n), size):
            cs = set(c)
            if all(u in cs or v in cs for u, v in edges):
                return frozenset(c)
    raise AssertionError("unreachable")


def oracle_degeneracy(g: Graph) -> int:
    """Max over all vertex subsets of the minimum degree of the induced subgraph."""
    adj = _guard(g, 16)
    best = 0
    for mask in range(1, 1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        best = max(best, min(sum(1 for u in vs if u in adj[v]) for v in vs))
    return best


def oracle_common_neighbors(g: Graph, a) -> frozenset[int]:
    adj = [set(x) for x in g.adj]
    return _common(adj, g.n, list(a))


def _canon(a, b) -> tuple[tuple[int, ...], tuple[int, ...]]:
    a, b = tuple(sorted(a)), tuple(sorted(b))
    return (a, b) if a <= b else (b, a)


def oracle_maximal_bicliques(g: Graph) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Non-induced maximal bicliques with unordered, disjoint, nonempty sides.

    For every nonempty side ``b`` the only candidate partner is its full common
    neighbourhood ``a``; the pair is kept when nothing outside ``b`` is adjacent
    to all of ``a``.
    """
    adj = _guard(g, PAIR_LIMIT)
    out = set()
    for mask in range(1, 1 << g.n):
        b = [v for v in range(g.n) if mask >> v & 1]
        a = _common(adj, g.n, b)
        if not a:
            continue
        if any(w not in b and all(w in adj[x] for x in a) for w in range(g.n)):
            continue
        out.add(_canon(a, b))
    return out


def oracle_maximal_induced_bicliques(g: Graph) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Induced bicliques (both sides independent) that no vertex can extend."""
    adj = _guard(g, PAIR_LIMIT)
    n = g.n
    out = set()
    indep = [
        [v for v in range(n) if mask >> v & 1]
        for mask in range(1, 1 << n)
        if _is_independent(adj, [v for v in range(n) if mask >> v & 1])
    ]
    for b in indep:
        cand = [w for w in _common(adj, n, b)]
        # a must be a maximal independent set inside the common neighbourhood of b
        for size in range(1, len(cand) + 1):
            for a in combinations(cand, size):
                if not _is_independent(adj, a):
                    continue
                ext_a = any(
                    w not in a and w not in b and all(w in adj[y] for y in b) and all(w not in adj[x] for x in a)
                    for w in range(n)
                )
                ext_b = any(
                    w not in a and w not in b and all(w in adj[x] for x in a) and all(w not in adj[y] for y in b)
                    for w in range(n)
                )
                if not ext_a and not ext_b:
                    out.add(_canon(a, b))
    return out


def oracle_rl_biclique(g: Graph, r: int, l: int, induced: bool = False) -> bool:
    """Does ``g`` contain disjoint sides of sizes ``r`` and ``l`` with all cross edges?

    With ``induced`` both sides must also be independent.
    """
    adj = _guard(g, PAIR_LIMIT)
    for a in combinations(range(g.n), r):
        if induced and not _is_independent(adj, a):
            continue
        common = sorted(_common(adj, g.n, a))
        if len(common) < l:
            continue
        if not induced:
            return True
        for b in combinations(common, l):
            if _is_independent(adj, b):
                return True
    return False
