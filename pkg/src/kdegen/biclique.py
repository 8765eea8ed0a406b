"""Bicliques in graphs of small degeneracy.

If ``x`` is the earliest-ranked vertex of a biclique, the side not containing
``x`` lies among the forward neighbours of ``x`` (or inside the residual
graph when ``x`` is one of the last ``k`` vertices).  Every routine here
enumerates candidate sides inside the forward subgraphs and the residual,
then recovers the opposite side with a batched common-neighbour query.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from collections.abc import Collection, Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, LocalGraph, SubgraphFamily, build_family, degeneracy_ordering, induced_subgraph

INT64_MAX = (1 << 63) - 1


@dataclass(frozen=True)
class Biclique:
    a: tuple[int, ...]
    b: tuple[int, ...]

    def is_valid(self, g: Graph, induced: bool = False) -> bool:
        a, b = self.a, self.b
        if not a or not b or set(a) & set(b):
            return False
        if not all(g.has_edge(x, y) for x in a for y in b):
            return False
        if induced:
            return not any(g.has_edge(u, v) for side in (a, b) for u, v in combinations(side, 2))
        return True

    def canonical(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        a, b = tuple(sorted(self.a)), tuple(sorted(self.b))
        return (a, b) if a <= b else (b, a)

    def __str__(self) -> str:
        a, b = self.canonical()
        return f"{' '.join(map(str, a))} | {' '.join(map(str, b))}"


class CommonNeighborScratch:
    """Per-thread counter array indexed by degeneracy rank.

    It must be all zeros between queries; :meth:`is_clean` checks that.
    """

    def __init__(self, n: int):
        self.counts = [0] * n

    def is_clean(self) -> bool:
        return not any(self.counts)


def common_neighbors_batch(
    g: Graph,
    family: SubgraphFamily,
    sets: Sequence[Collection[int]],
    scratch: CommonNeighborScratch | None = None,
) -> list[frozenset[int]]:
    """Exact common neighbourhood of each vertex set.

    Let ``x`` be the earliest-ranked member of a set ``A``.  Common neighbours
    ranked after ``x`` are among its forward neighbours and are confirmed by
    counting their edges into ``A``.  Common neighbours ``v`` ranked before
    ``x`` have all of ``A`` among their forward neighbours, so they are found
    by matching the size-``|A|`` subsets of every forward neighbourhood
    against the queried sets.
    """
    rank = family.ordering.rank
    forward = family.forward
    if scratch is None:
        scratch = CommonNeighborScratch(g.n)
    cnt = scratch.counts
    answers: list[set[int]] = [set() for _ in sets]
    by_size: dict[int, dict[tuple[int, ...], list[int]]] = defaultdict(lambda: defaultdict(list))

    for i, aset in enumerate(sets):
        a = sorted(set(aset), key=rank.__getitem__)
        if not a:
            raise ValueError("common neighbours of an empty set are undefined")
        x = a[0]
        for u in a:
            for w in forward[u]:
                cnt[rank[w]] += 1
        out = answers[i]
        for v in forward[x]:
            rv = rank[v]
            fv = family.forward_set(v)
            after = sum(1 for u in a if rank[u] > rv and u in fv)
            if cnt[rv] + after == len(a):
                out.add(v)
        for u in a:
            for w in forward[u]:
                cnt[rank[w]] -= 1
        by_size[len(a)][tuple(a)].append(i)

    # backward phase: pair every size-l forward subset (S, v) with the queries keyed by S
    for size, table in by_size.items():
        for v in range(g.n):
            fw = forward[v]
            if len(fw) < size:
                continue
            for s in combinations(fw, size):
                hit = table.get(s)
                if hit is not None:
                    for i in hit:
                        answers[i].add(v)
    return [frozenset(s) for s in answers]


def _pieces(family: SubgraphFamily) -> tuple[LocalGraph, ...]:
    return (*family.subgraphs, family.residual)


def list_maximal_bicliques(g: Graph, family: SubgraphFamily | None = None) -> list[Biclique]:
    """Every maximal (non-induced) biclique once.

    A biclique ``(A, B)`` is maximal when no vertex can join either side, i.e.
    ``A`` is the common neighbourhood of ``B`` and vice versa.  Each pair is
    reported with its canonical side order (smaller sorted side first).
    """
    if family is None:
        family = build_family(g)
    seen: set[tuple[int, ...]] = set()
    cands: list[tuple[int, ...]] = []
    for sub in _pieces(family):
        verts = sub.vertices
        for size in range(1, sub.n + 1):
            for s in combinations(verts, size):
                key = tuple(sorted(s))
                if key not in seen:
                    seen.add(key)
                    cands.append(key)
    first = common_neighbors_batch(g, family, cands)
    closed_cands = [(s, c) for s, c in zip(cands, first) if c]
    second = common_neighbors_batch(g, family, [c for _, c in closed_cands])
    out = []
    emitted = set()
    for (s, c), cc in zip(closed_cands, second):
        if cc != frozenset(s):
            continue
        bc = Biclique(*Biclique(tuple(sorted(c)), s).canonical())
        key = (bc.a, bc.b)
        if key not in emitted:
            emitted.add(key)
            out.append(bc)
    return out


def _check_sizes(r: int, l: int) -> None:
    if r < 1 or l < 1:
        raise ValueError(f"biclique side sizes must be positive, got r={r}, l={l}")


def _subsets(family: SubgraphFamily, sizes: Iterable[int], independent: bool) -> list[tuple[int, ...]]:
    seen: set[tuple[int, ...]] = set()
    out = []
    for sub in _pieces(family):
        for size in sizes:
            gen = _independent_sets(sub, size) if independent else combinations(range(sub.n), size)
            for combo in gen:
                key = tuple(sorted(sub.vertices[i] for i in combo))
                if key not in seen:
                    seen.add(key)
                    out.append(key)
    return out


def _independent_sets(sub: LocalGraph, size: int):
    """Independent ``size``-subsets of a local graph, extending only independent prefixes."""
    masks = sub.masks
    n = sub.n

    def rec(start: int, chosen: list[int], blocked: int):
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for v in range(start, n - (size - len(chosen)) + 1):
            if blocked >> v & 1:
                continue
            chosen.append(v)
            yield from rec(v + 1, chosen, blocked | masks[v])
            chosen.pop()

    if size <= n:
        yield from rec(0, [], 0)


def solve_rl_biclique(g: Graph, r: int, l: int, family: SubgraphFamily | None = None) -> Biclique | None:
    """A (not necessarily induced) biclique with sides of sizes ``r`` and ``l``, or ``None``."""
    _check_sizes(r, l)
    if family is None:
        family = build_family(g)
    rank = family.ordering.rank
    cands = _subsets(family, sorted({r, l}), independent=False)
    for s, c in zip(cands, common_neighbors_batch(g, family, cands)):
        other = sorted(c, key=rank.__getitem__)
        if len(s) == l and len(other) >= r:
            return Biclique(tuple(other[:r]), s)
        if len(s) == r and len(other) >= l:
            return Biclique(s, tuple(other[:l]))
    return None


def ramsey_threshold(k: int, d: int) -> int:
    """``(k + d) ** (k + 1)``: a ``k``-degenerate graph with more vertices has an independent ``d``-set.

    Raises ``OverflowError`` when the value does not fit in a signed 64-bit integer.
    """
    if k < 0 or d < 1:
        raise ValueError(f"need k >= 0 and d >= 1, got k={k}, d={d}")
    value = 1
    for _ in range(k + 1):
        value *= k + d
        if value > INT64_MAX:
            raise OverflowError(f"ramsey threshold for k={k}, d={d} exceeds 64 bits")
    return value


def greedy_independent_set(g: Graph, d: int) -> list[int] | None:
    """Take a minimum-degree vertex and delete its closed neighbourhood, repeatedly.

    On a ``k``-degenerate graph this collects at least ``n / (k + 1)``
    vertices.  Returns the first ``d`` picked, or ``None`` if fewer were found.
    """
    deg = [len(a) for a in g.adj]
    alive = [True] * g.n
    heap = [(deg[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    picked = []
    while heap and len(picked) < d:
        dv, v = heapq.heappop(heap)
        if not alive[v] or dv != deg[v]:
            continue
        picked.append(v)
        dead = [v] + [u for u in g.adj[v] if alive[u]]
        for u in dead:
            alive[u] = False
        for u in dead:
            for w in g.adj[u]:
                if alive[w]:
                    deg[w] -= 1
                    heapq.heappush(heap, (deg[w], w))
    return sorted(picked) if len(picked) >= d else None


def exhaustive_independent_set(g: Graph, d: int) -> list[int] | None:
    """Branching search for an independent set of size ``d``."""
    masks = [sum(1 << u for u in a) for a in g.adj]
    n = g.n

    def rec(start: int, chosen: list[int], blocked: int) -> list[int] | None:
        if len(chosen) == d:
            return list(chosen)
        free = [v for v in range(start, n) if not blocked >> v & 1]
        if len(free) < d - len(chosen):
            return None
        for v in free:
            chosen.append(v)
            found = rec(v + 1, chosen, blocked | masks[v] | (1 << v))
            chosen.pop()
            if found is not None:
                return found
        return None

    return rec(0, [], 0)


def _independent_in(g: Graph, verts: Collection[int], d: int) -> list[int] | None:
    if len(verts) < d:
        return None
    h, vmap = induced_subgraph(g, verts)
    kh = degeneracy_ordering(h).k
    try:
        forced = len(verts) > ramsey_threshold(kh, d)
    except OverflowError:
        forced = False
    found = greedy_independent_set(h, d)
    if found is None:
        if forced:
            raise AssertionError("greedy independent set failed above the Ramsey threshold")
        found = exhaustive_independent_set(h, d)
    return None if found is None else [vmap[i] for i in found]


def solve_induced_rl_biclique(g: Graph, r: int, l: int, family: SubgraphFamily | None = None) -> Biclique | None:
    """An induced biclique (both sides independent) with side sizes ``r`` and ``l``, or ``None``."""
    _check_sizes(r, l)
    if family is None:
        family = build_family(g)
    cands = _subsets(family, sorted({r, l}), independent=True)
    for s, c in zip(cands, common_neighbors_batch(g, family, cands)):
        if len(s) == l:
            other = _independent_in(g, c, r)
            if other is not None:
                return Biclique(tuple(other), s)
        if len(s) == r:
            other = _independent_in(g, c, l)
            if other is not None:
                return Biclique(s, tuple(other))
    return None
