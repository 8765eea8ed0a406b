"""Maximal clique enumeration for graphs of small degeneracy.

The pipeline runs pivoting Bron-Kerbosch on every forward-neighbourhood
subgraph (with the owner prepended) and on the residual graph, in ordering
index order.  A candidate clique is turned into a word by sorting its vertices
by degeneracy rank.  It is rejected exactly when that word is a suffix of a
previously accepted word; accepted words are inserted into a generalized
suffix tree.

Concurrency: Bron-Kerbosch runs on distinct subgraphs are independent and can
be computed ahead of time on worker threads (``threads > 1``), but acceptance
and insertion always happen on the calling thread in index order, because a
candidate can only be judged once every earlier accepted clique is indexed.
"""

from __future__ import annotations

import gc
import time
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field

from .graph import Graph, LocalGraph, SubgraphFamily, bits, build_family, degeneracy_ordering
from .suffix import SuffixIndex


@contextmanager
def gc_paused() -> Iterator[None]:
    """Suspend cyclic GC while the suffix tree grows.

    The tree allocates many long-lived nodes and repeated full collections
    over them make enumeration time grow faster than linearly.
    """
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.enable()


def _bk_masks(masks: tuple[int, ...] | list[int]) -> Iterator[int]:
    """Maximal cliques of a bitmask graph as vertex masks.

    The pivot maximises ``|P & N(u)|`` over ``u`` in ``P | X``; branching
    vertices are taken in ascending order.  An empty graph yields the empty
    clique once.
    """
    stack = [(0, (1 << len(masks)) - 1, 0)]
    while stack:
        r, p, x = stack.pop()
        if not p:
            if not x:
                yield r
            continue
        best = -1
        pivot_nbrs = 0
        px = p | x
        while px:
            low = px & -px
            u = low.bit_length() - 1
            px ^= low
            c = bin(p & masks[u]).count("1")
            if c > best:
                best, pivot_nbrs = c, masks[u]
        branch = p & ~pivot_nbrs
        frames = []
        while branch:
            low = branch & -branch
            v = low.bit_length() - 1
            branch ^= low
            nv = masks[v]
            frames.append((r | low, p & nv, x & nv))
            p &= ~low
            x |= low
        stack.extend(reversed(frames))


def bron_kerbosch_pivot(g: Graph) -> Iterator[list[int]]:
    """Yield every maximal clique of ``g`` once, as a sorted vertex list.

    Intended for small graphs; adjacency is converted to bitmasks.
    """
    if g.n == 0:
        return
    masks = [sum(1 << u for u in a) for a in g.adj]
    for r in _bk_masks(masks):
        yield bits(r)


def _words(sub: LocalGraph, cliques: list[int]) -> list[tuple[int, ...]]:
    # local ids are rank-ordered, so reading the mask low-to-high is the counting sort
    verts = sub.vertices
    head = () if sub.owner is None else (sub.owner,)
    return [head + tuple(verts[i] for i in bits(r)) for r in cliques]


def _subgraph_cliques(sub: LocalGraph) -> list[int]:
    if sub.owner is None and sub.n == 0:
        return []
    return list(_bk_masks(sub.masks))


@dataclass
class MaximalCliqueReport:
    """Accepted clique words plus per-subgraph counters.

    ``accepted[i]`` / ``rejected[i]`` count candidates from subgraph ``i``; the
    last entry belongs to the residual graph.  ``witnesses`` is filled in debug
    mode with ``(rejected word, accepted word it is a suffix of)``.
    """

    cliques: list[tuple[int, ...]] = field(default_factory=list)
    accepted: list[int] = field(default_factory=list)
    rejected: list[int] = field(default_factory=list)
    witnesses: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.cliques)


def iter_candidates(family: SubgraphFamily) -> Iterator[tuple[int, tuple[int, ...]]]:
    """``(subgraph index, word)`` for every maximal clique of every ``G_i^+`` and the residual."""
    for i, sub in enumerate((*family.subgraphs, family.residual)):
        for w in _words(sub, _subgraph_cliques(sub)):
            yield i, w


def _pipeline(
    g: Graph,
    family: SubgraphFamily | None,
    report: MaximalCliqueReport | None,
    skip_unseen: bool,
    debug: bool,
    threads: int,
) -> Iterator[tuple[int, ...]]:
    t0 = time.perf_counter()
    if family is None:
        family = build_family(g, degeneracy_ordering(g))
    t_family = time.perf_counter() - t0
    t_enum = 0.0
    index = SuffixIndex(g.n)
    accepted_words: list[tuple[int, ...]] = []
    stored: set[tuple[int, ...]] = set()
    subs = (*family.subgraphs, family.residual)

    if threads > 1:
        pool = ThreadPoolExecutor(threads)
        batches = pool.map(_subgraph_cliques, subs)
    else:
        pool = None
        batches = map(_subgraph_cliques, subs)

    t_dedup = 0.0
    try:
        for i, sub in enumerate(subs):
            ts = time.perf_counter()
            masks = next(batches)
            words = _words(sub, masks)
            te = time.perf_counter()
            t_enum += te - ts
            residual = sub.owner is None
            check = not (skip_unseen and not residual and not index.has_root_letter(sub.owner))
            acc = rej = 0
            out = []
            for w in words:
                if check and index.is_suffix(w):
                    rej += 1
                    if debug:
                        assert w not in stored, f"query {w} equals a stored word"
                        witness = next(c for c in accepted_words if len(c) > len(w) and c[-len(w):] == w)
                        report.witnesses.append((w, witness))
                    continue
                if debug:
                    assert w not in stored, f"query {w} equals a stored word"
                acc += 1
                out.append(w)
            if not residual:
                for w in out:
                    index.insert(w)
                    if debug:
                        accepted_words.append(w)
                        stored.add(w)
            t_dedup += time.perf_counter() - te
            if report is not None:
                report.accepted.append(acc)
                report.rejected.append(rej)
            yield from out
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    if report is not None:
        report.timings.update(family=t_family, enumerate=t_enum, dedup=t_dedup)


def iter_maximal_cliques(
    g: Graph,
    family: SubgraphFamily | None = None,
    *,
    skip_unseen: bool = True,
    threads: int = 1,
    report: MaximalCliqueReport | None = None,
) -> Iterator[tuple[int, ...]]:
    """Stream the maximal cliques of ``g`` as rank-sorted words without buffering.

    Counters and phase timings go to ``report`` when given; its clique list is
    left empty.
    """
    return _pipeline(g, family, report, skip_unseen, False, threads)


def list_maximal_cliques(
    g: Graph,
    family: SubgraphFamily | None = None,
    *,
    skip_unseen: bool = True,
    debug: bool = False,
    threads: int = 1,
) -> MaximalCliqueReport:
    """All maximal cliques of ``g``, each exactly once, with counters.

    ``skip_unseen`` skips suffix queries for a whole subgraph whose owner
    starts no stored suffix.  ``debug`` records a witness for every rejection
    and asserts that no query ever equals a stored full word.
    """
    report = MaximalCliqueReport()
    with gc_paused():
        report.cliques.extend(_pipeline(g, family, report, skip_unseen, debug, threads))
    return report


def count_maximal_cliques(g: Graph, family: SubgraphFamily | None = None, *, threads: int = 1) -> int:
    with gc_paused():
        return sum(1 for _ in iter_maximal_cliques(g, family, threads=threads))


def eppstein_maximal_cliques(g: Graph) -> Iterator[frozenset[int]]:
    """Degeneracy-ordered Bron-Kerbosch (outer loop over the ordering).

    Only used as an independent cross-check on graphs too large for the
    brute-force oracle.
    """
    ordering = degeneracy_ordering(g)
    rank = ordering.rank
    for v in ordering.order:
        later = [u for u in g.adj[v] if rank[u] > rank[v]]
        earlier = [u for u in g.adj[v] if rank[u] < rank[v]]
        verts = later + earlier
        local = {u: i for i, u in enumerate(verts)}
        masks = [sum(1 << local[w] for w in g.adj[u] if w in local) for u in verts]
        p = (1 << len(later)) - 1
        x = ((1 << len(verts)) - 1) & ~p
        stack = [(0, p, x)]
        while stack:
            r, p, x = stack.pop()
            if not p:
                if not x:
                    yield frozenset([v, *(verts[i] for i in bits(r))])
                continue
            pivot = max(bits(p | x), key=lambda u: bin(p & masks[u]).count("1"))
            for u in bits(p & ~masks[pivot]):
                stack.append((r | 1 << u, p & masks[u], x & masks[u]))
                p &= ~(1 << u)
                x |= 1 << u
