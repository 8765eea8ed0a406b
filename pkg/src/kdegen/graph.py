"""Graph representation, degeneracy ordering and the forward-neighbourhood family.

Vertex ids are dense integers ``0..n-1``.  Every algorithm in the package
consumes a :class:`SubgraphFamily`: for the first ``n - k`` vertices of a
degeneracy ordering it holds the subgraph induced on the vertex's forward
neighbours, and a residual graph induced on the last ``k`` vertices.
"""

from __future__ import annotations

import heapq
import io
import logging
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator, Sequence

logger = logging.getLogger(__name__)

MAX_VERTICES = 1 << 24


class GraphFormatError(ValueError):
    """Malformed graph input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph stored as sorted adjacency lists."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    dropped: int = field(default=0, compare=False)
    _sets: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency lists, got {len(self.adj)}")
        object.__setattr__(self, "_sets", tuple(frozenset(a) for a in self.adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, dropping self-loops and repeated edges.

        The number of dropped records is kept in ``dropped``.
        """
        nbrs: list[set[int]] = [set() for _ in range(n)]
        dropped = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v or v in nbrs[u]:
                dropped += 1
                continue
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), dropped)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, tuple(() for _ in range(n)))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each edge once, as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, nb in enumerate(self.adj):
            for v in nb:
                if v > u:
                    yield u, v

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _parse_int(tok: str, lineno: int) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {tok!r}", lineno) from None
    return value


def _check_id(v: int, lineno: int, max_vertices: int) -> None:
    if v < 0:
        raise GraphFormatError(f"negative vertex id {v}", lineno)
    if v >= max_vertices:
        raise GraphFormatError(f"vertex id {v} overflows the limit of {max_vertices} vertices", lineno)


def _read_edgelist(lines: Iterable[str], max_vertices: int) -> Graph:
    edges = []
    n = 0
    for lineno, line in enumerate(lines, 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        toks = s.split()
        if len(toks) != 2:
            raise GraphFormatError(f"expected two vertex ids, got {len(toks)} fields", lineno)
        u, v = (_parse_int(t, lineno) for t in toks)
        _check_id(u, lineno, max_vertices)
        _check_id(v, lineno, max_vertices)
        n = max(n, u + 1, v + 1)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def _read_dimacs(lines: Iterable[str], max_vertices: int) -> Graph:
    n = None
    edges = []
    for lineno, line in enumerate(lines, 1):
        s = line.strip()
        if not s or s[0] == "c":
            continue
        toks = s.split()
        if toks[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(toks) != 4 or toks[1] not in ("edge", "col"):
                raise GraphFormatError("expected 'p edge N M'", lineno)
            n = _parse_int(toks[2], lineno)
            _parse_int(toks[3], lineno)
            if n < 0 or n > max_vertices:
                raise GraphFormatError(f"vertex count {n} out of range", lineno)
        elif toks[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before problem line", lineno)
            if len(toks) != 3:
                raise GraphFormatError("expected 'e u v'", lineno)
            u, v = (_parse_int(t, lineno) for t in toks[1:])
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphFormatError(f"vertex id {x} outside 1..{n}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unknown record type {toks[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing problem line")
    return Graph.from_edges(n, edges)


def load_graph(source: IO | bytes | str, format: str = "edgelist", max_vertices: int = MAX_VERTICES) -> Graph:
    """Parse a graph from a byte/text stream or an in-memory buffer.

    ``format`` is ``"edgelist"`` (0-based pairs, ``#`` comments) or
    ``"dimacs"`` (``p edge N M`` header and 1-based ``e u v`` lines).
    Self-loops and duplicate edges are dropped and counted in ``Graph.dropped``.
    """
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    if isinstance(source, str):
        source = io.StringIO(source)
    lines = (ln.decode("utf-8") if isinstance(ln, bytes) else ln for ln in source)
    if format == "edgelist":
        g = _read_edgelist(lines, max_vertices)
    elif format == "dimacs":
        g = _read_dimacs(lines, max_vertices)
    else:
        raise ValueError(f"unknown graph format {format!r}")
    if g.dropped:
        logger.warning("dropped %d self-loop or duplicate edge records", g.dropped)
    return g


def write_graph(g: Graph, out: IO[str], format: str = "edgelist") -> None:
    if format == "edgelist":
        for u, v in g.edges():
            out.write(f"{u} {v}\n")
    elif format == "dimacs":
        out.write(f"p edge {g.n} {g.m}\n")
        for u, v in g.edges():
            out.write(f"e {u + 1} {v + 1}\n")
    else:
        raise ValueError(f"unknown graph format {format!r}")


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``G[s]`` relabelled ``0..|s|-1`` and the local-to-global map.

    Local ids follow the sorted order of the global ids.
    """
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph with n={g.n}")
    local = {v: i for i, v in enumerate(verts)}
    adj = tuple(tuple(sorted(local[u] for u in g.adj[v] if u in local)) for v in verts)
    return Graph(len(verts), adj), verts


@dataclass(frozen=True)
class DegeneracyOrdering:
    order: tuple[int, ...]
    rank: tuple[int, ...]
    k: int

    @classmethod
    def from_order(cls, g: Graph, order: Sequence[int]) -> DegeneracyOrdering:
        """Wrap an arbitrary vertex order; ``k`` becomes its maximum forward degree."""
        if sorted(order) != list(range(g.n)):
            raise ValueError("order is not a permutation of the vertices")
        rank = [0] * g.n
        for i, v in enumerate(order):
            rank[v] = i
        k = max((sum(1 for u in g.adj[v] if rank[u] > rank[v]) for v in range(g.n)), default=0)
        return cls(tuple(order), tuple(rank), k)

    def forward_degree(self, g: Graph, v: int) -> int:
        r = self.rank[v]
        return sum(1 for u in g.adj[v] if self.rank[u] > r)


def degeneracy_ordering(g: Graph) -> DegeneracyOrdering:
    """Repeatedly remove a minimum-degree vertex; ties go to the smallest id.

    Buckets are indexed by current degree and hold lazy heaps of vertex ids,
    so the deterministic tie-break costs a log factor over the linear bucket
    algorithm.
    """
    n = g.n
    deg = [len(a) for a in g.adj]
    maxdeg = max(deg, default=0)
    buckets: list[list[int]] = [[] for _ in range(maxdeg + 1)]
    for v in range(n):
        buckets[deg[v]].append(v)  # ascending ids: already a valid heap
    removed = [False] * n
    order = []
    rank = [0] * n
    k = 0
    d = 0
    for i in range(n):
        d = max(d - 1, 0)
        while True:
            b = buckets[d]
            while b and (removed[b[0]] or deg[b[0]] != d):
                heapq.heappop(b)
            if b:
                break
            d += 1
        v = heapq.heappop(b)
        removed[v] = True
        order.append(v)
        rank[v] = i
        k = max(k, d)
        for u in g.adj[v]:
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(buckets[deg[u]], u)
    return DegeneracyOrdering(tuple(order), tuple(rank), k)


@dataclass(frozen=True, slots=True)
class LocalGraph:
    """Small induced subgraph with bitmask adjacency.

    ``vertices[i]`` is the global id of local vertex ``i``; local ids increase
    with degeneracy rank.  ``masks[i]`` has bit ``j`` set iff local ``i`` and
    ``j`` are adjacent.  ``owner`` is the vertex whose forward neighbourhood
    this is, or ``None`` for the residual graph.
    """

    owner: int | None
    vertices: tuple[int, ...]
    masks: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return sum(bin(x).count("1") for x in self.masks) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.masks[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        return bits(self.masks[i])

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, mask in enumerate(self.masks):
            for j in bits(mask >> (i + 1)):
                yield i, i + 1 + j

    def to_graph(self, closed: bool = False) -> tuple[Graph, list[int]]:
        """Materialise as a :class:`Graph`.

        With ``closed=True`` the owner is added as local vertex 0 joined to
        every other vertex (the closed forward neighbourhood).
        """
        if closed and self.owner is not None:
            adj = [tuple(range(1, self.n + 1))]
            adj += [(0,) + tuple(j + 1 for j in bits(m)) for m in self.masks]
            return Graph(self.n + 1, tuple(adj)), [self.owner, *self.vertices]
        return Graph(self.n, tuple(tuple(bits(m)) for m in self.masks)), list(self.vertices)


def bits(mask: int) -> list[int]:
    """Positions of set bits in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class SubgraphFamily:
    """Forward-neighbourhood subgraphs ``G_1..G_{n-k}`` plus the residual graph.

    ``forward[v]`` lists the later neighbours of ``v`` sorted by rank.
    """

    graph: Graph
    ordering: DegeneracyOrdering
    subgraphs: tuple[LocalGraph, ...]
    residual: LocalGraph
    forward: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return self.ordering.k

    def forward_set(self, v: int) -> frozenset[int]:
        return self._forward_sets[v]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_forward_sets", tuple(frozenset(f) for f in self.forward))


def _local_graph(owner: int | None, verts: Sequence[int], fwd_sets: Sequence[frozenset[int]]) -> LocalGraph:
    # verts are rank-sorted, so an edge a-b with a before b shows up as b in forward(a)
    masks = [0] * len(verts)
    for a in range(len(verts)):
        fa = fwd_sets[verts[a]]
        if not fa:
            continue
        for b in range(a + 1, len(verts)):
            if verts[b] in fa:
                masks[a] |= 1 << b
                masks[b] |= 1 << a
    return LocalGraph(owner, tuple(verts), tuple(masks))


def build_family(g: Graph, ordering: DegeneracyOrdering | None = None) -> SubgraphFamily:
    """Construct the forward-neighbourhood subgraphs and the residual graph."""
    if ordering is None:
        ordering = degeneracy_ordering(g)
    rank = ordering.rank
    n, k = g.n, ordering.k
    forward = []
    for v in range(n):
        r = rank[v]
        forward.append(tuple(sorted((u for u in g.adj[v] if rank[u] > r), key=rank.__getitem__)))
    fwd_sets = [frozenset(f) for f in forward]
    cut = max(n - k, 0)
    subgraphs = tuple(_local_graph(v, forward[v], fwd_sets) for v in ordering.order[:cut])
    residual = _local_graph(None, ordering.order[cut:], fwd_sets)
    return SubgraphFamily(g, ordering, subgraphs, residual, tuple(forward))
