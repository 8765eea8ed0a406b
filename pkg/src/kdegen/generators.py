"""Deterministic graph families for fixtures and benchmarks."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph

FAMILIES = ("path", "cycle", "complete", "complete-multipartite", "star", "petersen", "gnp", "random-k-degenerate")


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_multipartite(parts: list[int]) -> Graph:
    owner = [i for i, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]])


def star(leaves: int) -> Graph:
    """Centre 0 joined to leaves ``1..leaves``."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_k_degenerate(n: int, k: int, seed: int = 0) -> Graph:
    """Each new vertex gets ``min(i, k)`` random edges back to earlier vertices.

    Reversing the insertion order gives every vertex at most ``k`` later
    neighbours, so the degeneracy is at most ``k``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    rng = random.Random(seed)
    edges = []
    for i in range(1, n):
        for j in rng.sample(range(i), min(i, k)):
            edges.append((i, j))
    return Graph.from_edges(n, edges)


def parse_parts(text: str) -> list[int]:
    """``"3x3"`` means three parts of size 3; ``"2,3,4"`` lists sizes."""
    try:
        if "x" in text:
            count, size = text.split("x")
            return [int(size)] * int(count)
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise ValueError(f"bad part specification {text!r}") from None


def generate(
    family: str,
    n: int | None = None,
    k: int | None = None,
    parts: str | None = None,
    p: float | None = None,
    seed: int = 0,
) -> Graph:
    def need(value, name):
        if value is None:
            raise ValueError(f"family {family!r} needs {name}")
        return value

    if family == "path":
        return path(need(n, "n"))
    if family == "cycle":
        return cycle(need(n, "n"))
    if family == "complete":
        return complete(need(n, "n"))
    if family == "complete-multipartite":
        return complete_multipartite(parse_parts(need(parts, "parts")))
    if family == "star":
        return star(need(n, "n"))
    if family == "petersen":
        return petersen()
    if family == "gnp":
        return gnp(need(n, "n"), need(p, "p"), seed)
    if family == "random-k-degenerate":
        return random_k_degenerate(need(n, "n"), need(k, "k"), seed)
    raise ValueError(f"unknown graph family {family!r}")
