"""Timing runs over generated graph families, reported as CSV rows."""

from __future__ import annotations

import csv
import time
from collections.abc import Iterable
from dataclasses import dataclass
from typing import IO

from .approx import max_clique_exact, vertex_cover_approx
from .cliques import MaximalCliqueReport, gc_paused, iter_maximal_cliques
from .fixed import list_triangles
from .generators import generate
from .graph import build_family, degeneracy_ordering

BENCH_OPS = ("maximal-cliques", "triangles", "max-clique", "vertex-cover")
CSV_COLUMNS = ("family", "n", "k", "op", "phase", "millis")


@dataclass(frozen=True)
class BenchRow:
    family: str
    n: int
    k: int
    op: str
    phase: str
    millis: float


def _ms(seconds: float) -> float:
    return round(seconds * 1000.0, 3)


def run_bench(
    family: str,
    sizes: Iterable[int],
    ops: Iterable[str] = ("maximal-cliques",),
    k: int | None = None,
    p: float | None = None,
    seed: int = 0,
    threads: int = 1,
) -> list[BenchRow]:
    """Time each op on ``family`` at each size.

    Maximal-clique rows break the run into family construction, Bron-Kerbosch
    enumeration and suffix-tree deduplication, plus the total.
    """
    ops = list(ops)
    for op in ops:
        if op not in BENCH_OPS:
            raise ValueError(f"unknown bench op {op!r}")
    rows = []
    for n in sizes:
        g = generate(family, n=n, k=k, p=p, seed=seed)
        t0 = time.perf_counter()
        fam = build_family(g, degeneracy_ordering(g))
        t_family = time.perf_counter() - t0
        kg = fam.k
        for op in ops:
            t0 = time.perf_counter()
            if op == "maximal-cliques":
                report = MaximalCliqueReport()
                with gc_paused():
                    for _ in iter_maximal_cliques(g, threads=threads, report=report):
                        pass
                total = time.perf_counter() - t0
                for phase in ("family", "enumerate", "dedup"):
                    rows.append(BenchRow(family, n, kg, op, phase, _ms(report.timings[phase])))
            else:
                if op == "triangles":
                    for _ in list_triangles(g, fam):
                        pass
                elif op == "max-clique":
                    max_clique_exact(g, fam)
                else:
                    vertex_cover_approx(g)
                total = time.perf_counter() - t0 + t_family
                rows.append(BenchRow(family, n, kg, op, "family", _ms(t_family)))
            rows.append(BenchRow(family, n, kg, op, "total", _ms(total)))
    return rows


def write_csv(rows: Iterable[BenchRow], out: IO[str]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow([r.family, r.n, r.k, r.op, r.phase, r.millis])
