"""Figures for benchmark reports."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bench import BenchRow  # noqa: E402

PHASE_STYLE = {"total": "-", "family": ":", "enumerate": "--", "dedup": "-."}


def plot_bench(rows: Sequence[BenchRow], path: str, title: str | None = None) -> None:
    """Log-log wall time against n, one line per (op, phase), with a linear guide."""
    series: dict[tuple[str, str], list[tuple[int, float]]] = defaultdict(list)
    for r in rows:
        series[(r.op, r.phase)].append((r.n, r.millis))

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ops = list(dict.fromkeys(r.op for r in rows))
    colors = {op: f"C{i}" for i, op in enumerate(ops)}
    for (op, phase), pts in sorted(series.items()):
        pts.sort()
        xs = [x for x, _ in pts]
        ys = [max(y, 1e-3) for _, y in pts]
        ax.plot(xs, ys, PHASE_STYLE.get(phase, "-"), marker="o", ms=3, color=colors[op], label=f"{op} ({phase})")

    totals = sorted(series.get((ops[0], "total"), [])) if ops else []
    if len(totals) >= 2:
        x0, y0 = totals[0]
        xs = [x for x, _ in totals]
        ax.plot(xs, [y0 * x / x0 for x in xs], color="0.6", lw=0.8, label="linear in n")

    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("n (vertices)")
    ax.set_ylabel("wall time [ms]")
    if title:
        ax.set_title(title)
    ax.legend(fontsize=7, frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
