"""Figure rendering for verification reports and gadget drawings.

Uses the object-oriented Agg API so nothing touches pyplot global state.
"""

from __future__ import annotations

import math
from pathlib import Path

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .graph import Graph, SEED


def _figure(width=6.0, height=4.0):
    fig = Figure(figsize=(width, height))
    FigureCanvasAgg(fig)
    return fig


def layout(g: Graph) -> dict[int, tuple[float, float]]:
    """Circle for the non-isolated vertices, a row underneath for isolated ones."""
    adj = g.adj
    ring = [v for v in g.vertices if adj[v]]
    lonely = [v for v in g.vertices if not adj[v]]
    pos = {}
    for i, v in enumerate(ring):
        a = 2 * math.pi * i / max(len(ring), 1) + math.pi / 2
        pos[v] = (math.cos(a), math.sin(a))
    for i, v in enumerate(lonely):
        pos[v] = (-1 + 2 * (i + 0.5) / len(lonely), -1.35)
    return pos


def draw_graph(g: Graph, path, title: str | None = None, highlight=()) -> Path:
    highlight = set(highlight)
    pos = layout(g)
    fig = _figure(6, 6)
    ax = fig.add_subplot()
    for u, v in g.sorted_edges():
        (x0, y0), (x1, y1) = pos[u], pos[v]
        hot = (u, v) in highlight
        ax.plot([x0, x1], [y0, y1], color="crimson" if hot else "0.35", lw=2.2 if hot else 0.9, zorder=1)
    for v, (x, y) in pos.items():
        new = g.provenance(v) != SEED
        ax.scatter([x], [y], s=120, c="gold" if new else "white", edgecolors="black", zorder=2,
                   marker="s" if new else "o")
        ax.annotate(g.label(v), (x, y), textcoords="offset points", xytext=(0, 8), ha="center", fontsize=7)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=120, bbox_inches="tight")
    return out


def bar_chart(xs, ys, path, xlabel: str, ylabel: str, title: str = "", expected=None) -> Path:
    fig = _figure()
    ax = fig.add_subplot()
    ax.bar([str(x) for x in xs], [0 if y is None else y for y in ys], color="steelblue", label="observed")
    if expected is not None:
        ax.plot([str(x) for x in xs], expected, "k_", markersize=24, mew=2, label="expected")
        ax.legend(frameon=False)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=120, bbox_inches="tight")
    return out
