"""Distance-graph figures rendered straight to image files.

One labelled group of words per column (two groups give the familiar
bipartite picture); a single group is laid out on a circle.  Matplotlib is
imported lazily so the library stays import-light without it.
"""

import math

from .core import Word, WordSet, distance_graph


def render_distance_graph(
    groups: list[tuple[str, WordSet]],
    dist: int,
    path: str,
    title: str | None = None,
) -> None:
    """Draw the distance-``dist`` graph of the union of ``groups`` to path."""
    from matplotlib.backends.backend_agg import FigureCanvasAgg
    from matplotlib.figure import Figure

    if not groups:
        raise ValueError("nothing to draw")
    n = groups[0][1].n
    union = WordSet(n, (b for _, ws in groups for b in ws.bits))
    g = distance_graph(union, dist)

    pos: dict[int, tuple[float, float]] = {}
    if len(groups) == 1:
        vals = sorted(groups[0][1].bits)
        m = max(len(vals), 1)
        for k, b in enumerate(vals):
            ang = 2 * math.pi * k / m
            pos[b] = (math.cos(ang), math.sin(ang))
    else:
        for gx, (_, ws) in enumerate(groups):
            vals = sorted(ws.bits)
            for k, b in enumerate(vals):
                y = -(k - (len(vals) - 1) / 2)
                pos.setdefault(b, (float(gx), y))

    fig = Figure(figsize=(7, 5))
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(111)
    for a, nbrs in g.adjacency.items():
        for b in nbrs:
            if a < b:
                ax.plot(
                    [pos[a][0], pos[b][0]],
                    [pos[a][1], pos[b][1]],
                    color="0.6",
                    lw=0.8,
                    zorder=1,
                )
    colors = ["tab:blue", "tab:orange", "tab:green", "tab:red", "tab:purple"]
    for gx, (label, ws) in enumerate(groups):
        xs = [pos[b][0] for b in ws.bits]
        ys = [pos[b][1] for b in ws.bits]
        ax.scatter(xs, ys, s=60, color=colors[gx % len(colors)], label=label, zorder=2)
    if len(union) <= 48:
        for b in union.bits:
            ax.annotate(
                str(Word(n, b)),
                pos[b],
                textcoords="offset points",
                xytext=(5, 4),
                fontsize=7,
            )
    ax.set_title(title or f"distance-{dist} graph, n={n}")
    ax.set_axis_off()
    if len(groups) > 1:
        ax.legend(loc="upper center", ncol=len(groups), fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
