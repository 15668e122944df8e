"""Raster figures of scans and cascades (matplotlib, Agg backend)."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .scan import COLOR_DISPLACED, COLOR_NOT_DISPLACED, ScanGrid, _polygon_order  # noqa: E402


def plot_scan(grid: ScanGrid, path, title: Optional[str] = None,
              v0=None) -> Path:
    """Write a PNG of a 2-D scan: displaced samples grey, the rest red."""
    P = grid.polytope
    if P.dim != 2:
        raise ValueError("plots need a 2-dimensional polytope")
    fig, ax = plt.subplots(figsize=(5, 5), dpi=100)
    for displaced, color in ((True, COLOR_DISPLACED), (False, COLOR_NOT_DISPLACED)):
        pts = [c.point for c in grid.cells if c.displaced == displaced]
        if pts:
            ax.scatter([float(p[0]) for p in pts], [float(p[1]) for p in pts],
                       s=12, marker="s", color=color,
                       label="displaced" if displaced else "not displaced")
    outline = _polygon_order(P)
    xs = [float(v[0]) for v in outline] + [float(outline[0][0])]
    ys = [float(v[1]) for v in outline] + [float(outline[0][1])]
    ax.plot(xs, ys, color="black", linewidth=1.5)
    if v0 is not None:
        ax.plot([float(v0[0])], [float(v0[1])], marker="*", color="black",
                markersize=10, linestyle="none", label="v0")
    ax.set_aspect("equal")
    ax.legend(loc="upper right", fontsize=8)
    if title:
        ax.set_title(title)
    path = Path(path)
    fig.savefig(path, format="png", metadata={"Software": None})
    plt.close(fig)
    return path
