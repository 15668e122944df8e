"""Grid scans of probe displaceability with CSV and SVG output."""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, floor
from typing import Optional

from .exact import LatVec, RatVec, format_rat
from .polytope import Polytope
from .probes import default_bound, find_displacing_probe

__all__ = ["Cell", "ScanGrid", "export_csv", "render_svg", "scan", "worker_count"]

DISPLACED = "displaced"
NOT_DISPLACED = "not_displaced"


@dataclass(frozen=True)
class Cell:
    point: RatVec
    status: str
    direction: Optional[LatVec] = None
    facet_id: Optional[int] = None

    @property
    def displaced(self) -> bool:
        return self.status == DISPLACED


@dataclass(frozen=True)
class ScanGrid:
    polytope: Polytope
    resolution: int
    bound: int
    cells: tuple[Cell, ...]

    def status_at(self, point) -> Optional[str]:
        pt = tuple(Fraction(c) for c in point)
        for c in self.cells:
            if c.point == pt:
                return c.status
        return None

    def not_displaced(self) -> list[Cell]:
        return [c for c in self.cells if not c.displaced]


def grid_points(P: Polytope, m: int) -> list[RatVec]:
    """Interior points with coordinates in ``Z/m``, lexicographic order."""
    ranges = []
    for i in range(P.dim):
        cs = [v[i] for v in P.vertices]
        ranges.append(range(ceil(min(cs) * m), floor(max(cs) * m) + 1))
    out = []
    for idx in product(*ranges):
        pt = tuple(Fraction(j, m) for j in idx)
        if P.interior_contains(pt):
            out.append(pt)
    return out


def _evaluate(args) -> Cell:
    P, pt, bound = args
    rep = find_displacing_probe(P, pt, bound)
    if rep.displaced:
        return Cell(pt, DISPLACED, rep.witness.direction, rep.witness.facet_id)
    return Cell(pt, NOT_DISPLACED)


def worker_count() -> int:
    raw = os.environ.get("PROBELAB_THREADS", "")
    try:
        cap = int(raw) if raw else 1
    except ValueError:
        cap = 1
    return max(1, min(cap, os.cpu_count() or 1))


def scan(P: Polytope, m: int, bound: Optional[int] = None,
         workers: Optional[int] = None) -> ScanGrid:
    """Evaluate every interior grid point; results are in grid order no
    matter how many worker processes run."""
    if m < 2:
        raise ValueError("resolution must be at least 2")
    if bound is None:
        bound = default_bound(P)
    pts = grid_points(P, m)
    workers = worker_count() if workers is None else max(1, workers)
    jobs = [(P, pt, bound) for pt in pts]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(_evaluate, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        cells = [_evaluate(j) for j in jobs]
    return ScanGrid(P, m, bound, tuple(cells))


def export_csv(grid: ScanGrid) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    n = grid.polytope.dim
    w.writerow([f"u{i + 1}" for i in range(n)] + ["status", "dir"])
    for c in grid.cells:
        d = " ".join(str(x) for x in c.direction) if c.direction else ""
        w.writerow([format_rat(x) for x in c.point] + [c.status, d])
    return buf.getvalue()


SVG_SIZE = 512
SVG_MARGIN = 16
COLOR_DISPLACED = "#cccccc"
COLOR_NOT_DISPLACED = "#cc0000"


def _num(x) -> str:
    s = f"{float(x):.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _polygon_order(P: Polytope) -> list[RatVec]:
    """Vertices of a polygon in boundary order."""
    order = [0]
    prev_facet = None
    while True:
        vi = order[-1]
        nxt_facet = next(i for i in sorted(P.incidence[vi]) if i != prev_facet)
        nxt = next(k for k in P.facet_vertices(nxt_facet) if k != vi)
        if nxt == order[0]:
            break
        order.append(nxt)
        prev_facet = nxt_facet
    return [P.vertices[i] for i in order]


def render_svg(grid: ScanGrid) -> str:
    P = grid.polytope
    if P.dim != 2:
        raise ValueError("SVG output needs a 2-dimensional polytope")
    xs = [v[0] for v in P.vertices]
    ys = [v[1] for v in P.vertices]
    span = max(max(xs) - min(xs), max(ys) - min(ys))
    scale = Fraction(SVG_SIZE - 2 * SVG_MARGIN) / span
    x0, y1 = min(xs), max(ys)

    def tx(p):
        return SVG_MARGIN + (p[0] - x0) * scale, SVG_MARGIN + (y1 - p[1]) * scale

    side = scale / grid.resolution * Fraction(4, 5)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" '
        f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        f'<rect x="0" y="0" width="{SVG_SIZE}" height="{SVG_SIZE}" fill="#ffffff"/>',
    ]
    for c in grid.cells:
        cx, cy = tx(c.point)
        color = COLOR_DISPLACED if c.displaced else COLOR_NOT_DISPLACED
        lines.append(f'<rect x="{_num(cx - side / 2)}" y="{_num(cy - side / 2)}" '
                     f'width="{_num(side)}" height="{_num(side)}" fill="{color}"/>')
    pts = " ".join(f"{_num(a)},{_num(b)}" for a, b in map(tx, _polygon_order(P)))
    lines.append(f'<polygon points="{pts}" fill="none" stroke="#000000" stroke-width="2"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
