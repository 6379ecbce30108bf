"""Two-panel SVG rendering of a plane tropical curve and its real part.

Left panel: the curve in the chart x_3 = 0 (vertices, bounded edges, rays
clipped to a box). Right panel: the midpoint construction in the four
quadrant copies of the triangle; the dashed outer boundary is glued
antipodally. Arc colors encode connected components of the real part.
"""

from __future__ import annotations

from .core import SignDistribution, TropicalPolynomial
from .curvegraph import midpoint_graph
from .hypersurface import compact_cells, realize
from .subdivision import SubdivisionError, regular_subdivision

_PALETTE = ("#c0392b", "#2471a3", "#1e8449", "#af601a", "#7d3c98",
            "#117864", "#b7950b", "#566573")


def _fmt(x: float) -> str:
    return f"{x:.2f}"


class _Panel:
    """Collects SVG elements in world coordinates and maps them to the canvas."""

    def __init__(self, xmin, xmax, ymin, ymax, ox, size):
        self.xmin, self.xmax, self.ymin, self.ymax = xmin, xmax, ymin, ymax
        self.ox = ox
        self.size = size
        span = max(xmax - xmin, ymax - ymin)
        self.scale = (size - 20) / span if span else 1.0
        self.elems: list[str] = []

    def map(self, p) -> tuple[float, float]:
        x = self.ox + 10 + (float(p[0]) - self.xmin) * self.scale
        y = 10 + (self.ymax - float(p[1])) * self.scale
        return x, y

    def line(self, a, b, cls: str, color: str | None = None, dashed: bool = False):
        x1, y1 = self.map(a)
        x2, y2 = self.map(b)
        style = f' stroke="{color}"' if color else ""
        dash = ' stroke-dasharray="6 4"' if dashed else ""
        self.elems.append(
            f'<line class="{cls}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}"{style}{dash}/>')

    def circle(self, p, cls: str):
        x, y = self.map(p)
        self.elems.append(f'<circle class="{cls}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="3"/>')


def _clip_ray(origin, direction, xmin, xmax, ymin, ymax):
    """Endpoint of the ray clipped to the box; None if it exits immediately."""
    tmax = None
    ox, oy = float(origin[0]), float(origin[1])
    dx, dy = direction
    for o, dd, lo, hi in ((ox, dx, xmin, xmax), (oy, dy, ymin, ymax)):
        if dd > 0:
            t = (hi - o) / dd
        elif dd < 0:
            t = (lo - o) / dd
        else:
            continue
        tmax = t if tmax is None else min(tmax, t)
    if tmax is None or tmax <= 0:
        return None
    return (ox + tmax * dx, oy + tmax * dy)


def render_curve_svg(poly: TropicalPolynomial, signs: SignDistribution) -> str:
    if poly.n != 3:
        raise ValueError("plots are implemented for n = 3 only")
    sub = regular_subdivision(poly)
    if not sub.is_triangulation or not sub.is_full:
        raise SubdivisionError("plotting requires a full triangulation")
    poset = compact_cells(sub)
    fp = sub.face_poset()

    realized = {}
    for cid in range(len(poset.cells)):
        cell = poset.cells[cid]
        if cell.sedentarity == 0:
            realized[cid] = realize(poset, cid)

    vertices = [r.points[0] for r in realized.values() if r.kind == "vertex"]
    xs = [float(p[0]) for p in vertices] or [0.0]
    ys = [float(p[1]) for p in vertices] or [0.0]
    pad = max(1.0, 0.4 * max(max(xs) - min(xs), max(ys) - min(ys), 1.0))
    box = (min(xs) - pad, max(xs) + pad, min(ys) - pad, max(ys) + pad)

    size = 420.0
    left = _Panel(box[0], box[1], box[2], box[3], 0.0, size)
    for r in realized.values():
        if r.kind == "segment":
            left.line(r.points[0], r.points[1], "trop-edge")
        elif r.kind == "ray":
            end = _clip_ray(r.points[0], r.direction, *box)
            if end is not None:
                left.line(r.points[0], end, "trop-edge")
    for p in vertices:
        left.circle(p, "trop-vertex")

    graph = midpoint_graph(sub, signs.vector(poly))
    d = float(poly.d)
    right = _Panel(-d, d, -d, d, size + 20.0, size)
    for z in (0, 1, 2, 3):
        sx = -1.0 if z & 1 else 1.0
        sy = -1.0 if z & 2 else 1.0
        right.line((0.0, 0.0), (sx * d, 0.0), "chart-axis")
        right.line((0.0, 0.0), (0.0, sy * d), "chart-axis")
        right.line((sx * d, 0.0), (0.0, sy * d), "glue-boundary", dashed=True)
    for seg in graph.segments:
        sx = -1.0 if seg.copy & 1 else 1.0
        sy = -1.0 if seg.copy & 2 else 1.0
        a = (sx * float(seg.start[0]), sy * float(seg.start[1]))
        b = (sx * float(seg.end[0]), sy * float(seg.end[1]))
        right.line(a, b, "real-arc", color=_PALETTE[seg.component % len(_PALETTE)])

    width = 2 * size + 40.0
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(size)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(size)}">',
        "<style>"
        ".trop-edge{stroke:#21618c;stroke-width:1.6;}"
        ".trop-vertex{fill:#21618c;}"
        ".chart-axis{stroke:#d5d8dc;stroke-width:1;}"
        ".glue-boundary{stroke:#909497;stroke-width:1;}"
        ".real-arc{stroke-width:2.2;fill:none;}"
        "</style>",
    ]
    parts.extend(left.elems)
    parts.extend(right.elems)
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
