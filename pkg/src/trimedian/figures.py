"""SVG renderings of single triangles and median-map images."""

from __future__ import annotations

import math

from .bounds import arc_polyline
from .geometry import (
    Point,
    SideLengths,
    from_barycentric,
    quarter_homothety,
    to_barycentric,
    triangle_from_sides,
)
from .output import SvgCanvas, rgb
from .solvers import DEFAULT_CONFIG, MedianKind, SolverConfig, median_point
from .space import REFERENCE

MEDIAN_COLORS = {MedianKind.M0: "#d62728", MedianKind.M1: "#1f77b4", MedianKind.M2: "#2ca02c"}


def map_svg(kind, samples, comment: str = "") -> str:
    """Scatter of median-map images, coloured by the source triangle's sides."""
    kind = MedianKind(kind)
    inner = quarter_homothety(REFERENCE)
    if kind is MedianKind.M0:
        xs = [v.x for v in REFERENCE.vertices]
        ys = [v.y for v in REFERENCE.vertices]
    else:
        xs = [v.x for v in inner.vertices]
        ys = [v.y for v in inner.vertices]
    pad = 0.08 * (max(xs) - min(xs))
    canvas = SvgCanvas(min(xs) - pad, max(xs) + pad, min(ys) - pad, max(ys) + pad)
    if kind is MedianKind.M0:
        canvas.polygon(REFERENCE.vertices, stroke="black")
    else:
        canvas.polygon(inner.vertices, stroke="black", dash="4,3")
        if kind is MedianKind.M2:
            canvas.polygon(arc_polyline(), stroke="#444444")
    for s in samples:
        if s.image is None:
            continue
        a, b, c = s.sides
        canvas.circle(s.image, r=1.2, fill=rgb(2 * a, 2 * b, 2 * c))
    return canvas.render(comment)


def figure_1(cfg: SolverConfig = DEFAULT_CONFIG, comment: str = "") -> str:
    """Triangle with sides 9, 7, 5 and its three medians, with both bounding regions."""
    t = triangle_from_sides((9.0, 7.0, 5.0))
    xs = [v.x for v in t.vertices]
    ys = [v.y for v in t.vertices]
    canvas = SvgCanvas(min(xs) - 0.5, max(xs) + 0.5, min(ys) - 0.5, max(ys) + 0.5)
    canvas.polygon(t.vertices, width=1.5)
    canvas.polygon(quarter_homothety(t).vertices, stroke="#888888", dash="4,3")
    curve = [from_barycentric(t, to_barycentric(REFERENCE, p)) for p in arc_polyline()]
    canvas.polygon(curve, stroke="#888888")
    for v, name in zip(t.vertices, "ABC"):
        canvas.text(v, name)
    for kind in MedianKind:
        m = median_point(t, kind, cfg)
        canvas.circle(m, r=3.5, fill=MEDIAN_COLORS[kind])
        canvas.text(m, kind.value, size=12)
    return canvas.render(comment)


def figure_8(eps: float = 1e-4, stretch: float = 1000.0,
             cfg: SolverConfig = DEFAULT_CONFIG, comment: str = "") -> str:
    """Nearly degenerate triangle (9, 8, 1 + eps), stretched vertically.

    Shows the solved perimeter and area medians next to the predicted points on
    the bisector of the smallest angle, at distances a/2 and sqrt(ab/2).
    """
    s = SideLengths(9.0, 8.0, 1.0 + eps)
    t = triangle_from_sides(s)
    c = t.vc
    ua = ((t.vb.x - c.x) / s.a, (t.vb.y - c.y) / s.a)
    ub = ((t.va.x - c.x) / s.b, (t.va.y - c.y) / s.b)
    bis = (ua[0] + ub[0], ua[1] + ub[1])
    norm = math.hypot(*bis)
    bis = (bis[0] / norm, bis[1] / norm)
    xs = [v.x for v in t.vertices]
    ys = [v.y for v in t.vertices]
    pad = 0.3
    canvas = SvgCanvas(min(xs) - pad, max(xs) + pad, min(ys) - pad / stretch,
                       max(ys) + pad / stretch, yscale=stretch)
    canvas.polygon(t.vertices, width=1.5)
    canvas.polygon([c, Point(c.x + s.a * bis[0], c.y + s.a * bis[1])], stroke="#17becf",
                   closed=False)
    for v, name in zip(t.vertices, "ABC"):
        canvas.text(v, name)
    for kind, dist in ((MedianKind.M1, s.a / 2), (MedianKind.M2, math.sqrt(s.a * s.b / 2))):
        m = median_point(t, kind, cfg)
        canvas.circle(m, r=3.5, fill=MEDIAN_COLORS[kind])
        canvas.text(m, kind.value, size=12)
        pred = Point(c.x + dist * bis[0], c.y + dist * bis[1])
        canvas.circle(pred, r=2.0, fill="none", stroke="black")
    return canvas.render(comment)
