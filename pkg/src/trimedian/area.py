"""Integrated distance over a triangular region and its gradient.

The double integral is split into three sub-triangles with apex at the query
point X, one per edge.  A sub-triangle with apex X over base e contributes
``d_e / 3 * I_e(X)``, where ``d_e`` is the distance from X to the line of e
and ``I_e`` the segment integral.  With ``d_e`` signed (positive on the
triangle's side) the identity holds for X anywhere in the plane.

The gradient follows from the divergence theorem::

    grad F(X) = -sum_e I_e(X) n_e

with ``n_e`` the outward unit normal of edge e.  It vanishes exactly when the
three edge averages ``I_e / |e|`` coincide.
"""

from __future__ import annotations

from typing import NamedTuple

from .geometry import GeometryError, Triangle
from .segment import Segment, integral, integral_derivatives


class EdgeData(NamedTuple):
    segment: Segment
    outward_normal: tuple[float, float]
    length: float

    def signed_distance(self, x) -> float:
        """Distance from ``x`` to the edge line, positive on the triangle's side."""
        (px, py), _ = self.segment
        nx, ny = self.outward_normal
        return -((x[0] - px) * nx + (x[1] - py) * ny)


def edge_data(t: Triangle) -> tuple[EdgeData, EdgeData, EdgeData]:
    """Edges a, b, c (opposite A, B, C) with outward normals."""
    if not t.is_ordinary():
        raise GeometryError("the region of a degenerate triangle has zero area")
    s = 1.0 if t.signed_area > 0 else -1.0
    out = []
    for p, q in ((t.vb, t.vc), (t.vc, t.va), (t.va, t.vb)):
        seg = Segment(p, q)
        length = seg.length
        dx = (q.x - p.x) / length
        dy = (q.y - p.y) / length
        out.append(EdgeData(seg, (s * dy, -s * dx), length))
    return tuple(out)


def area_integral(t: Triangle, x) -> float:
    """``int int_{P in t} |P - x| dA``."""
    return sum(e.signed_distance(x) * integral(e.segment, x) for e in edge_data(t)) / 3.0


def _gradient(edges, x):
    gx = gy = 0.0
    for e in edges:
        i = integral(e.segment, x)
        gx -= i * e.outward_normal[0]
        gy -= i * e.outward_normal[1]
    return gx, gy


def area_gradient(t: Triangle, x) -> tuple[float, float]:
    """Gradient of ``area_integral`` in ``x`` (the boundary-normal integral, negated)."""
    return _gradient(edge_data(t), x)


def area_derivatives(edges, x):
    """Value, gradient and Hessian of the area objective from precomputed edges."""
    f = gx = gy = 0.0
    hxx = hxy = hyx = hyy = 0.0
    for e in edges:
        i, (ix, iy), _ = integral_derivatives(e.segment, x)
        nx, ny = e.outward_normal
        f += e.signed_distance(x) * i
        gx -= i * nx
        gy -= i * ny
        hxx -= nx * ix
        hxy -= nx * iy
        hyx -= ny * ix
        hyy -= ny * iy
    sym = 0.5 * (hxy + hyx)
    return f / 3.0, (gx, gy), ((hxx, sym), (sym, hyy))


def edge_average_residual(t: Triangle, x) -> tuple[float, float]:
    """Differences of consecutive edge averages ``I_e / |e|``: ``(a - b, b - c)``."""
    ea, eb, ec = edge_data(t)
    ma = integral(ea.segment, x) / ea.length
    mb = integral(eb.segment, x) / eb.length
    mc = integral(ec.segment, x) / ec.length
    return ma - mb, mb - mc

