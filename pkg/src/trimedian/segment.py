"""Closed-form line integral of the distance to a point, over a straight segment.

In a frame where the segment is ``[alpha, beta]`` on the x-axis and the query
point is ``(x, y)``::

    I(x, y) = int_alpha^beta sqrt((s - x)^2 + y^2) ds

With ``u = s - x`` the antiderivative is ``(u r + y^2 asinh(u / |y|)) / 2``,
``r = sqrt(u^2 + y^2)``.  Two algebraic forms of the logarithmic part are
used: one carrying an explicit ``y^2 ln y^2`` term, stable when ``x`` lies
over the segment, and one with a quotient of logarithm arguments, stable
when ``x`` is beyond an endpoint.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .geometry import Point


class Segment(NamedTuple):
    p1: Point
    p2: Point

    @property
    def length(self) -> float:
        return math.hypot(self.p2[0] - self.p1[0], self.p2[1] - self.p1[1])


class AlignedFrame(NamedTuple):
    alpha: float
    beta: float
    x: float
    y: float


def integral_inside_form(alpha: float, beta: float, x: float, y: float) -> float:
    """Form with the ``y^2 ln y^2`` term; loses accuracy for ``x`` far outside."""
    p = beta - x
    q = x - alpha
    r2 = math.sqrt(p * p + y * y)
    r1 = math.sqrt(q * q + y * y)
    y2 = y * y
    base = 0.5 * (p * r2 + q * r1)
    if y2 == 0.0:
        return base
    return base + 0.5 * y2 * (math.log((r2 + p) * (r1 + q)) - math.log(y2))


def integral_outside_form(alpha: float, beta: float, x: float, y: float) -> float:
    """Form with the logarithm of a quotient; loses accuracy for ``x`` inside and small ``y``."""
    p = beta - x
    q = x - alpha
    r2 = math.sqrt(p * p + y * y)
    r1 = math.sqrt(q * q + y * y)
    y2 = y * y
    base = 0.5 * (p * r2 + q * r1)
    if y2 == 0.0:
        return base
    return base + 0.5 * y2 * math.log((r1 + q) / (r2 - p))


def _log_ratio(u1: float, u2: float, r1: float, r2: float, y: float) -> float:
    """ln((u2 + r2) / (u1 + r1)) = asinh(u2/|y|) - asinh(u1/|y|), evaluated stably.

    For y == 0 this returns the finite limit when the point is off the segment
    and +inf when it lies on the closed segment.
    """
    if u1 >= 0.0:
        if y == 0.0:
            return math.log(u2 / u1) if u1 > 0.0 else math.inf
        num = (u2 - u1) * (1.0 + (u1 + u2) / (r1 + r2))
        return math.log1p(num / (u1 + r1))
    if u2 <= 0.0:
        if y == 0.0:
            return math.log(u1 / u2) if u2 < 0.0 else math.inf
        num = (u2 - u1) * (1.0 - (u1 + u2) / (r1 + r2))
        return math.log1p(num / (r2 - u2))
    if y == 0.0:
        return math.inf
    return math.log((u2 + r2) * (r1 - u1)) - math.log(y * y)


def _ur_difference(u1: float, u2: float, r1: float, r2: float, y: float) -> float:
    """u2 r2 - u1 r1 without cancellation."""
    if u1 >= 0.0 or u2 <= 0.0:
        den = u2 * r2 + u1 * r1
        if den == 0.0:
            return 0.0
        return (u2 - u1) * (u2 + u1) * (u2 * u2 + u1 * u1 + y * y) / den
    return u2 * r2 - u1 * r1


def integral_aligned(alpha: float, beta: float, x: float, y: float) -> float:
    """Exact value of ``int_alpha^beta sqrt((s - x)^2 + y^2) ds``."""
    u1 = alpha - x
    u2 = beta - x
    r1 = math.hypot(u1, y)
    r2 = math.hypot(u2, y)
    val = 0.5 * _ur_difference(u1, u2, r1, r2, y)
    if y != 0.0:
        val += 0.5 * y * y * _log_ratio(u1, u2, r1, r2, y)
    return val


def aligned_derivatives(alpha, beta, x, y):
    """Value, gradient and Hessian of the aligned integral with respect to (x, y).

    Returns ``(I, gx, gy, hxx, hxy, hyy)``.  The gradient is continuous
    everywhere; the Hessian diverges logarithmically on the closed segment
    (``hyy`` is then ``inf``).
    """
    u1 = alpha - x
    u2 = beta - x
    r1 = math.hypot(u1, y)
    r2 = math.hypot(u2, y)
    lam = _log_ratio(u1, u2, r1, r2, y)
    val = 0.5 * _ur_difference(u1, u2, r1, r2, y)
    if y != 0.0:
        val += 0.5 * y * y * lam
        gy = y * lam
        hxy = y * (1.0 / r1 - 1.0 / r2)
    else:
        gy = 0.0
        hxy = 0.0
    gx = r1 - r2
    c1 = u1 / r1 if r1 > 0.0 else 0.0
    c2 = u2 / r2 if r2 > 0.0 else 0.0
    hxx = c2 - c1
    hyy = lam - hxx
    return val, gx, gy, hxx, hxy, hyy


def _frame(seg, x):
    (x1, y1), (x2, y2) = seg
    dx = x2 - x1
    dy = y2 - y1
    length = math.hypot(dx, dy)
    tx = dx / length
    ty = dy / length
    rx = x[0] - x1
    ry = x[1] - y1
    return length, tx, ty, rx * tx + ry * ty, -rx * ty + ry * tx


def integral(seg, x) -> float:
    """``int_{P in seg} |P - x| dP`` for a segment in general position."""
    length, _, _, lx, ly = _frame(seg, x)
    return integral_aligned(0.0, length, lx, ly)


def integral_gradient(seg, x) -> tuple[float, float]:
    """Gradient with respect to ``x``, i.e. ``int (x - P) / |x - P| dP``.

    On the segment itself the integrand is discontinuous at a single point
    only, so the gradient is still well defined and is returned.
    """
    length, tx, ty, lx, ly = _frame(seg, x)
    _, gx, gy, _, _, _ = aligned_derivatives(0.0, length, lx, ly)
    return (gx * tx - gy * ty, gx * ty + gy * tx)


def integral_derivatives(seg, x):
    """``(I, (gx, gy), ((hxx, hxy), (hxy, hyy)))`` in world coordinates."""
    length, tx, ty, lx, ly = _frame(seg, x)
    val, gx, gy, hxx, hxy, hyy = aligned_derivatives(0.0, length, lx, ly)
    grad = (gx * tx - gy * ty, gx * ty + gy * tx)
    # R H R^T with R = [[tx, -ty], [ty, tx]]
    a = hxx * tx - hxy * ty
    b = hxy * tx - hyy * ty
    c = hxx * ty + hxy * tx
    d = hxy * ty + hyy * tx
    wxx = a * tx - b * ty
    wxy = a * ty + b * tx
    wyy = c * ty + d * tx
    return val, grad, ((wxx, wxy), (wxy, wyy))
