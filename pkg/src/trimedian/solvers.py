"""Vertex, perimeter and area medians of an ordinary triangle."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .area import area_derivatives, edge_data
from .geometry import Barycentric, GeometryError, Point, Triangle, to_barycentric
from .segment import Segment, integral, integral_derivatives


class MedianKind(enum.Enum):
    M0 = "m0"
    M1 = "m1"
    M2 = "m2"


@dataclass(frozen=True)
class SolverConfig:
    """Numerical knobs shared by the median solvers.

    ``grad_tol`` is relative: the perimeter median stops at
    ``|grad| <= grad_tol * perimeter``, the area median at
    ``grad_tol * perimeter**2``.
    """

    grad_tol: float = 1e-12
    max_iter: int = 200
    step_shrink: float = 0.5
    fd_step: float = 1e-7
    max_halvings: int = 60
    hessian: str = "analytic"

    def __post_init__(self):
        if not self.grad_tol > 0:
            raise ValueError("grad_tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if not 0 < self.step_shrink < 1:
            raise ValueError("step_shrink must lie in (0, 1)")
        if self.hessian not in ("analytic", "fd"):
            raise ValueError("hessian must be 'analytic' or 'fd'")


DEFAULT_CONFIG = SolverConfig()


class ConvergenceError(RuntimeError):
    def __init__(self, message: str, last_iterate, grad_norm: float):
        super().__init__(f"{message} (last iterate {tuple(last_iterate)}, |grad| = {grad_norm:.3e})")
        self.last_iterate = Point(*last_iterate)
        self.grad_norm = grad_norm


def _require_ordinary(t: Triangle):
    if not t.is_ordinary():
        raise GeometryError("median solvers need an ordinary (non-collinear) triangle")


# ---------------------------------------------------------------- vertex median

def _outer_apex(p: Point, q: Point, opposite: Point) -> Point:
    """Apex of the equilateral triangle erected on pq away from ``opposite``."""
    dx = q.x - p.x
    dy = q.y - p.y
    mx = 0.5 * (p.x + q.x)
    my = 0.5 * (p.y + q.y)
    h = math.sqrt(3.0) / 2.0
    cand = Point(mx - h * dy, my + h * dx)
    side_opp = dx * (opposite.y - p.y) - dy * (opposite.x - p.x)
    side_cand = dx * (cand.y - p.y) - dy * (cand.x - p.x)
    if side_opp * side_cand > 0:
        cand = Point(mx + h * dy, my - h * dx)
    return cand


def _intersect(p1: Point, d1, p2: Point, d2) -> Point:
    det = d1[0] * (-d2[1]) + d2[0] * d1[1]
    rx = p2.x - p1.x
    ry = p2.y - p1.y
    s = (rx * (-d2[1]) + d2[0] * ry) / det
    return Point(p1.x + s * d1[0], p1.y + s * d1[1])


def fermat_point(t: Triangle) -> Point:
    """Minimiser of the summed distances to the three vertices.

    A vertex whose angle is at least 120 degrees is returned as is; otherwise
    the isogonic point is found by the Torricelli construction.
    """
    _require_ordinary(t)
    verts = t.vertices
    for i in range(3):
        p = verts[i]
        q = verts[(i + 1) % 3]
        r = verts[(i + 2) % 3]
        ux, uy = q.x - p.x, q.y - p.y
        vx, vy = r.x - p.x, r.y - p.y
        cos_angle = (ux * vx + uy * vy) / (math.hypot(ux, uy) * math.hypot(vx, vy))
        if cos_angle <= -0.5:
            return p
    a_apex = _outer_apex(t.vb, t.vc, t.va)
    b_apex = _outer_apex(t.vc, t.va, t.vb)
    c_apex = _outer_apex(t.va, t.vb, t.vc)
    # the two best-conditioned of the three concurrent lines
    lines = [(t.va, a_apex), (t.vb, b_apex), (t.vc, c_apex)]
    best = None
    for i in range(3):
        for j in range(i + 1, 3):
            (p1, q1), (p2, q2) = lines[i], lines[j]
            d1 = (q1.x - p1.x, q1.y - p1.y)
            d2 = (q2.x - p2.x, q2.y - p2.y)
            sin = abs(d1[0] * d2[1] - d1[1] * d2[0]) / (math.hypot(*d1) * math.hypot(*d2))
            if best is None or sin > best[0]:
                best = (sin, p1, d1, p2, d2)
    _, p1, d1, p2, d2 = best
    return _intersect(p1, d1, p2, d2)


# ---------------------------------------------------------------- Newton core

def _solve2(h, g):
    (a, b), (c, d) = h
    det = a * d - b * c
    return ((d * g[0] - b * g[1]) / det, (a * g[1] - c * g[0]) / det)


def _positive_definite(h) -> bool:
    (a, b), (c, d) = h
    if not all(math.isfinite(v) for v in (a, b, c, d)):
        return False
    return a > 0 and d > 0 and a * d - b * c > 1e-300


def _fd_hessian(grad_fn, x, step):
    cols = []
    for k in range(2):
        xp = list(x)
        xm = list(x)
        xp[k] += step
        xm[k] -= step
        gp = grad_fn(xp)
        gm = grad_fn(xm)
        cols.append(((gp[0] - gm[0]) / (2 * step), (gp[1] - gm[1]) / (2 * step)))
    hxy = 0.5 * (cols[1][0] + cols[0][1])
    return ((cols[0][0], hxy), (hxy, cols[1][1]))


def _newton(derivs, x0, gtol, bbox, scale, cfg: SolverConfig, grad_fn=None):
    """Damped Newton with step halving and a steepest-descent fallback."""
    xmin, xmax, ymin, ymax = bbox

    def inside(p):
        return xmin <= p[0] <= xmax and ymin <= p[1] <= ymax

    x = tuple(x0)
    f, g, h = derivs(x)
    gnorm = math.hypot(*g)
    for _ in range(cfg.max_iter):
        if gnorm <= gtol:
            return Point(*x)
        if cfg.hessian == "fd":
            h = _fd_hessian(grad_fn, x, cfg.fd_step * scale)
        directions = []
        if _positive_definite(h):
            s = _solve2(h, g)
            directions.append((-s[0], -s[1]))
        directions.append((-g[0] * scale / gnorm, -g[1] * scale / gnorm))
        accepted = False
        for dx, dy in directions:
            alpha = 1.0
            for _ in range(cfg.max_halvings):
                xn = (x[0] + alpha * dx, x[1] + alpha * dy)
                if inside(xn):
                    fn, gn, hn = derivs(xn)
                    gn_norm = math.hypot(*gn)
                    if fn < f or (fn <= f + 4e-16 * abs(f) and gn_norm < gnorm):
                        accepted = True
                        break
                alpha *= cfg.step_shrink
            if accepted:
                break
        if not accepted:
            raise ConvergenceError("line search failed", x, gnorm)
        x, f, g, h, gnorm = xn, fn, gn, hn, gn_norm
    if gnorm <= gtol:
        return Point(*x)
    raise ConvergenceError(f"no convergence in {cfg.max_iter} iterations", x, gnorm)


def _bbox(t: Triangle):
    xs = [v.x for v in t.vertices]
    ys = [v.y for v in t.vertices]
    cx = 0.5 * (min(xs) + max(xs))
    cy = 0.5 * (min(ys) + max(ys))
    hw = max(xs) - min(xs)
    hh = max(ys) - min(ys)
    return (cx - hw, cx + hw, cy - hh, cy + hh)


# ---------------------------------------------------------------- perimeter / area

def perimeter_objective(t: Triangle, x) -> float:
    return sum(integral(Segment(p, q), x) for p, q in _sides(t))


def perimeter_gradient(t: Triangle, x) -> tuple[float, float]:
    gx = gy = 0.0
    for p, q in _sides(t):
        _, (ix, iy), _ = integral_derivatives(Segment(p, q), x)
        gx += ix
        gy += iy
    return gx, gy


def _sides(t: Triangle):
    return ((t.vb, t.vc), (t.vc, t.va), (t.va, t.vb))


def _perimeter_derivs(segs):
    def derivs(x):
        f = gx = gy = hxx = hxy = hyy = 0.0
        for seg in segs:
            i, (ix, iy), ((a, b), (_, d)) = integral_derivatives(seg, x)
            f += i
            gx += ix
            gy += iy
            hxx += a
            hxy += b
            hyy += d
        return f, (gx, gy), ((hxx, hxy), (hxy, hyy))

    return derivs


def perimeter_median(t: Triangle, cfg: SolverConfig = DEFAULT_CONFIG, start=None) -> Point:
    """Minimiser of the summed line integrals of distance over the three sides.

    The objective is strictly convex, so ``start`` (default: the centroid) only
    affects the iteration count.
    """
    _require_ordinary(t)
    segs = [Segment(p, q) for p, q in _sides(t) if p != q]
    derivs = _perimeter_derivs(segs)
    per = t.perimeter
    x0 = t.centroid if start is None else start
    return _newton(derivs, x0, cfg.grad_tol * per, _bbox(t), t.diameter, cfg,
                   grad_fn=lambda x: derivs(x)[1])


def area_median(t: Triangle, cfg: SolverConfig = DEFAULT_CONFIG, start=None) -> Point:
    """Minimiser of the integrated distance over the triangular region."""
    _require_ordinary(t)
    edges = edge_data(t)

    def derivs(x):
        return area_derivatives(edges, x)

    per = t.perimeter
    x0 = t.centroid if start is None else start
    return _newton(derivs, x0, cfg.grad_tol * per * per, _bbox(t), t.diameter, cfg,
                   grad_fn=lambda x: derivs(x)[1])


def median_point(t: Triangle, kind: MedianKind, cfg: SolverConfig = DEFAULT_CONFIG) -> Point:
    kind = MedianKind(kind)
    if kind is MedianKind.M0:
        return fermat_point(t)
    if kind is MedianKind.M1:
        return perimeter_median(t, cfg)
    return area_median(t, cfg)


def median_barycentric(t: Triangle, kind: MedianKind,
                       cfg: SolverConfig = DEFAULT_CONFIG) -> Barycentric:
    return to_barycentric(t, median_point(t, kind, cfg))
