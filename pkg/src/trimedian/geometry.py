"""Plane triangles, barycentric coordinates and degenerate-triangle classification."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence


class GeometryError(ValueError):
    """Raised for inputs outside an operation's domain (collinear, invalid sides...)."""


class Point(NamedTuple):
    x: float
    y: float


class SideLengths(NamedTuple):
    a: float
    b: float
    c: float

    @property
    def perimeter(self) -> float:
        return self.a + self.b + self.c

    def normalized(self) -> "SideLengths":
        p = self.perimeter
        return SideLengths(self.a / p, self.b / p, self.c / p)


class Barycentric(NamedTuple):
    la: float
    lb: float
    lc: float


class TriangleClass(enum.Enum):
    ORDINARY = "Ordinary"
    DEGENERATE_TYPE_I = "DegenerateTypeI"
    DEGENERATE_TYPE_II = "DegenerateTypeII"
    CORNER = "Corner"


def _dist(p: Point, q: Point) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def _cross(o: Point, p: Point, q: Point) -> float:
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


@dataclass(frozen=True)
class Triangle:
    """Vertices ``va``, ``vb``, ``vc``; side ``a`` is opposite ``va`` and so on."""

    va: Point
    vb: Point
    vc: Point

    def __post_init__(self):
        for v in (self.va, self.vb, self.vc):
            if not (math.isfinite(v[0]) and math.isfinite(v[1])):
                raise GeometryError(f"non-finite vertex {v}")
        object.__setattr__(self, "va", Point(*self.va))
        object.__setattr__(self, "vb", Point(*self.vb))
        object.__setattr__(self, "vc", Point(*self.vc))

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.va, self.vb, self.vc)

    @property
    def sides(self) -> SideLengths:
        return SideLengths(
            _dist(self.vb, self.vc), _dist(self.vc, self.va), _dist(self.va, self.vb)
        )

    @property
    def perimeter(self) -> float:
        return self.sides.perimeter

    @property
    def diameter(self) -> float:
        return max(self.sides)

    @property
    def signed_area(self) -> float:
        return 0.5 * _cross(self.va, self.vb, self.vc)

    @property
    def area(self) -> float:
        return abs(self.signed_area)

    @property
    def centroid(self) -> Point:
        return Point(
            (self.va.x + self.vb.x + self.vc.x) / 3.0,
            (self.va.y + self.vb.y + self.vc.y) / 3.0,
        )

    @property
    def angles(self) -> tuple[float, float, float]:
        """Interior angles at A, B, C in radians."""
        out = []
        for p, q, r in ((self.va, self.vb, self.vc), (self.vb, self.vc, self.va),
                        (self.vc, self.va, self.vb)):
            u = (q.x - p.x, q.y - p.y)
            v = (r.x - p.x, r.y - p.y)
            out.append(math.atan2(abs(u[0] * v[1] - u[1] * v[0]), u[0] * v[0] + u[1] * v[1]))
        return tuple(out)

    def classify(self, tol: float = 1e-9) -> TriangleClass:
        return classify(self.sides, tol)

    def is_ordinary(self, tol: float = 1e-9) -> bool:
        return self.classify(tol) is TriangleClass.ORDINARY


def validate_sides(s: Sequence[float]) -> SideLengths:
    """Check the closed triangle inequality; returns a ``SideLengths``."""
    s = SideLengths(*(float(v) for v in s))
    if not all(math.isfinite(v) for v in s):
        raise GeometryError(f"non-finite side lengths {tuple(s)}")
    if min(s) < 0:
        raise GeometryError(f"negative side length in {tuple(s)}")
    p = s.perimeter
    if p <= 0:
        raise GeometryError("all sides are zero")
    slack = 1e-12 * p
    if max(s) > p - max(s) + slack:
        raise GeometryError(f"sides {tuple(s)} violate the triangle inequality")
    return s


def classify(s: Sequence[float], tol: float = 1e-9) -> TriangleClass:
    """Classify side lengths; ``tol`` is relative to the perimeter."""
    a, b, c = sorted((float(v) for v in s), reverse=True)
    t = tol * (a + b + c)
    type_one = abs(a - (b + c)) <= t and c > t
    type_two = c <= t and abs(a - b) <= t
    if type_two and abs(a - (b + c)) <= t:
        return TriangleClass.CORNER
    if type_one:
        return TriangleClass.DEGENERATE_TYPE_I
    if type_two:
        return TriangleClass.DEGENERATE_TYPE_II
    return TriangleClass.ORDINARY


def triangle_from_sides(s: Sequence[float]) -> Triangle:
    """Canonical placement: B at the origin, C at (a, 0), A in the closed upper half-plane."""
    a, b, c = validate_sides(s)
    if a == 0.0:
        # a = 0 forces b = c; put A straight above B = C
        return Triangle(Point(0.0, c), Point(0.0, 0.0), Point(0.0, 0.0))
    ax = (a * a + c * c - b * b) / (2.0 * a)
    # Heron-style product avoids the cancellation in c^2 - ax^2 for thin triangles
    p = a + b + c
    gaps = (-a + b + c, a - b + c, a + b - c)
    if min(gaps) <= 1e-14 * p:
        # collinear up to rounding; sqrt would blow the noise up to ~1e-8
        return Triangle(Point(ax, 0.0), Point(0.0, 0.0), Point(a, 0.0))
    prod = p * gaps[0] * gaps[1] * gaps[2]
    ay = math.sqrt(prod) / (2.0 * a)
    return Triangle(Point(ax, ay), Point(0.0, 0.0), Point(a, 0.0))


def to_barycentric(t: Triangle, p: Sequence[float]) -> Barycentric:
    if not t.is_ordinary():
        raise GeometryError(
            "barycentric coordinates of a degenerate triangle are defined only as limits; "
            "use trimedian.degenerate"
        )
    px, py = p
    area2 = _cross(t.va, t.vb, t.vc)
    la = _cross((px, py), t.vb, t.vc) / area2
    lb = _cross((px, py), t.vc, t.va) / area2
    lc = _cross((px, py), t.va, t.vb) / area2
    return Barycentric(la, lb, lc)


def from_barycentric(t: Triangle, l: Sequence[float]) -> Point:
    la, lb, lc = l
    return Point(
        la * t.va.x + lb * t.vb.x + lc * t.vc.x,
        la * t.va.y + lb * t.vb.y + lc * t.vc.y,
    )


def apply_affine(matrix, translation, t: Triangle) -> Triangle:
    """Map every vertex by ``x -> matrix @ x + translation``."""
    (m00, m01), (m10, m11) = matrix
    det = m00 * m11 - m01 * m10
    scale = max(abs(m00), abs(m01), abs(m10), abs(m11))
    if scale == 0 or abs(det) <= 1e-14 * scale * scale:
        raise GeometryError("singular affine matrix")
    tx, ty = translation

    def f(v):
        return Point(m00 * v[0] + m01 * v[1] + tx, m10 * v[0] + m11 * v[1] + ty)

    return Triangle(f(t.va), f(t.vb), f(t.vc))


def quarter_homothety(t: Triangle) -> Triangle:
    """Image of ``t`` under the homothety of ratio 1/4 centred at its centroid."""
    if not t.is_ordinary():
        raise GeometryError("quarter homothety needs an ordinary triangle")
    g = t.centroid
    return Triangle(*(Point(g.x + (v.x - g.x) / 4.0, g.y + (v.y - g.y) / 4.0)
                      for v in t.vertices))
