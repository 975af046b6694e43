"""Exact medians of collinear (degenerate) triangles and convergence probes.

For a degenerate triangle with sorted sides a >= b >= c (a = b + c), the
perimeter and area medians of nearby ordinary triangles converge to points on
the longest side, at distances a/2 and sqrt(ab/2) from the vertex shared by
the two longest sides.  In barycentric form::

    m1: (a/(4b), 1/4, 3/4 - a/(4b))
    m2: (sqrt(a/b), sqrt(b/a), 2 sqrt(2) - sqrt(a/b) - sqrt(b/a)) / (2 sqrt(2))

All functions here take and return values in the caller's original labels;
the descending sort is undone on output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .geometry import (
    Barycentric,
    GeometryError,
    Point,
    SideLengths,
    Triangle,
    to_barycentric,
    triangle_from_sides,
    validate_sides,
)
from .solvers import DEFAULT_CONFIG, MedianKind, SolverConfig, median_point

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class DegenerateTriangle:
    sides: SideLengths
    # permutation[k] is the original label index of the k-th largest side
    permutation: tuple[int, int, int]

    @classmethod
    def from_sides(cls, sides: Sequence[float], tol: float = 1e-9) -> "DegenerateTriangle":
        s = validate_sides(sides)
        perm = tuple(sorted(range(3), key=lambda i: -s[i]))
        a, b, c = (s[i] for i in perm)
        if abs(a - (b + c)) > tol * s.perimeter:
            raise GeometryError(f"sides {tuple(s)} are not degenerate (a != b + c)")
        if b <= 0.0:
            raise GeometryError("middle side is zero; limit formulas need b > 0")
        return cls(s, perm)

    @property
    def sorted_sides(self) -> tuple[float, float, float]:
        return tuple(self.sides[i] for i in self.permutation)

    def unsort(self, values: Sequence[float]) -> tuple[float, float, float]:
        out = [0.0, 0.0, 0.0]
        for k, i in enumerate(self.permutation):
            out[i] = values[k]
        return tuple(out)


def _as_degenerate(d) -> DegenerateTriangle:
    return d if isinstance(d, DegenerateTriangle) else DegenerateTriangle.from_sides(d)


def m1_limit_barycentric(d) -> Barycentric:
    d = _as_degenerate(d)
    a, b, _ = d.sorted_sides
    la = a / (4.0 * b)
    return Barycentric(*d.unsort((la, 0.25, 0.75 - la)))


def m2_limit_barycentric(d) -> Barycentric:
    d = _as_degenerate(d)
    a, b, _ = d.sorted_sides
    ra = math.sqrt(a / b)
    rb = math.sqrt(b / a)
    la = ra / (2.0 * SQRT2)
    lb = rb / (2.0 * SQRT2)
    return Barycentric(*d.unsort((la, lb, 1.0 - la - lb)))


def _along_longest_side(d: DegenerateTriangle, placement: Triangle | None, dist: float) -> Point:
    if placement is None:
        placement = triangle_from_sides(d.sides)
    verts = placement.vertices
    far = verts[d.permutation[1]]
    common = verts[d.permutation[2]]
    length = math.dist(far, common)
    return Point(common.x + dist * (far.x - common.x) / length,
                 common.y + dist * (far.y - common.y) / length)


def m1_limit_point(d, placement: Triangle | None = None) -> Point:
    """Midpoint of the longest side."""
    d = _as_degenerate(d)
    a, _, _ = d.sorted_sides
    return _along_longest_side(d, placement, 0.5 * a)


def m2_limit_point(d, placement: Triangle | None = None) -> Point:
    """Point on the longest side at distance sqrt(ab/2) from the vertex it shares with b."""
    d = _as_degenerate(d)
    a, b, _ = d.sorted_sides
    return _along_longest_side(d, placement, math.sqrt(0.5 * a * b))


LIMITS = {MedianKind.M1: m1_limit_barycentric, MedianKind.M2: m2_limit_barycentric}


# ---------------------------------------------------------------- probes

def perturbed_triangle(d, eps: float, path: str = "grow") -> Triangle:
    """An ordinary triangle close to ``d``, normalised to unit perimeter.

    ``grow`` lengthens the shortest side by ``eps`` (times the perimeter);
    ``lift`` raises the vertex between the two others off the line by a
    height ``eps`` (times the perimeter), keeping the longest side fixed.
    """
    d = _as_degenerate(d)
    p = d.sides.perimeter
    if path == "grow":
        sorted_sides = list(d.sorted_sides)
        sorted_sides[2] += eps * p
        return triangle_from_sides(SideLengths(*d.unsort(sorted_sides)).normalized())
    if path == "lift":
        base = triangle_from_sides(SideLengths(*(s / p for s in d.sides)))
        verts = list(base.vertices)
        k = d.permutation[0]
        lifted = Point(verts[k].x, verts[k].y + eps)
        verts[k] = lifted
        return Triangle(*verts)
    raise ValueError(f"unknown perturbation path {path!r}")


class ProbeRow(NamedTuple):
    epsilon: float
    kind: MedianKind
    sides: SideLengths
    barycentric: Barycentric
    limit: Barycentric
    error: float
    vertex_distance: float
    limit_distance: float
    side_distance_ratio: float


def _line_distance(p: Point, q: Point, x: Point) -> float:
    return abs((q.x - p.x) * (x.y - p.y) - (q.y - p.y) * (x.x - p.x)) / math.dist(p, q)


def limit_convergence_probe(d, epsilons: Sequence[float], cfg: SolverConfig = DEFAULT_CONFIG,
                            kinds=(MedianKind.M1, MedianKind.M2), path: str = "grow"):
    """Solve nearby ordinary triangles and compare with the exact limits.

    Returns one ``ProbeRow`` per (epsilon, kind).  ``error`` is the max-norm
    distance of the solved barycentric coordinates from the limit;
    ``vertex_distance`` is measured from the vertex shared by the two longest
    sides; ``side_distance_ratio`` is the ratio of the distances from the
    median to the lines of the longest and the middle side.
    """
    d = _as_degenerate(d)
    unit = DegenerateTriangle(d.sides.normalized(), d.permutation)
    a, b, _ = unit.sorted_sides
    i0, i1, i2 = d.permutation
    rows = []
    for eps in epsilons:
        t = perturbed_triangle(unit, eps, path)
        verts = t.vertices
        for kind in kinds:
            kind = MedianKind(kind)
            limit = LIMITS[kind](unit)
            m = median_point(t, kind, cfg)
            bary = to_barycentric(t, m)
            err = max(abs(x - y) for x, y in zip(bary, limit))
            limit_dist = 0.5 * a if kind is MedianKind.M1 else math.sqrt(0.5 * a * b)
            # longest side joins vertices i1, i2; middle side joins i0, i2
            ratio = (_line_distance(verts[i1], verts[i2], m)
                     / _line_distance(verts[i0], verts[i2], m))
            rows.append(ProbeRow(eps, kind, t.sides, bary, limit, err,
                                 math.dist(m, verts[i2]), limit_dist, ratio))
    return rows
