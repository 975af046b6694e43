"""Spaces of unit-perimeter triangles and the median maps on them.

Both realizations live in the same reference equilateral triangle of height 1
centred at the origin.  Its vertices are labelled so that barycentric
coordinates equal the distances to the sides: A is bottom-right (opposite the
left side), B bottom-left (opposite the right side), C the top.  A point with
barycentric coordinates (a, b, c) therefore *is* the triangle with sides
(a, b, c); triangles exist exactly on the medial triangle ("nabla").  In the
angle realization the barycentric coordinates are (alpha, beta, gamma) / pi.
"""

from __future__ import annotations

import dataclasses
import enum
import math
import os
from concurrent.futures import ProcessPoolExecutor
from typing import NamedTuple, Optional, Sequence

from .degenerate import m1_limit_barycentric, m2_limit_barycentric
from .geometry import (
    Barycentric,
    GeometryError,
    Point,
    SideLengths,
    Triangle,
    from_barycentric,
    to_barycentric,
    triangle_from_sides,
)
from .solvers import DEFAULT_CONFIG, ConvergenceError, MedianKind, SolverConfig, median_barycentric

SQRT3 = math.sqrt(3.0)
REFERENCE = Triangle(Point(1.0 / SQRT3, -1.0 / 3.0), Point(-1.0 / SQRT3, -1.0 / 3.0),
                     Point(0.0, 2.0 / 3.0))
BOUNDARY_TOL = 1e-9
NEAR_BOUNDARY = 1e-3


class Realization(enum.Enum):
    NABLA = "nabla"
    DELTA_ANGLES = "delta_angles"


class SpacePoint(NamedTuple):
    realization: Realization
    coords: Point
    boundary: bool = False


class MapSample(NamedTuple):
    source: SpacePoint
    sides: SideLengths
    median: Optional[Barycentric]
    image: Optional[Point]
    boundary: bool
    status: str


def _bary_ref(p) -> tuple[float, float, float]:
    la, lb, _ = to_barycentric(REFERENCE, p)
    return la, lb, 1.0 - la - lb


def nabla_to_sides(p) -> SideLengths:
    """Side lengths encoded by a point of the nabla space (they sum to 1)."""
    coords = p.coords if isinstance(p, SpacePoint) else p
    s = _bary_ref(coords)
    if min(s) < -BOUNDARY_TOL or max(s) > 0.5 + BOUNDARY_TOL:
        raise GeometryError(f"point {tuple(coords)} lies outside the triangle space")
    # clamp round-off just outside the closed region
    s = [min(max(v, 0.0), 0.5) for v in s]
    return SideLengths(s[0], s[1], 1.0 - s[0] - s[1])


def is_boundary(sides: Sequence[float], tol: float = BOUNDARY_TOL) -> bool:
    return max(sides) >= 0.5 - tol


def is_corner(sides: Sequence[float], tol: float = BOUNDARY_TOL) -> bool:
    s = sorted(sides)
    return s[0] <= tol and s[2] >= 0.5 - tol


def sides_to_nabla(s: Sequence[float]) -> SpacePoint:
    s = SideLengths(*(float(v) for v in s))
    if abs(s.perimeter - 1.0) > 1e-12:
        raise GeometryError("sides must be normalised to unit perimeter")
    if min(s) < 0 or max(s) > 0.5 + 1e-12:
        raise GeometryError(f"sides {tuple(s)} violate the triangle inequality")
    return SpacePoint(Realization.NABLA, from_barycentric(REFERENCE, s), is_boundary(s))


def angles_to_delta(alpha: float, beta: float, gamma: float) -> SpacePoint:
    if min(alpha, beta, gamma) < 0 or abs(alpha + beta + gamma - math.pi) > 1e-9:
        raise GeometryError("angles must be non-negative and sum to pi")
    l = (alpha / math.pi, beta / math.pi, gamma / math.pi)
    return SpacePoint(Realization.DELTA_ANGLES, from_barycentric(REFERENCE, l),
                      min(l) <= BOUNDARY_TOL)


def delta_to_angles(p) -> tuple[float, float, float]:
    coords = p.coords if isinstance(p, SpacePoint) else p
    l = _bary_ref(coords)
    if min(l) < -BOUNDARY_TOL:
        raise GeometryError(f"point {tuple(coords)} lies outside the angle space")
    return tuple(math.pi * max(v, 0.0) for v in l)


def sides_from_angles(alpha: float, beta: float, gamma: float) -> SideLengths:
    """Unit-perimeter sides of the triangle with the given angles (law of sines)."""
    s = SideLengths(math.sin(alpha), math.sin(beta), math.sin(gamma))
    return s.normalized()


def sample_nabla(resolution: int) -> list[SpacePoint]:
    """Triangular lattice over the closed nabla space, row-major in (i, j).

    The lattice point (i, j, k), i + j + k = resolution, is the triangle with
    sides ((n - i), (n - j), (n - k)) / (2n).
    """
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    n = resolution
    out = []
    for i in range(n + 1):
        for j in range(n + 1 - i):
            k = n - i - j
            s = ((n - i) / (2 * n), (n - j) / (2 * n), (n - k) / (2 * n))
            out.append(SpacePoint(Realization.NABLA, from_barycentric(REFERENCE, s),
                                  0 in (i, j, k)))
    return out


def _one_sample(args) -> MapSample:
    kind, p, cfg = args
    s = nabla_to_sides(p)
    boundary = is_boundary(s)
    if boundary:
        if kind is MedianKind.M0:
            return MapSample(p, s, None, None, True, "m0-undefined-on-boundary")
        if is_corner(s):
            return MapSample(p, s, None, None, True, "corner-skipped")
        limit = m1_limit_barycentric if kind is MedianKind.M1 else m2_limit_barycentric
        med = limit(s)
        return MapSample(p, s, med, from_barycentric(REFERENCE, med), True, "degenerate-limit")
    if kind is not MedianKind.M0 and max(s) > 0.5 - NEAR_BOUNDARY:
        # objectives flatten near the boundary
        tight = dataclasses.replace(cfg, grad_tol=cfg.grad_tol * 1e-2)
    else:
        tight = cfg
    t = triangle_from_sides(s)
    try:
        med = median_barycentric(t, kind, tight)
    except (ConvergenceError, GeometryError) as exc:
        return MapSample(p, s, None, None, False, f"failed: {exc}")
    return MapSample(p, s, med, from_barycentric(REFERENCE, med), False, "ok")


def default_workers() -> int:
    return max(1, int(os.environ.get("TRIMEDIAN_THREADS", "1")))


def median_map(kind, points: Sequence[SpacePoint], cfg: SolverConfig = DEFAULT_CONFIG,
               workers: Optional[int] = None) -> list[MapSample]:
    """Median map of ``kind`` over nabla-space points, one ``MapSample`` per point.

    Failures are reported per sample in ``status``; output order matches input.
    """
    kind = MedianKind(kind)
    jobs = [(kind, p, cfg) for p in points]
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(jobs) < 64:
        return [_one_sample(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_one_sample, jobs, chunksize=max(1, len(jobs) // (8 * workers))))
