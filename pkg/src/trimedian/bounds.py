"""Containment regions for the perimeter and area medians, and their verification.

In barycentric coordinates of a triangle, the quarter-size homothetic copy
about the centroid is ``{min l >= 1/4}``.  The curvilinear triangle bounded by
three hyperbola arcs is ``{min l >= 1/4, l_i l_j <= 1/8 for every pair}``;
the arc between the vertices (1/2, 1/4, 1/4) and (1/4, 1/2, 1/4) is
``l_a l_b = 1/8``, a hyperbola centred at vertex C with the sides CA, CB as
asymptotes.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

import numpy as np

from .geometry import Point, SideLengths, triangle_from_sides, to_barycentric
from .solvers import DEFAULT_CONFIG, ConvergenceError, MedianKind, SolverConfig, median_point
from .space import default_workers, sides_from_angles

LN_SQRT2 = math.log(math.sqrt(2.0))
SAMPLE_MARGIN = 1e-6
MEMBERSHIP_TOL = 1e-7

# rotation of the reference frame by +120 degrees sends the ab arc to ca and
# ca to bc
_ARC_TURNS = {"ab": 0, "ca": 1, "bc": 2}


def in_quarter_triangle(l: Sequence[float], tol: float = MEMBERSHIP_TOL) -> tuple[bool, float]:
    margin = min(l) - 0.25
    return margin >= -tol, margin


def hyperbolic_margin(l: Sequence[float]) -> float:
    """Smallest slack of the six constraints; positive inside."""
    la, lb, lc = l
    return min(la - 0.25, lb - 0.25, lc - 0.25,
               0.125 - la * lb, 0.125 - lb * lc, 0.125 - lc * la)


def in_hyperbolic_triangle(l: Sequence[float], tol: float = MEMBERSHIP_TOL) -> tuple[bool, float]:
    margin = hyperbolic_margin(l)
    return margin >= -tol, margin


def hyperbola_arc(t_param: float, pair: str = "ab") -> Point:
    """Point of the boundary arc ``l_i l_j = 1/8`` in the reference frame.

    For the default pair this is ``(sinh t / sqrt 6, 2/3 - cosh t / sqrt 2)``,
    ``|t| <= ln sqrt 2``; the other two arcs are rotations by 120 degrees.
    """
    if abs(t_param) > LN_SQRT2 * (1 + 1e-12):
        raise ValueError(f"arc parameter {t_param} outside [-ln sqrt 2, ln sqrt 2]")
    x = math.sinh(t_param) / math.sqrt(6.0)
    y = 2.0 / 3.0 - math.cosh(t_param) / math.sqrt(2.0)
    turns = _ARC_TURNS[pair]
    if turns:
        ang = turns * 2.0 * math.pi / 3.0
        c, s = math.cos(ang), math.sin(ang)
        x, y = c * x - s * y, s * x + c * y
    return Point(x, y)


def arc_polyline(n: int = 200) -> list[Point]:
    """Closed outline of the curvilinear triangle; the arcs chain as ab, ca, bc."""
    pts = []
    for pair in ("ab", "ca", "bc"):
        for k in range(n):
            pts.append(hyperbola_arc(-LN_SQRT2 + 2.0 * LN_SQRT2 * k / n, pair))
    return pts


@dataclass
class BoundsReport:
    n_samples: int
    m1_violations: int
    m2_violations: int
    worst_m1_margin: float
    worst_m2_margin: float
    seed: int
    solver_failures: int = 0
    measure: str = "nabla"
    worst_m1_sides: Optional[tuple[float, float, float]] = None
    worst_m2_sides: Optional[tuple[float, float, float]] = None

    def to_dict(self) -> dict:
        return asdict(self)


def sample_sides(rng: np.random.Generator, measure: str = "nabla") -> SideLengths:
    """Draw one unit-perimeter triangle.

    ``nabla``: uniform over the side-length space, keeping the longest side
    below 1/2 - 1e-6.  ``angles``: uniform over the angle space.
    """
    while True:
        l = rng.dirichlet((1.0, 1.0, 1.0))
        if measure == "nabla":
            if l.max() < 0.5 - SAMPLE_MARGIN:
                return SideLengths(*map(float, l))
        elif measure == "angles":
            if l.min() > SAMPLE_MARGIN:
                s = sides_from_angles(*(math.pi * float(v) for v in l))
                if max(s) < 0.5 - SAMPLE_MARGIN:
                    return s
        else:
            raise ValueError(f"unknown sampling measure {measure!r}")


def sample_rng(seed: int, index: int) -> np.random.Generator:
    """Independent stream for sample ``index``; results do not depend on scheduling."""
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(index,)))


def _check_one(seed, index, cfg, measure, override):
    s = sample_sides(sample_rng(seed, index), measure)
    t = triangle_from_sides(s)
    out = []
    for kind in (MedianKind.M1, MedianKind.M2):
        if override and kind in override:
            out.append(tuple(override[kind]))
            continue
        try:
            out.append(to_barycentric(t, median_point(t, kind, cfg)))
        except ConvergenceError:
            out.append(None)
    return s, out[0], out[1]


def _check_job(job):
    return _check_one(*job)


def verify_bounds(n: int, seed: int, cfg: SolverConfig = DEFAULT_CONFIG,
                  measure: str = "nabla", tol: float = MEMBERSHIP_TOL,
                  override: Optional[dict] = None,
                  workers: Optional[int] = None) -> BoundsReport:
    """Check both containment claims on ``n`` random triangles.

    ``override`` maps a ``MedianKind`` to a barycentric triple that replaces
    the solved value of the first sample (negative control for the checker).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    workers = default_workers() if workers is None else workers
    jobs = [(seed, i, cfg, measure, override if i == 0 else None) for i in range(n)]
    if workers <= 1 or n < 64:
        results = [_check_one(*job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_job, jobs, chunksize=max(1, n // (8 * workers))))
    report = BoundsReport(n, 0, 0, math.inf, math.inf, seed, measure=measure)
    for s, l1, l2 in results:
        if l1 is None or l2 is None:
            report.solver_failures += 1
        if l1 is not None:
            ok, margin = in_quarter_triangle(l1, tol)
            report.m1_violations += not ok
            if margin < report.worst_m1_margin:
                report.worst_m1_margin = margin
                report.worst_m1_sides = tuple(s)
        if l2 is not None:
            ok, margin = in_hyperbolic_triangle(l2, tol)
            report.m2_violations += not ok
            if margin < report.worst_m2_margin:
                report.worst_m2_margin = margin
                report.worst_m2_sides = tuple(s)
    return report
