"""Geometric medians of triangles: vertex (Fermat), perimeter and area medians."""

__version__ = "0.1.0"

from .geometry import (  # noqa: E402
    Barycentric,
    GeometryError,
    Point,
    SideLengths,
    Triangle,
    TriangleClass,
    apply_affine,
    classify,
    from_barycentric,
    quarter_homothety,
    to_barycentric,
    triangle_from_sides,
)
from .solvers import (  # noqa: E402
    ConvergenceError,
    MedianKind,
    SolverConfig,
    area_median,
    fermat_point,
    median_barycentric,
    median_point,
    perimeter_median,
)

__all__ = [
    "Barycentric", "GeometryError", "Point", "SideLengths", "Triangle", "TriangleClass",
    "apply_affine", "classify", "from_barycentric", "quarter_homothety", "to_barycentric",
    "triangle_from_sides", "ConvergenceError", "MedianKind", "SolverConfig", "area_median",
    "fermat_point", "median_barycentric", "median_point", "perimeter_median",
]
