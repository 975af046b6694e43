import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trimedian.area import area_gradient, area_integral, edge_average_residual, edge_data
from trimedian.geometry import GeometryError, Point, Triangle, triangle_from_sides
from trimedian.solvers import area_median

from oracles import central_gradient, quad_triangle, random_triangle

RIGHT = Triangle(Point(0, 0), Point(1, 0), Point(0, 1))
RIGHT_VERTEX_VALUE = (math.sqrt(2) + math.log(1 + math.sqrt(2))) / (6 * math.sqrt(2))


def test_right_triangle_at_right_angle_vertex():
    assert area_integral(RIGHT, (0, 0)) == pytest.approx(RIGHT_VERTEX_VALUE, rel=1e-14)
    assert RIGHT_VERTEX_VALUE == pytest.approx(0.27053754, abs=5e-9)
    assert quad_triangle(RIGHT.vertices, (0, 0)) == pytest.approx(RIGHT_VERTEX_VALUE, rel=1e-10)


def test_rejects_collinear():
    with pytest.raises(GeometryError):
        area_integral(triangle_from_sides((0.5, 0.3, 0.2)), (0, 0))


def test_outward_normals_are_unit_and_balance():
    t = Triangle(*random_triangle(np.random.default_rng(3)))
    edges = edge_data(t)
    total = np.zeros(2)
    for e in edges:
        assert math.hypot(*e.outward_normal) == pytest.approx(1.0, abs=1e-15)
        total += e.length * np.array(e.outward_normal)
        # the opposite vertex is on the inner side
        assert e.signed_distance(t.centroid) > 0
    assert np.allclose(total, 0, atol=1e-12 * t.perimeter)


@pytest.mark.parametrize("seed", range(10))
def test_matches_quadrature_inside_and_outside(seed):
    rng = np.random.default_rng(seed)
    verts = random_triangle(rng)
    t = Triangle(*verts)
    c = np.asarray(t.centroid)
    for x in (c + rng.normal(size=2) * 0.3 * t.diameter, c + rng.normal(size=2) * 2 * t.diameter):
        ref = quad_triangle(verts, x)
        assert area_integral(t, x) == pytest.approx(ref, rel=1e-9)


def test_far_field():
    t = triangle_from_sides((9, 7, 5))
    x = (1e5, -3e5)
    assert area_integral(t, x) == pytest.approx(t.area * math.dist(x, t.centroid), rel=1e-3)


def test_centroid_of_equilateral_is_minimal_among_samples():
    t = triangle_from_sides((1, 1, 1))
    rng = np.random.default_rng(0)
    f0 = area_integral(t, t.centroid)
    for _ in range(50):
        x = np.asarray(t.centroid) + rng.normal(size=2) * 0.2
        assert area_integral(t, x) > f0


@settings(max_examples=100)
@given(st.integers(0, 2**32 - 1), st.floats(0.1, 10))
def test_cubic_scaling(seed, k):
    rng = np.random.default_rng(seed)
    verts = random_triangle(rng)
    x = rng.normal(size=2) * 3
    t = Triangle(*verts)
    tk = Triangle(*[(k * p[0], k * p[1]) for p in verts])
    assert area_integral(tk, k * x) == pytest.approx(k**3 * area_integral(t, x), rel=1e-11)


def test_gradient_examples():
    eq = triangle_from_sides((1, 1, 1))
    assert area_gradient(eq, eq.centroid) == pytest.approx((0, 0), abs=1e-12)
    assert edge_average_residual(eq, eq.centroid) == pytest.approx((0, 0), abs=1e-12)
    # outside, on the perpendicular bisector of edge a (the x-axis segment from B to C)
    g = area_gradient(eq, (0.5, -2.0))
    assert g[0] == pytest.approx(0.0, abs=1e-12)
    assert g[1] < 0


def test_isosceles_residual_on_axis():
    t = triangle_from_sides((1.3, 1.3, 1.0))
    # a = b means C-A = C-B, so the axis passes through C and the midpoint of AB
    mid = ((t.va.x + t.vb.x) / 2, (t.va.y + t.vb.y) / 2)
    for s in (0.1, 0.4, 0.9, 1.5):
        x = (mid[0] + s * (t.vc.x - mid[0]), mid[1] + s * (t.vc.y - mid[1]))
        assert edge_average_residual(t, x)[0] == pytest.approx(0.0, abs=1e-13)


@settings(max_examples=100)
@given(st.integers(0, 2**32 - 1))
def test_gradient_is_the_true_gradient(seed):
    # sign fixed once by finite differences: area_gradient returns +grad F
    rng = np.random.default_rng(seed)
    t = Triangle(*random_triangle(rng))
    x = np.asarray(t.centroid) + rng.normal(size=2) * t.diameter
    if min(abs(e.signed_distance(x)) for e in edge_data(t)) < 1e-6 * t.diameter:
        return
    g = np.array(area_gradient(t, x))
    fd = central_gradient(lambda p: area_integral(t, p), x, 1e-6 * t.diameter)
    assert np.linalg.norm(g - fd) <= 1e-6 * np.linalg.norm(g) + 1e-9 * t.diameter**2


def test_stationarity_conditions_coincide_at_solved_median():
    rng = np.random.default_rng(11)
    for _ in range(100):
        t = Triangle(*random_triangle(rng))
        m = area_median(t)
        p = t.perimeter
        assert np.linalg.norm(area_gradient(t, m)) <= 1e-11 * p * p
        r = edge_average_residual(t, m)
        assert max(abs(r[0]), abs(r[1])) <= 1e-9 * p


def test_residual_vanishes_only_with_gradient():
    t = triangle_from_sides((9, 7, 5))
    x = (4.0, 1.0)
    assert np.linalg.norm(area_gradient(t, x)) > 1e-3
    assert max(map(abs, edge_average_residual(t, x))) > 1e-3
    r = edge_average_residual(t, area_median(t))
    assert max(map(abs, r)) < 1e-9 * t.perimeter
