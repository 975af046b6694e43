import math

import numpy as np
import pytest

from trimedian.bounds import in_hyperbolic_triangle, in_quarter_triangle
from trimedian.geometry import GeometryError, Point, Triangle, to_barycentric, triangle_from_sides
from trimedian.solvers import (
    ConvergenceError,
    MedianKind,
    SolverConfig,
    area_median,
    fermat_point,
    median_barycentric,
    median_point,
    perimeter_gradient,
    perimeter_median,
)

from oracles import (
    area_objective_grid,
    fermat_oracle,
    grid_minimise,
    perimeter_objective_grid,
    random_triangle,
    x13_barycentric,
)


def _law_of_cosines(a, b, c):
    return (math.acos((b * b + c * c - a * a) / (2 * b * c)),
            math.acos((c * c + a * a - b * b) / (2 * c * a)),
            math.acos((a * a + b * b - c * c) / (2 * a * b)))


@pytest.mark.parametrize("kind", list(MedianKind))
def test_equilateral_gives_centroid(kind):
    t = triangle_from_sides((1, 1, 1))
    assert math.dist(median_point(t, kind), t.centroid) <= 1e-10
    assert median_barycentric(t, kind) == pytest.approx((1 / 3,) * 3, abs=1e-10)


def test_fermat_clamps_to_wide_vertex():
    t = Triangle(Point(0, 0), Point(1, 0), Point(math.cos(math.radians(150)),
                                                 math.sin(math.radians(150))))
    assert fermat_point(t) == t.va


def test_fermat_unit_vectors_balance_9_7_5():
    t = triangle_from_sides((9, 7, 5))
    m = fermat_point(t)
    s = np.zeros(2)
    for v in t.vertices:
        d = np.subtract(v, m)
        s += d / np.linalg.norm(d)
    assert np.linalg.norm(s) < 1e-12
    assert math.dist(m, fermat_oracle(t.vertices)) <= 1e-8 * t.diameter


def test_fermat_matches_x13_barycentrics():
    sides = (9.0, 7.0, 5.0)
    t = triangle_from_sides(sides)
    expected = x13_barycentric(sides, _law_of_cosines(*sides))
    assert median_barycentric(t, MedianKind.M0) == pytest.approx(expected, rel=1e-9)


@pytest.mark.parametrize("solver", [fermat_point, perimeter_median, area_median])
def test_rejects_collinear(solver):
    with pytest.raises(GeometryError):
        solver(triangle_from_sides((0.5, 0.3, 0.2)))


def test_9_7_5_medians_lie_in_their_regions():
    t = triangle_from_sides((9, 7, 5))
    l1 = median_barycentric(t, MedianKind.M1)
    l2 = median_barycentric(t, MedianKind.M2)
    assert min(l1) >= 0.25
    assert in_quarter_triangle(l1)[0]
    assert in_hyperbolic_triangle(l2)[0]
    assert all(v > 0 for v in l1 + l2)
    assert np.linalg.norm(perimeter_gradient(t, perimeter_median(t))) <= 1e-12 * t.perimeter


def test_near_degenerate_9_8_1():
    eps = 1e-4
    t = triangle_from_sides((9, 8, 1 + eps))
    c = t.vc
    m1 = perimeter_median(t)
    m2 = area_median(t)
    # midpoint of side a, vertical offset of order sqrt(eps) times the scale
    assert math.dist(m1, ((t.vb.x + c.x) / 2, 0.0)) < 1e-3 * t.perimeter
    assert math.dist(m1, c) == pytest.approx(4.5, rel=1e-3)
    assert math.dist(m2, c) == pytest.approx(6.0, rel=1e-2)

    def line_distance(p, q, x):
        return abs((q.x - p.x) * (x[1] - p.y) - (q.y - p.y) * (x[0] - p.x)) / math.dist(p, q)

    ratio = line_distance(c, t.vb, m1) / line_distance(c, t.va, m1)
    assert ratio == pytest.approx(1.0, abs=0.05)


def _similarity(rng):
    th = rng.uniform(0, 2 * math.pi)
    k = rng.uniform(0.1, 10)
    flip = rng.random() < 0.5
    tx, ty = rng.uniform(-20, 20, 2)
    c, s = math.cos(th), math.sin(th)

    def f(p):
        x, y = p[0], (-p[1] if flip else p[1])
        return Point(k * (c * x - s * y) + tx, k * (s * x + c * y) + ty)

    return f


@pytest.mark.parametrize("kind", list(MedianKind))
def test_similarity_equivariance(kind):
    rng = np.random.default_rng(5)
    for _ in range(20):
        t = Triangle(*random_triangle(rng))
        S = _similarity(rng)
        st = Triangle(*map(S, t.vertices))
        assert math.dist(median_point(st, kind), S(median_point(t, kind))) <= 1e-9 * st.diameter


@pytest.mark.parametrize("solver", [perimeter_median, area_median])
def test_multi_start_agreement(solver):
    rng = np.random.default_rng(9)
    for _ in range(10):
        t = Triangle(*random_triangle(rng))
        ref = solver(t)
        for _ in range(5):
            w = rng.dirichlet((1, 1, 1))
            start = tuple(sum(wi * v[k] for wi, v in zip(w, t.vertices)) for k in range(2))
            assert math.dist(solver(t, start=start), ref) <= 1e-8 * t.diameter


@pytest.mark.parametrize("solver, objective", [(perimeter_median, perimeter_objective_grid),
                                               (area_median, area_objective_grid)])
def test_brute_force_grid_agreement(solver, objective):
    rng = np.random.default_rng(21)
    for _ in range(20):
        verts = random_triangle(rng)
        found, cell = grid_minimise(objective, verts)
        m = solver(Triangle(*verts))
        assert np.max(np.abs(found - np.asarray(m))) <= cell


@pytest.mark.parametrize("kind", list(MedianKind))
def test_label_permutation_equivariance(kind):
    rng = np.random.default_rng(13)
    for _ in range(10):
        v = random_triangle(rng)
        base = median_barycentric(Triangle(*v), kind)
        for perm in ((1, 2, 0), (2, 0, 1), (1, 0, 2)):
            permuted = median_barycentric(Triangle(*[v[i] for i in perm]), kind)
            assert permuted == pytest.approx([base[i] for i in perm], abs=1e-10)


@pytest.mark.parametrize("solver", [perimeter_median, area_median])
def test_fd_hessian_option_agrees(solver):
    rng = np.random.default_rng(17)
    fd = SolverConfig(hessian="fd")
    for _ in range(10):
        t = Triangle(*random_triangle(rng))
        assert math.dist(solver(t, fd), solver(t)) <= 1e-9 * t.diameter


def test_convergence_error_carries_last_iterate():
    t = triangle_from_sides((9, 7, 5))
    with pytest.raises(ConvergenceError) as info:
        perimeter_median(t, SolverConfig(max_iter=1, grad_tol=1e-15))
    err = info.value
    assert isinstance(err.last_iterate, Point)
    assert err.grad_norm > 0
    to_barycentric(t, err.last_iterate)


@pytest.mark.parametrize("kwargs", [dict(grad_tol=0), dict(max_iter=0), dict(step_shrink=1.0),
                                    dict(hessian="bfgs")])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        SolverConfig(**kwargs)
