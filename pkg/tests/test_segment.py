import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trimedian.segment import (
    Segment,
    integral,
    integral_aligned,
    integral_derivatives,
    integral_gradient,
    integral_inside_form,
    integral_outside_form,
)

from oracles import central_gradient, quad_segment

# int_0^1 sqrt((s - 1/2)^2 + 1/4) ds and sqrt(2) int_0^1 sqrt(2t^2 - 2t + 1) dt,
# both by scipy quad at epsrel 1e-13
QUAD_HALF_HALF = 0.5738967873481595
QUAD_HYPOTENUSE = 1.147793574696319


@pytest.mark.parametrize("frame, expected", [
    ((-1, 1, 0, 0), 1.0),
    ((0, 1, 2, 0), 1.5),
    ((0, 1, 0.5, 0.5), QUAD_HALF_HALF),
])
def test_integral_aligned_examples(frame, expected):
    assert integral_aligned(*frame) == pytest.approx(expected, rel=1e-13)


def test_integral_general_position_examples():
    assert integral(Segment((0, 0), (1, 0)), (0.5, 0.5)) == pytest.approx(QUAD_HALF_HALF, rel=1e-13)
    assert integral(Segment((1, 1), (1, 3)), (1, 2)) == pytest.approx(1.0, rel=1e-14)
    assert integral(Segment((1, 0), (0, 1)), (0, 0)) == pytest.approx(QUAD_HYPOTENUSE, rel=1e-13)


@pytest.mark.parametrize("x", [0.0, 1.0, 0.3, -0.5, 1.5])
def test_on_line_without_log_of_zero(x):
    expected = quad_segment((0, 0), (1, 0), (x, 0))
    assert integral_aligned(0.0, 1.0, x, 0.0) == pytest.approx(expected, rel=1e-12)


def test_gradient_examples():
    gx, gy = integral_gradient(Segment((-1, 0), (1, 0)), (0, 1))
    assert gx == pytest.approx(0.0, abs=1e-15)
    assert gy > 0
    assert integral_gradient(Segment((0, 0), (1, 0)), (2, 0)) == pytest.approx((1.0, 0.0))
    seg = Segment((0, 0), (1, 0))
    fd = central_gradient(lambda p: integral(seg, p), (0.5, 0.5), 1e-6)
    assert np.allclose(integral_gradient(seg, (0.5, 0.5)), fd, rtol=1e-8, atol=1e-10)


def test_gradient_on_open_segment_is_the_continuous_limit():
    # the integrand (x - P)/|x - P| jumps at one point only, so the gradient is continuous
    seg = Segment((0, 0), (1, 0))
    on = integral_gradient(seg, (0.3, 0.0))
    near = integral_gradient(seg, (0.3, 1e-9))
    assert on == pytest.approx((0.3 - 0.7, 0.0))
    assert np.allclose(on, near, atol=1e-7)


@settings(max_examples=300)
@given(st.floats(-3, 3), st.floats(0.05, 3), st.floats(-5, 5), st.floats(-3, 3))
def test_inside_and_outside_forms_agree_where_stable(alpha, length, x, y):
    beta = alpha + length
    if abs(y) < 1e-3 or min(abs(x - alpha), abs(x - beta)) > 10 * length:
        return
    a = integral_inside_form(alpha, beta, x, y)
    b = integral_outside_form(alpha, beta, x, y)
    assert a == pytest.approx(b, rel=1e-10)
    assert integral_aligned(alpha, beta, x, y) == pytest.approx(a, rel=1e-10)


def test_dispatcher_beats_unstable_form_far_away():
    # far beyond the end, the y^2 ln y^2 form cancels catastrophically
    ref = quad_segment((0, 0), (1, 0), (1e4, 1e-3))
    assert integral_aligned(0.0, 1.0, 1e4, 1e-3) == pytest.approx(ref, rel=1e-12)


def _random_rigid(rng):
    th = rng.uniform(0, 2 * math.pi)
    c, s = math.cos(th), math.sin(th)
    tx, ty = rng.uniform(-10, 10, 2)
    return lambda p: (c * p[0] - s * p[1] + tx, s * p[0] + c * p[1] + ty)


@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1))
def test_rigid_invariance_and_scaling(seed):
    rng = np.random.default_rng(seed)
    p1, p2, x = (tuple(rng.uniform(-3, 3, 2)) for _ in range(3))
    if math.dist(p1, p2) < 1e-3:
        return
    base = integral(Segment(p1, p2), x)
    R = _random_rigid(rng)
    assert integral(Segment(R(p1), R(p2)), R(x)) == pytest.approx(base, rel=1e-12)
    k = rng.uniform(0.1, 10)

    def scaled(p):
        return (k * p[0], k * p[1])

    assert integral(Segment(scaled(p1), scaled(p2)), scaled(x)) == pytest.approx(k * k * base,
                                                                                 rel=1e-12)


@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1))
def test_gradient_and_hessian_match_finite_differences(seed):
    rng = np.random.default_rng(seed)
    p1, p2 = (tuple(rng.uniform(-3, 3, 2)) for _ in range(2))
    length = math.dist(p1, p2)
    if length < 1e-2:
        return
    seg = Segment(p1, p2)
    x = tuple(rng.uniform(-4, 4, 2))
    # distance to the supporting line
    d = abs((p2[0] - p1[0]) * (x[1] - p1[1]) - (p2[1] - p1[1]) * (x[0] - p1[0])) / length
    if d < 1e-3 * length:
        return
    h = 1e-6 * length
    g = np.array(integral_gradient(seg, x))
    fd = central_gradient(lambda p: integral(seg, p), x, h)
    assert np.linalg.norm(g - fd) <= 1e-6 * max(np.linalg.norm(g), length)
    _, _, H = integral_derivatives(seg, x)
    fdh = np.column_stack([
        central_gradient(lambda p: integral_gradient(seg, p)[k], x, h) for k in range(2)
    ])
    assert np.allclose(np.array(H), fdh, rtol=1e-5, atol=1e-6 * max(1.0, np.abs(H).max()))
