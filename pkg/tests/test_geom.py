import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from discpoly.errors import ChordTooLong, DegenerateChord, EmptyInput, NotUnit, OutOfRange
from discpoly.geom import (
    angle_of,
    ccw_span,
    chord_angle,
    min_enclosing_circle,
    segment_area,
    unit,
    unit_disc_centers_through,
    wrap_angle,
)


def _center_by_bisection(x, y, side):
    """Walk the perpendicular bisector until the distance to x is 1."""
    x, y = np.asarray(x, float), np.asarray(y, float)
    m = 0.5 * (x + y)
    d = y - x
    nrm = np.array([-d[1], d[0]]) / np.hypot(*d) * side
    lo, hi = 0.0, 2.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if np.hypot(*(m + mid * nrm - x)) < 1.0:
            lo = mid
        else:
            hi = mid
    return m + lo * nrm


def test_centers_diameter():
    a, b = unit_disc_centers_through((0, 0), (2, 0))
    assert np.allclose(a, (1, 0), atol=1e-12) and np.allclose(b, (1, 0), atol=1e-12)


def test_centers_sqrt2_against_bisection():
    x, y = (0.0, 0.0), (math.sqrt(2.0), 0.0)
    left, right = unit_disc_centers_through(x, y)
    assert np.allclose(left, _center_by_bisection(x, y, +1), atol=1e-12)
    assert np.allclose(right, _center_by_bisection(x, y, -1), atol=1e-12)
    assert np.allclose(left, (math.sqrt(2) / 2, math.sqrt(2) / 2), atol=1e-12)
    assert np.allclose(right, (math.sqrt(2) / 2, -math.sqrt(2) / 2), atol=1e-12)


def test_centers_errors():
    with pytest.raises(DegenerateChord):
        unit_disc_centers_through((0, 0), (0, 0))
    with pytest.raises(ChordTooLong):
        unit_disc_centers_through((0, 0), (2.001, 0))
    # inside the tolerance band the chord is clamped
    a, b = unit_disc_centers_through((0, 0), (2 + 1e-13, 0))
    assert np.allclose(a, b, atol=1e-6)


@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0, 2 * math.pi), st.floats(1e-6, 2.0))
def test_centers_on_both_circles(x0, y0, phi, d):
    x = np.array([x0, y0])
    y = x + d * unit(phi)
    left, right = unit_disc_centers_through(x, y)
    for c in (left, right):
        assert abs(np.hypot(*(c - x)) - 1.0) <= 1e-12
        assert abs(np.hypot(*(c - y)) - 1.0) <= 1e-12
    dx, dy = y - x
    assert dx * (left[1] - x[1]) - dy * (left[0] - x[0]) >= -1e-12


def _segment_by_quadrature(chord):
    # region between the unit circle and the line at distance h from its center
    h = math.sqrt(1.0 - chord * chord / 4.0)
    val, _ = quad(lambda y: 2.0 * math.sqrt(max(0.0, 1.0 - y * y)), h, 1.0, epsabs=1e-13, epsrel=1e-13)
    return val


def test_segment_area_values():
    assert segment_area(0.0) == 0.0
    assert segment_area(2.0) == pytest.approx(math.pi / 2, abs=1e-15)
    assert segment_area(1.0) == pytest.approx(_segment_by_quadrature(1.0), abs=1e-12)
    assert segment_area(1.0) == pytest.approx((math.pi / 3 - math.sin(math.pi / 3)) / 2, abs=1e-15)
    for c in (0.1, 0.7, 1.3, 1.9):
        assert segment_area(c) == pytest.approx(_segment_by_quadrature(c), abs=1e-11)


def test_segment_area_disc_and_errors():
    assert abs(2 * segment_area(2.0) - math.pi) <= 1e-12
    with pytest.raises(OutOfRange):
        segment_area(-0.1)
    with pytest.raises(OutOfRange):
        segment_area(2.1)


@given(st.floats(0, 2), st.floats(0, 2))
def test_segment_area_monotone(a, b):
    lo, hi = sorted((a, b))
    assert segment_area(lo) <= segment_area(hi)


def test_angle_of():
    assert angle_of((1, 0)) == 0.0
    assert angle_of((0, 1)) == pytest.approx(math.pi / 2)
    assert angle_of((-1, 0)) == pytest.approx(math.pi)
    assert 0.0 <= angle_of((1, -1e-17)) < 2 * math.pi
    with pytest.raises(NotUnit):
        angle_of((2, 0))


@given(st.floats(-20, 20))
def test_angle_roundtrip(phi):
    u = unit(phi)
    a = angle_of(u)
    assert 0.0 <= a < 2 * math.pi
    assert np.allclose(unit(a), u, atol=1e-9)
    assert 0.0 <= wrap_angle(phi) < 2 * math.pi
    assert 0.0 <= ccw_span(0.3, phi) < 2 * math.pi


def _mec_brute(pts):
    best = (math.inf, None)
    cands = []
    for a, b in itertools.combinations(pts, 2):
        cands.append((0.5 * (a + b), 0.5 * np.hypot(*(a - b))))
    for a, b, c in itertools.combinations(pts, 3):
        d = 2 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
        if abs(d) < 1e-14:
            continue
        ux = ((a @ a) * (b[1] - c[1]) + (b @ b) * (c[1] - a[1]) + (c @ c) * (a[1] - b[1])) / d
        uy = ((a @ a) * (c[0] - b[0]) + (b @ b) * (a[0] - c[0]) + (c @ c) * (b[0] - a[0])) / d
        o = np.array([ux, uy])
        cands.append((o, np.hypot(*(a - o))))
    for o, r in cands:
        if np.all(np.hypot(*(pts - o).T) <= r + 1e-12) and r < best[0]:
            best = (r, o)
    return best


def test_mec_examples():
    c = min_enclosing_circle([(0, 0)])
    assert c.radius == 0 and np.allclose(c.center, (0, 0))
    c = min_enclosing_circle([(0, 0), (2, 0)])
    assert c.radius == pytest.approx(1.0) and np.allclose(c.center, (1, 0))
    tri = [(0, 0), (1, 0), (0.5, math.sqrt(3) / 2)]
    c = min_enclosing_circle(tri)
    assert c.radius == pytest.approx(1 / math.sqrt(3), abs=1e-12)
    with pytest.raises(EmptyInput):
        min_enclosing_circle([])


@pytest.mark.parametrize("seed", range(40))
def test_mec_against_brute_force(seed):
    g = np.random.default_rng(seed)
    pts = g.normal(size=(int(g.integers(2, 9)), 2))
    c = min_enclosing_circle(pts)
    r, _ = _mec_brute(pts)
    assert c.radius == pytest.approx(r, abs=1e-10)
    assert np.all(np.hypot(*(pts - c.center).T) <= c.radius + 1e-12)


@given(st.lists(st.tuples(st.floats(-5, 5), st.floats(-5, 5)), min_size=1, max_size=15), st.randoms())
def test_mec_permutation_and_duplication(pts, rnd):
    base = min_enclosing_circle(pts)
    shuffled = list(pts) + list(pts[: len(pts) // 2])
    rnd.shuffle(shuffled)
    other = min_enclosing_circle(shuffled)
    assert other.radius == pytest.approx(base.radius, abs=1e-9)
    assert np.allclose(other.center, base.center, atol=1e-7)


def test_segment_area_small_angles():
    # exact value 0.5 * (theta - sin theta), from the series with a few more terms
    for chord in (1e-8, 1e-5, 9.99e-4, 1.001e-3, 0.01):
        th = chord_angle(chord)
        ref = 0.5 * sum((-1) ** k * th ** (2 * k + 3) / math.factorial(2 * k + 3) for k in range(8))
        assert segment_area(chord) == pytest.approx(ref, rel=1e-13)
