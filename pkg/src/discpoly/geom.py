"""Scalar and circle primitives at unit radius.

Points are length-2 float arrays (or anything ``np.asarray`` turns into one).
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .constants import EPS_CHORD, EPS_GEOM
from .errors import ChordTooLong, DegenerateChord, EmptyInput, NotUnit, OutOfRange

TWO_PI = 2.0 * math.pi


def as_point(p) -> np.ndarray:
    q = np.asarray(p, dtype=float).reshape(2)
    if not np.all(np.isfinite(q)):
        raise ValueError(f"point has non-finite coordinates: {q}")
    return q


@dataclass(frozen=True)
class Circle:
    center: tuple[float, float]
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius >= 0.0):
            raise ValueError(f"bad radius {self.radius}")

    def contains(self, p, eps: float = EPS_GEOM) -> bool:
        return math.hypot(p[0] - self.center[0], p[1] - self.center[1]) <= self.radius + eps


def cross(ax: float, ay: float, bx: float, by: float) -> float:
    return ax * by - ay * bx


def unit_disc_centers_through(x, y) -> tuple[np.ndarray, np.ndarray]:
    """Centers of the two unit circles through ``x`` and ``y``.

    The first center lies to the left of the directed line x -> y. For a
    chord of length 2 both centers are the midpoint.
    """
    x = as_point(x)
    y = as_point(y)
    dx, dy = y[0] - x[0], y[1] - x[1]
    d = math.hypot(dx, dy)
    if d <= EPS_CHORD:
        raise DegenerateChord(f"|x-y| = {d:g}")
    if d > 2.0 + EPS_GEOM:
        raise ChordTooLong(f"|x-y| = {d!r} > 2")
    h = math.sqrt(max(0.0, 1.0 - 0.25 * d * d))
    mx, my = 0.5 * (x[0] + y[0]), 0.5 * (x[1] + y[1])
    # left normal of the chord, scaled to the offset
    nx, ny = -dy / d * h, dx / d * h
    return np.array([mx + nx, my + ny]), np.array([mx - nx, my - ny])


def chord_angle(chord: float) -> float:
    """Central angle of a unit arc with the given chord (minor arc)."""
    return 2.0 * math.asin(min(1.0, 0.5 * chord))


def segment_area(chord: float) -> float:
    """Area between a unit minor arc and its chord."""
    if chord < 0.0 or chord > 2.0 + EPS_GEOM:
        raise OutOfRange(f"chord {chord!r} outside [0, 2]")
    theta = chord_angle(chord)
    if theta < 1e-3:
        # theta - sin(theta) cancels for small angles; the series does not
        t2 = theta * theta
        return 0.5 * theta * t2 * (1.0 / 6.0 - t2 * (1.0 / 120.0 - t2 / 5040.0))
    return 0.5 * (theta - math.sin(theta))


def angle_of(u) -> float:
    """Inverse of the parametrisation phi -> (cos phi, sin phi), in [0, 2pi)."""
    u = as_point(u)
    if abs(math.hypot(u[0], u[1]) - 1.0) > 1e-9:
        raise NotUnit(f"|u| = {math.hypot(u[0], u[1])!r}")
    a = math.atan2(u[1], u[0])
    if a < 0.0:
        a += TWO_PI
    # atan2 can round -tiny up to exactly 2pi
    return 0.0 if a >= TWO_PI else a


def unit(phi: float) -> np.ndarray:
    return np.array([math.cos(phi), math.sin(phi)])


def wrap_angle(a: float) -> float:
    """Reduce to [0, 2pi)."""
    a = math.fmod(a, TWO_PI)
    if a < 0.0:
        a += TWO_PI
    return 0.0 if a >= TWO_PI else a


def ccw_span(start: float, stop: float) -> float:
    """Counterclockwise angular distance from ``start`` to ``stop`` in [0, 2pi)."""
    return wrap_angle(stop - start)


# -- minimum enclosing circle ------------------------------------------------

def _diameter_circle(a, b) -> tuple[float, float, float]:
    cx, cy = 0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])
    r = max(math.hypot(cx - a[0], cy - a[1]), math.hypot(cx - b[0], cy - b[1]))
    return cx, cy, r


def _circumcircle(a, b, c):
    ox = (min(a[0], b[0], c[0]) + max(a[0], b[0], c[0])) / 2
    oy = (min(a[1], b[1], c[1]) + max(a[1], b[1], c[1])) / 2
    ax, ay = a[0] - ox, a[1] - oy
    bx, by = b[0] - ox, b[1] - oy
    cx, cy = c[0] - ox, c[1] - oy
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if d == 0.0:
        return None
    a2, b2, c2 = ax * ax + ay * ay, bx * bx + by * by, cx * cx + cy * cy
    x = ox + (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d
    y = oy + (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d
    r = max(math.hypot(x - p[0], y - p[1]) for p in (a, b, c))
    return x, y, r


def _inside(c, p) -> bool:
    return c is not None and math.hypot(p[0] - c[0], p[1] - c[1]) <= c[2] * (1.0 + 1e-14) + EPS_GEOM


def _mec_two(pts, p, q):
    circ = _diameter_circle(p, q)
    left = right = None
    px, py = p
    qx, qy = q
    for r in pts:
        if _inside(circ, r):
            continue
        side = cross(qx - px, qy - py, r[0] - px, r[1] - py)
        c = _circumcircle(p, q, r)
        if c is None:
            continue
        cs = cross(qx - px, qy - py, c[0] - px, c[1] - py)
        if side > 0.0 and (left is None or cs > cross(qx - px, qy - py, left[0] - px, left[1] - py)):
            left = c
        elif side < 0.0 and (right is None or cs < cross(qx - px, qy - py, right[0] - px, right[1] - py)):
            right = c
    if left is None and right is None:
        return circ
    if left is None:
        return right
    if right is None:
        return left
    return left if left[2] <= right[2] else right


def _mec_one(pts, p):
    c = (p[0], p[1], 0.0)
    for i, q in enumerate(pts):
        if not _inside(c, q):
            if c[2] == 0.0:
                c = _diameter_circle(p, q)
            else:
                c = _mec_two(pts[: i + 1], p, q)
    return c


def min_enclosing_circle(points: Sequence) -> Circle:
    """Smallest circle containing all points (Welzl-style, expected linear time).

    The processing order is a fixed pseudo-random shuffle of the input, so
    the result depends only on the input order.
    """
    pts = [(float(p[0]), float(p[1])) for p in points]
    if not pts:
        raise EmptyInput("min_enclosing_circle of no points")
    random.Random(0x5EED).shuffle(pts)
    c = None
    for i, p in enumerate(pts):
        if c is None or not _inside(c, p):
            c = _mec_one(pts[: i + 1], p)
    return Circle((c[0], c[1]), c[2])
