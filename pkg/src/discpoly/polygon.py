"""Unit disc-polygons: the value type, clipping by a unit disc, caps and normal cones.

A disc-polygon with ``k`` vertices stores ``k`` arc centers; arc ``i`` runs
counterclockwise around ``arc_centers[i]`` from ``vertices[i]`` to
``vertices[i+1]``. ``k == 0`` is the empty region, ``k == 1`` a single point,
``k == 2`` a spindle (a chord of length 2 is the full unit disc).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels_py, kernels
from .constants import EPS_GEOM, EPS_TEST
from .errors import (
    ChordTooLong,
    DegenerateChord,
    GeometryError,
    HeightOutOfRange,
    PointsOutside,
)
from .geom import (
    TWO_PI,
    angle_of,
    as_point,
    ccw_span,
    chord_angle,
    segment_area,
    unit,
    unit_disc_centers_through,
    wrap_angle,
)


class InvalidDiscPolygon(GeometryError):
    pass


def _left_centers(vertices: np.ndarray) -> np.ndarray:
    k = len(vertices)
    out = np.empty_like(vertices)
    for i in range(k):
        a, b = vertices[i], vertices[(i + 1) % k]
        if np.hypot(*(b - a)) > 2.0:
            # clamp tiny overshoot so a diameter chord maps to its midpoint
            out[i] = 0.5 * (a + b)
        else:
            out[i] = unit_disc_centers_through(a, b)[0]
    return out


@dataclass(frozen=True, eq=False)
class DiscPolygon:
    vertices: np.ndarray
    arc_centers: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float).reshape(-1, 2)
        c = np.asarray(self.arc_centers, dtype=float).reshape(-1, 2)
        if len(v) >= 2 and len(c) != len(v):
            raise InvalidDiscPolygon("need one arc center per vertex")
        v.setflags(write=False)
        c.setflags(write=False)
        object.__setattr__(self, "vertices", v)
        object.__setattr__(self, "arc_centers", c)

    # -- constructors -------------------------------------------------------
    @classmethod
    def empty(cls) -> "DiscPolygon":
        return cls(np.empty((0, 2)), np.empty((0, 2)))

    @classmethod
    def point(cls, p) -> "DiscPolygon":
        return cls(as_point(p)[None, :], np.empty((0, 2)))

    @classmethod
    def from_vertices(cls, vertices) -> "DiscPolygon":
        """Disc-polygon through CCW vertices, every arc bulging outward."""
        v = np.asarray(vertices, dtype=float).reshape(-1, 2)
        if len(v) == 0:
            return cls.empty()
        if len(v) == 1:
            return cls.point(v[0])
        for i in range(len(v)):
            d = float(np.hypot(*(v[(i + 1) % len(v)] - v[i])))
            if d > 2.0 + EPS_GEOM:
                raise ChordTooLong(f"edge {i} has chord {d!r}")
        return cls(v, _left_centers(v)).canonical()

    @classmethod
    def full_disc(cls, center) -> "DiscPolygon":
        c = as_point(center)
        v = np.array([[c[0] - 1.0, c[1]], [c[0] + 1.0, c[1]]])
        return cls(v, np.array([c, c]))

    # -- shape ---------------------------------------------------------------
    @property
    def k(self) -> int:
        return len(self.vertices)

    f0 = k

    @property
    def is_empty(self) -> bool:
        return self.k == 0

    def canonical(self) -> "DiscPolygon":
        """Rotate the cyclic lists to start at the lexicographically smallest vertex."""
        if self.k < 2:
            return self
        s = int(np.lexsort((self.vertices[:, 1], self.vertices[:, 0]))[0])
        if s == 0:
            return self
        return DiscPolygon(np.roll(self.vertices, -s, axis=0), np.roll(self.arc_centers, -s, axis=0))

    def chords(self) -> np.ndarray:
        if self.k < 2:
            return np.zeros(0)
        d = np.roll(self.vertices, -1, axis=0) - self.vertices
        return np.hypot(d[:, 0], d[:, 1])

    def arc_angles(self) -> np.ndarray:
        return np.array([chord_angle(c) for c in self.chords()])

    def area(self) -> float:
        return area(self)

    def contains(self, q, eps: float = EPS_TEST) -> bool:
        return contains(self, q, eps)

    def contains_many(self, q: np.ndarray, eps: float = EPS_TEST) -> np.ndarray:
        q = np.asarray(q, dtype=float).reshape(-1, 2)
        if self.k == 0:
            return np.zeros(len(q), dtype=bool)
        if self.k == 1:
            return np.hypot(*(q - self.vertices[0]).T) <= eps
        ok = np.ones(len(q), dtype=bool)
        for c in self.arc_centers:
            ok &= np.hypot(q[:, 0] - c[0], q[:, 1] - c[1]) <= 1.0 + eps
        return ok

    def transformed(self, rotation: float = 0.0, shift=(0.0, 0.0)) -> "DiscPolygon":
        if self.k == 0:
            return self
        cs, sn = math.cos(rotation), math.sin(rotation)
        R = np.array([[cs, -sn], [sn, cs]])
        s = np.asarray(shift, dtype=float)
        return DiscPolygon(self.vertices @ R.T + s, self.arc_centers @ R.T + s).canonical()

    def boundary_points(self, per_arc: int = 256) -> np.ndarray:
        """Dense sample of the boundary, ``per_arc`` points per arc, endpoints included once."""
        if self.k == 0:
            return np.empty((0, 2))
        if self.k == 1:
            return self.vertices.copy()
        out = []
        for i in range(self.k):
            c = self.arc_centers[i]
            a0 = math.atan2(*(self.vertices[i] - c)[::-1])
            span = chord_angle(float(np.hypot(*(self.vertices[(i + 1) % self.k] - self.vertices[i]))))
            s = a0 + span * np.arange(per_arc) / per_arc
            out.append(np.column_stack([c[0] + np.cos(s), c[1] + np.sin(s)]))
        return np.vstack(out)

    def validate(self, eps: float = EPS_TEST) -> None:
        """Raise ``InvalidDiscPolygon`` unless the stored representation is consistent."""
        if self.k < 2:
            return
        for i, c in enumerate(self.arc_centers):
            d = np.hypot(*(self.vertices - c).T)
            if np.any(d > 1.0 + eps):
                raise InvalidDiscPolygon(f"vertex outside the disc of arc {i}: {d.max()!r}")
            for j in (i, (i + 1) % self.k):
                if abs(d[j] - 1.0) > eps:
                    raise InvalidDiscPolygon(f"arc {i} endpoint {j} is not on its circle")
        if np.any(self.chords() > 2.0 + eps):
            raise InvalidDiscPolygon("consecutive vertices farther apart than 2")
        if self.k >= 3:
            g = self.vertices.mean(axis=0)
            ang = np.arctan2(self.vertices[:, 1] - g[1], self.vertices[:, 0] - g[0])
            steps = np.mod(np.diff(np.append(ang, ang[0])), TWO_PI)
            if np.any(steps <= 0.0) or abs(steps.sum() - TWO_PI) > 1e-9:
                raise InvalidDiscPolygon("vertices are not in strictly counterclockwise order")
            for i in range(self.k):
                a, b, c = self.vertices[i], self.vertices[(i + 1) % self.k], self.arc_centers[i]
                if (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) <= 0.0:
                    raise InvalidDiscPolygon(f"arc {i} center is not on the inner side")

    def same_shape(self, other: "DiscPolygon", tol: float = EPS_TEST) -> bool:
        if self.k != other.k:
            return False
        if self.k == 0:
            return True
        return bool(np.allclose(self.vertices, other.vertices, atol=tol, rtol=0))

    # -- serialization ----------------------------------------------------
    def to_json_dict(self, r: float = 1.0) -> dict:
        return {"r": r, "vertices": (self.vertices * r).tolist()}

    @classmethod
    def from_json_dict(cls, d: dict) -> "DiscPolygon":
        r = float(d.get("r", 1.0))
        if not r > 0.0:
            raise ValueError("r must be positive")
        v = np.asarray(d["vertices"], dtype=float).reshape(-1, 2) / r
        if len(v) >= 3:
            x, y = v[:, 0], v[:, 1]
            if np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)) < 0.0:
                v = v[::-1]
        return cls.from_vertices(v)


@dataclass(frozen=True)
class NormalCone:
    vertex_index: int
    alpha: float
    beta: float

    @property
    def width(self) -> float:
        return self.beta - self.alpha

    def contains_angle(self, phi: float, eps: float = 0.0) -> bool:
        return ccw_span(self.alpha, phi) <= self.width + eps or ccw_span(self.alpha, phi) >= TWO_PI - eps


@dataclass(frozen=True)
class DiscCap:
    """The cap of ``P`` cut off by the open unit disc at ``cutting_center``.

    ``remainder`` is ``P`` intersected with that closed disc; the cap itself
    is ``P`` minus ``remainder``. ``chord_arc_start`` is the polar angle, seen
    from the cutting center, where the cutting arc inside ``P`` starts; the
    arc runs counterclockwise for ``chord_arc_length``.
    """

    remainder: DiscPolygon
    normal_angle: float
    vertex: np.ndarray
    height: float
    area: float
    chord_arc_length: float
    cutting_center: np.ndarray
    chord_arc_start: float


# -- operations --------------------------------------------------------------

def area(P: DiscPolygon) -> float:
    if P.k < 2:
        return 0.0
    x, y = P.vertices[:, 0], P.vertices[:, 1]
    shoelace = 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))
    return shoelace + sum(segment_area(min(c, 2.0)) for c in P.chords())


def contains(P: DiscPolygon, q, eps: float = EPS_TEST) -> bool:
    q = as_point(q)
    if P.k == 0:
        return False
    if P.k == 1:
        return float(np.hypot(*(q - P.vertices[0]))) <= eps
    return bool(np.all(np.hypot(*(P.arc_centers - q).T) <= 1.0 + eps))


def spindle(x, y) -> DiscPolygon:
    x = as_point(x)
    y = as_point(y)
    d = float(np.hypot(*(y - x)))
    if d > 2.0 + EPS_GEOM:
        raise ChordTooLong(f"|x-y| = {d!r}")
    if d <= 1e-14:
        return DiscPolygon.point(x)
    return DiscPolygon.from_vertices([x, y])


def _xy(P: DiscPolygon):
    v = np.ascontiguousarray(P.vertices)
    c = np.ascontiguousarray(P.arc_centers)
    return (np.ascontiguousarray(v[:, 0]), np.ascontiguousarray(v[:, 1]),
            np.ascontiguousarray(c[:, 0]), np.ascontiguousarray(c[:, 1]))


def distance_to(P: DiscPolygon, q) -> float:
    q = as_point(q)
    if P.k == 0:
        return math.inf
    if P.k == 1:
        return float(np.hypot(*(q - P.vertices[0])))
    return float(kernels.dist_to_polygon(*_xy(P), float(q[0]), float(q[1])))


def intersect_with_disc(P: DiscPolygon, c) -> DiscPolygon:
    """``P`` intersected with the closed unit disc around ``c``.

    The result is the intersection of unit discs around ``P``'s arc centers
    and ``c``; its arcs are the spindle-hull vertices of those centers and its
    vertices are that hull's arc centers. An intersection without interior
    comes back empty.
    """
    c = as_point(c)
    if P.k == 0:
        return P
    if P.k == 1:
        return P if float(np.hypot(*(P.vertices[0] - c))) <= 1.0 + EPS_TEST else DiscPolygon.empty()
    if distance_to(P, c) >= 1.0 - EPS_GEOM:
        return DiscPolygon.empty()
    xs = list(P.arc_centers[:, 0]) + [float(c[0])]
    ys = list(P.arc_centers[:, 1]) + [float(c[1])]
    verts, centers = _kernels_py.disc_intersection(xs, ys)
    if not verts:
        return DiscPolygon.full_disc(centers[0])
    return DiscPolygon(np.array(verts), np.array(centers)).canonical()


def clipped_area(P: DiscPolygon, c) -> float:
    """``area(intersect_with_disc(P, c))`` through the hot kernel."""
    c = as_point(c)
    if P.k < 2:
        return 0.0
    return float(kernels.clip_area(*_xy(P), float(c[0]), float(c[1])))


def normal_cones(P: DiscPolygon) -> list[NormalCone]:
    """Outer normal arcs at the vertices, from the incoming to the outgoing arc normal."""
    if P.k < 2:
        raise GeometryError("normal cones need at least two vertices")
    cones = []
    for i in range(P.k):
        v = P.vertices[i]
        n_in = v - P.arc_centers[i - 1]
        n_out = v - P.arc_centers[i]
        a = wrap_angle(math.atan2(n_in[1], n_in[0]))
        w = ccw_span(a, math.atan2(n_out[1], n_out[0]))
        if w > TWO_PI - 1e-9:
            # zero-width cone that rounded to a full turn
            w = 0.0
        cones.append(NormalCone(i, a, a + w))
    return cones


def edge_normal_arcs(P: DiscPolygon) -> list[tuple[int, float, float]]:
    """(edge index, start angle, width) of the outer normals along each arc."""
    out = []
    for i in range(P.k):
        n0 = P.vertices[i] - P.arc_centers[i]
        out.append((i, wrap_angle(math.atan2(n0[1], n0[0])), float(P.arc_angles()[i])))
    return out


def locate_normal(P: DiscPolygon, u) -> tuple[str, int]:
    """``("vertex", i)`` if the direction lies in the cone of vertex i, else ``("edge", i)``."""
    phi = angle_of(u)
    for cone in normal_cones(P):
        if cone.contains_angle(phi):
            return "vertex", cone.vertex_index
    best, best_gap = 0, math.inf
    for i, start, width in edge_normal_arcs(P):
        s = ccw_span(start, phi)
        gap = 0.0 if s <= width else min(s - width, TWO_PI - s)
        if gap < best_gap:
            best, best_gap = i, gap
    return "edge", best


def support_point(P: DiscPolygon, u) -> np.ndarray:
    u = as_point(u)
    if P.k == 1:
        return P.vertices[0].copy()
    kind, i = locate_normal(P, u)
    if kind == "vertex":
        return P.vertices[i].copy()
    return P.arc_centers[i] + u / math.hypot(u[0], u[1])


def _cap_center(P: DiscPolygon, u: np.ndarray, t: float) -> np.ndarray:
    return support_point(P, u) - (1.0 + t) * u


def t_star(P: DiscPolygon, u, tol: float = 1e-12) -> float:
    """Largest height for which the cutting disc still meets ``P`` (bisection)."""
    u = as_point(u)
    x = support_point(P, u)

    def meets(t):
        return distance_to(P, x - (1.0 + t) * u) <= 1.0

    lo, hi = 0.0, 2.0 + 1e-6
    while meets(hi):
        lo, hi = hi, 2.0 * hi
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if meets(mid):
            lo = mid
        else:
            hi = mid
    return lo


def disc_cap(P: DiscPolygon, u, t: float, tstar: Optional[float] = None) -> DiscCap:
    u = as_point(u)
    if tstar is None:
        tstar = t_star(P, u)
    if not (0.0 < t <= tstar + 1e-10):
        raise HeightOutOfRange(f"t = {t!r} outside (0, {tstar!r}]")
    x = support_point(P, u)
    p = x - (1.0 + t) * u
    rem = intersect_with_disc(P, p)
    A = max(0.0, area(P) - area(rem))
    ell = 0.0
    start = 0.0
    ends = None
    for i in range(rem.k):
        if np.array_equal(rem.arc_centers[i], p):
            a, b = rem.vertices[i], rem.vertices[(i + 1) % rem.k]
            ell += chord_angle(float(np.hypot(*(b - a))))
            w = a - p
            start = wrap_angle(math.atan2(w[1], w[0]))
            ends = (a, b)
    if ends is not None and A < SMALL_CAP_FRACTION * area(P):
        A = _small_cap_area(P, p, *ends)
    return DiscCap(rem, angle_of(u), x, float(t), A, ell, p, start)


# below this fraction of area(P) the difference of two order-one areas has
# too few correct digits; tiny caps are summed from their own boundary
SMALL_CAP_FRACTION = 1e-6


def _small_cap_area(P: DiscPolygon, p, a, b) -> float:
    """Area of ``P`` outside the unit disc at ``p``, whose circle meets the boundary at ``a`` then ``b``.

    Chord polygon a, (vertices of P outside the disc), b in a frame at ``a``,
    plus the segments of P's arcs, minus the segment of the cutting arc.
    """
    d = P.vertices - p
    out = P.vertices[np.hypot(d[:, 0], d[:, 1]) > 1.0]
    wa = math.atan2(a[1] - p[1], a[0] - p[0])
    order = sorted(range(len(out)), key=lambda j: math.remainder(math.atan2(out[j][1] - p[1], out[j][0] - p[0]) - wa, TWO_PI))
    chain = np.vstack([a, out[order], b]) - a
    x, y = chain[:, 0], chain[:, 1]
    poly = 0.5 * float(np.dot(x[:-1], y[1:]) - np.dot(y[:-1], x[1:]))
    steps = np.hypot(*np.diff(chain, axis=0).T)
    segs = sum(segment_area(min(float(c), 2.0)) for c in steps)
    return max(0.0, poly + segs - segment_area(min(float(np.hypot(*(b - a))), 2.0)))


def cap_pair(P: DiscPolygon, x1, x2) -> tuple[float, float]:
    """Areas of the two caps cut off by the unit circles through ``x1`` and ``x2``, ascending."""
    x1 = as_point(x1)
    x2 = as_point(x2)
    if not (contains(P, x1) and contains(P, x2)):
        raise PointsOutside("cap_pair needs both points inside P")
    c_left, c_right = unit_disc_centers_through(x1, x2)
    A = area(P)
    a = max(0.0, A - clipped_area(P, c_left))
    b = max(0.0, A - clipped_area(P, c_right))
    return (a, b) if a <= b else (b, a)


def cap_pair_batch(P: DiscPolygon, x1: np.ndarray, x2: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised ``cap_pair`` over rows of ``x1`` and ``x2`` (no membership check)."""
    x1 = np.ascontiguousarray(x1, dtype=float).reshape(-1, 2)
    x2 = np.ascontiguousarray(x2, dtype=float).reshape(-1, 2)
    d = np.hypot(*(x2 - x1).T)
    if np.any(d <= 1e-14):
        raise DegenerateChord("coincident pair")
    clipped = kernels.cap_pair_areas(*_xy(P), x1, x2)
    caps = np.maximum(0.0, area(P) - clipped)
    return caps.min(axis=1), caps.max(axis=1)


def lens_clip_area(P: DiscPolygon, x1, x2) -> float:
    """Area of P cut by both unit discs through ``x1`` and ``x2`` at once.

    For points of P this equals the spindle area. The two caps can overlap
    (points beyond the chord ends lie outside both discs), so
    A_minus + A_plus + spindle exceeds area(P) by exactly the overlap, and
    this is the identity that holds without a disjointness assumption.
    """
    x1 = as_point(x1)
    x2 = as_point(x2)
    c_left, c_right = unit_disc_centers_through(x1, x2)
    if P.k < 2:
        raise DegenerateChord("P has no interior")
    cx = list(P.arc_centers[:, 0]) + [c_left[0], c_right[0]]
    cy = list(P.arc_centers[:, 1]) + [c_left[1], c_right[1]]
    verts, centers = _kernels_py.disc_intersection(cx, cy)
    return _kernels_py.polygon_area(verts, centers)


def cap_overlap_area(P: DiscPolygon, x1, x2) -> float:
    """Area of the part of P outside both unit discs through ``x1`` and ``x2``."""
    A_minus, A_plus = cap_pair(P, x1, x2)
    return A_minus + A_plus + lens_clip_area(P, x1, x2) - area(P)


def ell1_relation_residual(beta: float, t: float, ell1: float) -> float:
    """LHS minus RHS of the exact relation between height, normal offset and the arc ell_1."""
    sl, sb = math.sin(ell1), math.sin(beta)
    cl, cb = math.cos(ell1), math.cos(beta)
    lhs = sl * sb / t * (1.0 + sl * sb / ((1.0 + cl) * (1.0 + cb)))
    rhs = cb + cl - 1.0 - 0.5 * t
    return lhs - rhs


# -- area of arc/segment paths --------------------------------------------

def _arc_term(center, a, b, signed_angle: float) -> float:
    """Twice the Green integral of x dy - y dx along a unit arc from a to b."""
    ox, oy = center
    phi0 = math.atan2(a[1] - oy, a[0] - ox)
    phi1 = phi0 + signed_angle
    return signed_angle + ox * (math.sin(phi1) - math.sin(phi0)) - oy * (math.cos(phi1) - math.cos(phi0))


def _seg_term(a, b) -> float:
    return a[0] * b[1] - a[1] * b[0]


def signed_angle(center, a, b) -> float:
    """Signed angle in (-pi, pi] from a - center to b - center."""
    ax, ay = a[0] - center[0], a[1] - center[1]
    bx, by = b[0] - center[0], b[1] - center[1]
    return math.atan2(ax * by - ay * bx, ax * bx + ay * by)


def path_area(pieces) -> float:
    """Signed area enclosed by a closed path of pieces.

    Each piece is ``("seg", a, b)`` or ``("arc", a, b, center, signed_angle)``.
    """
    s = 0.0
    for piece in pieces:
        if piece[0] == "seg":
            s += _seg_term(piece[1], piece[2])
        else:
            _, a, b, c, ang = piece
            s += _arc_term(c, a, b, ang)
    return 0.5 * s


def halfplane_area(P: DiscPolygon, origin, normal) -> float:
    """Area of ``P`` intersected with the half-plane ``<x - origin, normal> >= 0``."""
    if P.k < 2:
        return 0.0
    o = as_point(origin)
    n = as_point(normal)
    n = n / math.hypot(n[0], n[1])

    def side(q):
        return (q[0] - o[0]) * n[0] + (q[1] - o[1]) * n[1]

    psi = math.atan2(n[1], n[0])
    pieces = []
    for i in range(P.k):
        c = P.arc_centers[i]
        a = P.vertices[i]
        b = P.vertices[(i + 1) % P.k]
        phi0 = math.atan2(a[1] - c[1], a[0] - c[0])
        span = chord_angle(float(np.hypot(*(b - a))))
        # side(c + e(phi)) = side(c) + cos(phi - psi)
        sc = side(c)
        cuts = []
        if abs(sc) < 1.0:
            h = math.acos(-sc)
            for r in (psi + h, psi - h):
                s = wrap_angle(r - phi0)
                if 0.0 < s < span:
                    cuts.append(s)
        cuts.sort()
        knots = [0.0] + cuts + [span]
        for s0, s1 in zip(knots[:-1], knots[1:]):
            if s1 <= s0:
                continue
            mid = phi0 + 0.5 * (s0 + s1)
            if sc + math.cos(mid - psi) >= 0.0:
                p0 = a if s0 == 0.0 else c + unit(phi0 + s0)
                p1 = b if s1 == span else c + unit(phi0 + s1)
                pieces.append(("arc", p0, p1, c, s1 - s0))
    if not pieces:
        return 0.0
    # close every gap left by a discarded stretch with a chord along the cutting line
    closed = []
    for j, piece in enumerate(pieces):
        closed.append(piece)
        nxt = pieces[(j + 1) % len(pieces)]
        if np.hypot(*(np.asarray(nxt[1]) - np.asarray(piece[2]))) > 1e-15:
            closed.append(("seg", piece[2], nxt[1]))
    return abs(path_area(closed))


@dataclass(frozen=True)
class VertexCapGeometry:
    """Single-vertex cap near vertex ``index`` measured from its incoming arc normal."""

    index: int
    beta: float
    t: float
    u: np.ndarray
    cutting_center: np.ndarray
    y: np.ndarray
    z: np.ndarray
    ell1: float
    arc_vy: float
    area1: float


def vertex_cap_geometry(P: DiscPolygon, index: int, beta: float, t: float) -> VertexCapGeometry:
    """Points y, z, the arc ell_1 and the area A_1 of the cap at a vertex.

    ``beta`` is the angle from the incoming arc normal at the vertex to the
    cap normal. ``y`` is where the cutting circle meets the incoming arc,
    ``z`` where it meets the segment from the cutting center to the vertex.
    A_1 is the part of the cap on the incoming side of the line through the
    vertex along the cap normal, obtained by half-plane clipping.
    """
    cone = normal_cones(P)[index]
    if not 0.0 < beta < cone.width:
        raise GeometryError(f"beta {beta!r} outside the open cone (0, {cone.width!r})")
    v = P.vertices[index]
    c = P.arc_centers[index - 1]
    u = unit(cone.alpha + beta)
    p = v - (1.0 + t) * u
    z = p + u
    y0, y1 = unit_disc_centers_through(p, c)
    y = y0 if np.hypot(*(y0 - v)) <= np.hypot(*(y1 - v)) else y1
    ell1 = abs(signed_angle(p, z, y))
    arc_vy = abs(signed_angle(c, v, y))
    # incoming side: u rotated by -90 degrees
    side = np.array([u[1], -u[0]])
    rem = intersect_with_disc(P, p)
    a1 = halfplane_area(P, v, side) - halfplane_area(rem, v, side)
    return VertexCapGeometry(index, beta, t, u, p, y, z, ell1, arc_vy, max(a1, 0.0))


def vertex_cap_area1_direct(g: VertexCapGeometry, P: DiscPolygon) -> float:
    """A_1 from its three boundary pieces (arc v-y, arc y-z, segment z-v)."""
    v = P.vertices[g.index]
    c = P.arc_centers[g.index - 1]
    pieces = [
        ("arc", v, g.y, c, signed_angle(c, v, g.y)),
        ("arc", g.y, g.z, g.cutting_center, signed_angle(g.cutting_center, g.y, g.z)),
        ("seg", g.z, v),
    ]
    return abs(path_area(pieces))


# -- standard regions --------------------------------------------------------

def regular_disc_polygon(k: int, side: float = 1.0, center=(0.0, 0.0), phase: float = math.pi / 2) -> DiscPolygon:
    """Disc-polygon on a regular k-gon of the given side length (k >= 2)."""
    if k < 2:
        raise ValueError("k >= 2 required")
    if not 0.0 < side <= 2.0:
        raise ChordTooLong(f"side {side!r} not in (0, 2]")
    if k == 2:
        c = as_point(center)
        return spindle(c + [-side / 2, 0.0], c + [side / 2, 0.0])
    R = side / (2.0 * math.sin(math.pi / k))
    ang = phase + TWO_PI * np.arange(k) / k
    v = np.column_stack([R * np.cos(ang), R * np.sin(ang)]) + as_point(center)
    P = DiscPolygon.from_vertices(v)
    P.validate()
    return P


def reuleaux_triangle(side: float = 1.0) -> DiscPolygon:
    return regular_disc_polygon(3, side)
