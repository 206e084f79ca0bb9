"""Spindle hull (1-hull) of a finite point set."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .constants import EPS_CHORD, EPS_GEOM
from .errors import ChordTooLong, EmptyInput, NotInUnitDisc
from .geom import min_enclosing_circle
from .polygon import DiscPolygon, area

# below this many points the octagon prefilter costs more than it saves
_PREFILTER_MIN = 64


@dataclass(frozen=True, eq=False)
class HullResult:
    hull: DiscPolygon
    vertex_indices: np.ndarray

    @property
    def f0(self) -> int:
        return len(self.vertex_indices)

    def to_json_dict(self, r: float = 1.0) -> dict:
        d = self.hull.to_json_dict(r)
        d["vertex_indices"] = [int(i) for i in self.vertex_indices]
        d["f0"] = self.f0
        return d


def _as_points(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.size == 0:
        raise EmptyInput("no points")
    pts = pts.reshape(-1, 2)
    if not np.all(np.isfinite(pts)):
        raise ValueError("non-finite coordinates")
    return pts


def octagon_prefilter(pts: np.ndarray) -> np.ndarray:
    """Indices of points not strictly inside the octagon of the 8 directional extremes.

    Points strictly inside that octagon are never convex hull vertices.
    """
    x, y = pts[:, 0], pts[:, 1]
    keys = (x, x + y, y, y - x, -x, -x - y, -y, x - y)
    ext = [int(np.argmax(k)) for k in keys]
    ring = []
    for e in ext:
        if not ring or ring[-1] != e:
            ring.append(e)
    if len(ring) > 1 and ring[0] == ring[-1]:
        ring.pop()
    if len(ring) < 3:
        return np.arange(len(pts))
    inside = np.ones(len(pts), dtype=bool)
    scale = float(np.max(np.abs(pts))) + 1.0
    for j in range(len(ring)):
        a = pts[ring[j]]
        b = pts[ring[(j + 1) % len(ring)]]
        cr = (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0])
        inside &= cr > 1e-12 * scale * scale
    return np.flatnonzero(~inside)


def convex_hull_indices(points) -> np.ndarray:
    """CCW convex hull vertex indices (collinear points dropped), starting lexicographically smallest."""
    pts = _as_points(points)
    cand = octagon_prefilter(pts) if len(pts) >= _PREFILTER_MIN else np.arange(len(pts))
    sub = np.ascontiguousarray(pts[cand])
    xs = np.ascontiguousarray(sub[:, 0])
    ys = np.ascontiguousarray(sub[:, 1])
    order = np.lexsort((ys, xs)).astype(np.intp)
    local = kernels.convex_hull(xs, ys, order)
    return cand[local]


def _drop_coincident(pts: np.ndarray, idx: np.ndarray) -> np.ndarray:
    """Merge cyclically consecutive survivors closer than the chord tolerance."""
    if len(idx) < 2:
        return idx
    keep = [idx[0]]
    for j in idx[1:]:
        if np.hypot(*(pts[j] - pts[keep[-1]])) > EPS_CHORD:
            keep.append(j)
    while len(keep) > 1 and np.hypot(*(pts[keep[-1]] - pts[keep[0]])) <= EPS_CHORD:
        keep.pop()
    return np.asarray(keep, dtype=np.intp)


def r_hull(points, check: bool = True) -> HullResult:
    """Intersection of all closed unit discs containing ``points``.

    Convex hull first, then cyclic removal of every candidate lying strictly
    inside the unit disc that would carry an arc between its two
    neighbours. ``check=False`` skips the enclosing-circle precondition for
    callers that already know the points lie in a disc-polygon.
    """
    pts = _as_points(points)
    ch = convex_hull_indices(pts)
    if check:
        mec = min_enclosing_circle(pts[ch])
        if mec.radius > 1.0 + EPS_GEOM:
            raise NotInUnitDisc(f"minimum enclosing circle radius {mec.radius!r} > 1")
    xs = np.ascontiguousarray(pts[:, 0])
    ys = np.ascontiguousarray(pts[:, 1])
    try:
        idx = kernels.prune(xs, ys, np.ascontiguousarray(ch, dtype=np.intp))
    except ChordTooLong as exc:
        raise NotInUnitDisc(str(exc)) from None
    idx = _drop_coincident(pts, idx)
    if len(idx) == 1:
        return HullResult(DiscPolygon.point(pts[idx[0]]), idx)
    hull = DiscPolygon.from_vertices(pts[idx])
    # from_vertices rotates to the lexicographic minimum; keep indices aligned
    shift = int(np.flatnonzero(np.all(pts[idx] == hull.vertices[0], axis=1))[0])
    return HullResult(hull, np.roll(idx, -shift))


def oracle_is_vertex(points, i: int, tol: float = 1e-12) -> bool:
    """Exact supporting-disc test: is there a unit circle through ``points[i]`` enclosing all points?

    Centers on the unit circle around ``points[i]`` at angle phi keep
    ``points[j]`` inside iff cos(phi - psi_j) >= rho_j / 2, a closed arc of
    half-width acos(rho_j / 2) < pi/2 around psi_j. Arcs shorter than pi meet
    in at most one piece, so a running interval suffices.
    """
    pts = _as_points(points)
    p = pts[i]
    lo = hi = None
    for j in range(len(pts)):
        if j == i:
            continue
        dx, dy = pts[j, 0] - p[0], pts[j, 1] - p[1]
        rho = math.hypot(dx, dy)
        if rho <= 1e-15:
            continue
        if rho > 2.0 + EPS_GEOM:
            raise NotInUnitDisc(f"points {i} and {j} are {rho!r} apart")
        psi = math.atan2(dy, dx)
        w = math.acos(min(1.0, rho / 2.0))
        if lo is None:
            lo, hi = psi - w, psi + w
            continue
        mid = 0.5 * (lo + hi)
        psi += 2.0 * math.pi * round((mid - psi) / (2.0 * math.pi))
        lo, hi = max(lo, psi - w), min(hi, psi + w)
        if lo > hi + tol:
            return False
    return True


def oracle_vertex_set(points) -> set[int]:
    pts = _as_points(points)
    mec = min_enclosing_circle(pts)
    if mec.radius > 1.0 + EPS_GEOM:
        raise NotInUnitDisc(f"minimum enclosing circle radius {mec.radius!r} > 1")
    return {i for i in range(len(pts)) if oracle_is_vertex(pts, i)}


def missed_area(P: DiscPolygon, hull: HullResult) -> float:
    return area(P) - area(hull.hull)
