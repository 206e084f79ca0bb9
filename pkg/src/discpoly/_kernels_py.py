"""Pure-Python hot kernels.

Mirrors ``_kernels.pyx`` function for function; ``discpoly.kernels`` picks
whichever is importable. Arrays in, plain Python floats and lists inside.
"""
import math

import numpy as np

from .errors import ChordTooLong

EPS_GEOM = 1e-12
TWO_PI = 2.0 * math.pi


def _left_center(ax, ay, bx, by):
    dx = bx - ax
    dy = by - ay
    d = math.hypot(dx, dy)
    if d > 2.0 + EPS_GEOM:
        raise ChordTooLong("chord longer than 2 in r-hull pruning; point set not in a unit disc")
    h = math.sqrt(max(0.0, 1.0 - 0.25 * d * d))
    return 0.5 * (ax + bx) - dy / d * h, 0.5 * (ay + by) + dx / d * h


def _removable(xs, ys, a, b, c):
    ox, oy = _left_center(xs[a], ys[a], xs[c], ys[c])
    return math.hypot(xs[b] - ox, ys[b] - oy) < 1.0 - EPS_GEOM


def convex_hull(xs, ys, order):
    """Monotone chain over points pre-sorted by ``order``; CCW, collinear dropped."""
    lower = []
    for i in order:
        while len(lower) >= 2:
            o, a = lower[-2], lower[-1]
            if (xs[a] - xs[o]) * (ys[i] - ys[o]) - (ys[a] - ys[o]) * (xs[i] - xs[o]) <= 0.0:
                lower.pop()
            else:
                break
        lower.append(i)
    upper = []
    for i in reversed(order):
        while len(upper) >= 2:
            o, a = upper[-2], upper[-1]
            if (xs[a] - xs[o]) * (ys[i] - ys[o]) - (ys[a] - ys[o]) * (xs[i] - xs[o]) <= 0.0:
                upper.pop()
            else:
                break
        upper.append(i)
    hull = lower[:-1] + upper[:-1]
    if not hull:
        # all points coincide
        return [order[0]]
    if len(hull) == 2 and xs[hull[0]] == xs[hull[1]] and ys[hull[0]] == ys[hull[1]]:
        return [hull[0]]
    return hull


def prune(xs, ys, cyc):
    """Drop candidates lying strictly inside the left unit disc of their neighbours."""
    cyc = list(cyc)
    n = len(cyc)
    i = 0
    clean = 0
    while n > 2 and clean < n:
        a = cyc[(i - 1) % n]
        b = cyc[i]
        c = cyc[(i + 1) % n]
        if _removable(xs, ys, a, b, c):
            del cyc[i]
            n -= 1
            clean = 0
            i = (i - 1) % n
        else:
            clean += 1
            i = (i + 1) % n
    return cyc


def _lists(xs, ys, idx):
    return [float(v) for v in xs], [float(v) for v in ys], [int(v) for v in idx]


def convex_hull_idx(xs, ys, order):
    xs, ys, order = _lists(xs, ys, order)
    if not order:
        return np.empty(0, dtype=np.intp)
    return np.asarray(convex_hull(xs, ys, order), dtype=np.intp)


def prune_idx(xs, ys, cyc):
    xs, ys, cyc = _lists(xs, ys, cyc)
    return np.asarray(prune(xs, ys, cyc), dtype=np.intp)


def rhull(xs, ys, order):
    xs, ys, order = _lists(xs, ys, order)
    if not order:
        return np.empty(0, dtype=np.intp)
    return np.asarray(prune(xs, ys, convex_hull(xs, ys, order)), dtype=np.intp)


def _seg(chord):
    theta = 2.0 * math.asin(min(1.0, 0.5 * chord))
    return 0.5 * (theta - math.sin(theta))


def disc_intersection(cxs, cys):
    """Intersection of unit discs around the given centers, assumed non-empty.

    Returns ``(vertices, arc_centers)`` index-aligned lists of (x, y). A lone
    distinct center yields no vertices (the full disc).
    """
    xs = [float(v) for v in cxs]
    ys = [float(v) for v in cys]
    order = sorted(range(len(xs)), key=lambda i: (xs[i], ys[i]))
    hv = prune(xs, ys, convex_hull(xs, ys, order))
    m = len(hv)
    if m == 1:
        return [], [(xs[hv[0]], ys[hv[0]])]
    verts = []
    centers = []
    for j in range(m):
        a, b = hv[j], hv[(j + 1) % m]
        verts.append(_left_center(xs[a], ys[a], xs[b], ys[b]))
        centers.append((xs[b], ys[b]))
    return verts, centers


def polygon_area(verts, centers):
    k = len(verts)
    if k == 0:
        return math.pi if centers else 0.0
    s = 0.0
    seg = 0.0
    for i in range(k):
        ax, ay = verts[i]
        bx, by = verts[(i + 1) % k]
        s += ax * by - ay * bx
        if k >= 2:
            seg += _seg(math.hypot(bx - ax, by - ay))
    return 0.5 * s + seg


def dist_to_polygon(vx, vy, cx, cy, qx, qy):
    """Euclidean distance from q to the disc-polygon (0 inside); k >= 2."""
    k = len(vx)
    inside = True
    for i in range(k):
        if math.hypot(qx - cx[i], qy - cy[i]) > 1.0:
            inside = False
            break
    if inside:
        return 0.0
    best = math.inf
    for i in range(k):
        j = (i + 1) % k
        a0 = math.atan2(vy[i] - cy[i], vx[i] - cx[i])
        span = math.atan2(vy[j] - cy[i], vx[j] - cx[i]) - a0
        if span < 0.0:
            span += TWO_PI
        wx, wy = qx - cx[i], qy - cy[i]
        r = math.hypot(wx, wy)
        d = math.inf
        if r > 0.0:
            rel = math.atan2(wy, wx) - a0
            if rel < 0.0:
                rel += TWO_PI
            if rel <= span:
                d = abs(r - 1.0)
        d = min(d, math.hypot(qx - vx[i], qy - vy[i]), math.hypot(qx - vx[j], qy - vy[j]))
        best = min(best, d)
    return best


def clip_area(vx, vy, cx, cy, qx, qy):
    """Area of P intersected with the closed unit disc at q; P given by vertices/arc centers, k >= 2."""
    if dist_to_polygon(vx, vy, cx, cy, qx, qy) >= 1.0 - EPS_GEOM:
        return 0.0
    verts, centers = disc_intersection(list(cx) + [qx], list(cy) + [qy])
    return polygon_area(verts, centers)


def cap_pair_areas(vx, vy, cx, cy, x1, x2):
    """For each pair row, clipped areas for the left and the right unit disc through x1, x2."""
    vx = [float(v) for v in vx]
    vy = [float(v) for v in vy]
    cx = [float(v) for v in cx]
    cy = [float(v) for v in cy]
    n = len(x1)
    out = np.empty((n, 2))
    for r in range(n):
        ax, ay = float(x1[r][0]), float(x1[r][1])
        bx, by = float(x2[r][0]), float(x2[r][1])
        lx, ly = _left_center(ax, ay, bx, by)
        # mirror of the left center across the chord midpoint
        rx, ry = ax + bx - lx, ay + by - ly
        out[r, 0] = clip_area(vx, vy, cx, cy, lx, ly)
        out[r, 1] = clip_area(vx, vy, cx, cy, rx, ry)
    return out
