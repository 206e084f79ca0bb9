# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels; same contract as ``_kernels_py``."""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, hypot, asin, sin, atan2, fabs, M_PI, INFINITY
from libc.stdlib cimport malloc, free

cnp.import_array()

from .errors import ChordTooLong

cdef double EPS_GEOM = 1e-12
cdef double TWO_PI = 2.0 * M_PI


cdef inline int _left_center(double ax, double ay, double bx, double by,
                             double *ox, double *oy) noexcept nogil:
    cdef double dx = bx - ax, dy = by - ay
    cdef double d = hypot(dx, dy)
    cdef double h
    if d > 2.0 + EPS_GEOM:
        return -1
    h = 1.0 - 0.25 * d * d
    h = sqrt(h) if h > 0.0 else 0.0
    ox[0] = 0.5 * (ax + bx) - dy / d * h
    oy[0] = 0.5 * (ay + by) + dx / d * h
    return 0


cdef inline int _removable(const double *xs, const double *ys,
                           Py_ssize_t a, Py_ssize_t b, Py_ssize_t c) noexcept nogil:
    cdef double ox, oy
    if _left_center(xs[a], ys[a], xs[c], ys[c], &ox, &oy) < 0:
        return -1
    return hypot(xs[b] - ox, ys[b] - oy) < 1.0 - EPS_GEOM


cdef inline double _turn(const double *xs, const double *ys,
                         Py_ssize_t o, Py_ssize_t a, Py_ssize_t i) noexcept nogil:
    return (xs[a] - xs[o]) * (ys[i] - ys[o]) - (ys[a] - ys[o]) * (xs[i] - xs[o])


cdef Py_ssize_t _convex_hull(const double *xs, const double *ys, const Py_ssize_t *order,
                             Py_ssize_t n, Py_ssize_t *out) noexcept nogil:
    # out needs room for 2n entries
    cdef Py_ssize_t k = 0, t, j, i
    for j in range(n):
        i = order[j]
        while k >= 2 and _turn(xs, ys, out[k - 2], out[k - 1], i) <= 0.0:
            k -= 1
        out[k] = i
        k += 1
    t = k + 1
    for j in range(n - 2, -1, -1):
        i = order[j]
        while k >= t and _turn(xs, ys, out[k - 2], out[k - 1], i) <= 0.0:
            k -= 1
        out[k] = i
        k += 1
    k -= 1
    if k <= 0:
        out[0] = order[0]
        return 1
    if k == 2 and xs[out[0]] == xs[out[1]] and ys[out[0]] == ys[out[1]]:
        return 1
    return k


cdef Py_ssize_t _prune(const double *xs, const double *ys, Py_ssize_t *cyc, Py_ssize_t m) noexcept nogil:
    """In-place cyclic pruning on a doubly linked list; returns survivor count or -1."""
    cdef Py_ssize_t *nxt
    cdef Py_ssize_t *prv
    cdef Py_ssize_t cur, n = m, clean = 0, j, head
    cdef int rem
    if m <= 2:
        return m
    nxt = <Py_ssize_t *> malloc(m * sizeof(Py_ssize_t))
    prv = <Py_ssize_t *> malloc(m * sizeof(Py_ssize_t))
    for j in range(m):
        nxt[j] = (j + 1) % m
        prv[j] = (j - 1 + m) % m
    cur = 0
    head = 0
    while n > 2 and clean < n:
        rem = _removable(xs, ys, cyc[prv[cur]], cyc[cur], cyc[nxt[cur]])
        if rem < 0:
            free(nxt)
            free(prv)
            return -1
        if rem:
            nxt[prv[cur]] = nxt[cur]
            prv[nxt[cur]] = prv[cur]
            if cur == head:
                head = nxt[cur]
            cur = prv[cur]
            n -= 1
            clean = 0
        else:
            clean += 1
            cur = nxt[cur]
    # compact survivors in cyclic order starting from the original first survivor
    cur = head
    for j in range(n):
        cyc[j] = cyc[cur]
        cur = nxt[cur]
    free(nxt)
    free(prv)
    return n


def convex_hull(const double[::1] xs, const double[::1] ys, const Py_ssize_t[::1] order):
    cdef Py_ssize_t n = order.shape[0]
    cdef cnp.ndarray[cnp.intp_t, ndim=1] buf = np.empty(2 * n + 2, dtype=np.intp)
    cdef Py_ssize_t m
    if n == 0:
        return np.empty(0, dtype=np.intp)
    with nogil:
        m = _convex_hull(&xs[0], &ys[0], &order[0], n, <Py_ssize_t *> buf.data)
    return buf[:m].copy()


def prune(const double[::1] xs, const double[::1] ys, const Py_ssize_t[::1] cyc):
    cdef cnp.ndarray[cnp.intp_t, ndim=1] buf = np.array(cyc, dtype=np.intp)
    cdef Py_ssize_t k, m = cyc.shape[0]
    with nogil:
        k = _prune(&xs[0], &ys[0], <Py_ssize_t *> buf.data, m)
    if k < 0:
        raise ChordTooLong("chord longer than 2 in r-hull pruning; point set not in a unit disc")
    return buf[:k].copy()


def rhull(const double[::1] xs, const double[::1] ys, const Py_ssize_t[::1] order):
    cdef Py_ssize_t n = order.shape[0]
    cdef cnp.ndarray[cnp.intp_t, ndim=1] buf = np.empty(2 * n + 2, dtype=np.intp)
    cdef Py_ssize_t *out = <Py_ssize_t *> buf.data
    cdef Py_ssize_t m, k
    if n == 0:
        return np.empty(0, dtype=np.intp)
    with nogil:
        m = _convex_hull(&xs[0], &ys[0], &order[0], n, out)
        k = _prune(&xs[0], &ys[0], out, m)
    if k < 0:
        raise ChordTooLong("chord longer than 2 in r-hull pruning; point set not in a unit disc")
    return buf[:k].copy()


cdef inline double _seg(double chord) noexcept nogil:
    cdef double h = 0.5 * chord
    cdef double theta
    if h > 1.0:
        h = 1.0
    theta = 2.0 * asin(h)
    return 0.5 * (theta - sin(theta))


cdef int _isect_area(double *xs, double *ys, Py_ssize_t m, double *area) noexcept nogil:
    """Area of the intersection of unit discs centered at (xs, ys); assumed non-empty.

    Works on at most 64 centers. Returns -1 on a chord > 2.
    """
    cdef Py_ssize_t order[64]
    cdef Py_ssize_t hv[130]
    cdef Py_ssize_t i, j, t, h, k
    cdef double vx[64]
    cdef double vy[64]
    cdef double s, sg
    # insertion sort by (x, y)
    for i in range(m):
        order[i] = i
    for i in range(1, m):
        t = order[i]
        j = i - 1
        while j >= 0 and (xs[order[j]] > xs[t] or (xs[order[j]] == xs[t] and ys[order[j]] > ys[t])):
            order[j + 1] = order[j]
            j -= 1
        order[j + 1] = t
    h = _convex_hull(xs, ys, order, m, hv)
    k = _prune(xs, ys, hv, h)
    if k < 0:
        return -1
    if k == 1:
        area[0] = M_PI
        return 0
    for j in range(k):
        if _left_center(xs[hv[j]], ys[hv[j]], xs[hv[(j + 1) % k]], ys[hv[(j + 1) % k]],
                        &vx[j], &vy[j]) < 0:
            return -1
    s = 0.0
    sg = 0.0
    for j in range(k):
        t = (j + 1) % k
        s += vx[j] * vy[t] - vy[j] * vx[t]
        sg += _seg(hypot(vx[t] - vx[j], vy[t] - vy[j]))
    area[0] = 0.5 * s + sg
    return 0


cdef double _dist_to_polygon(const double *vx, const double *vy, const double *cx, const double *cy,
                             Py_ssize_t k, double qx, double qy) noexcept nogil:
    cdef Py_ssize_t i, j
    cdef bint inside = True
    cdef double best = INFINITY, d, a0, span, wx, wy, r, rel, e
    for i in range(k):
        if hypot(qx - cx[i], qy - cy[i]) > 1.0:
            inside = False
            break
    if inside:
        return 0.0
    for i in range(k):
        j = (i + 1) % k
        a0 = atan2(vy[i] - cy[i], vx[i] - cx[i])
        span = atan2(vy[j] - cy[i], vx[j] - cx[i]) - a0
        if span < 0.0:
            span += TWO_PI
        wx = qx - cx[i]
        wy = qy - cy[i]
        r = hypot(wx, wy)
        d = INFINITY
        if r > 0.0:
            rel = atan2(wy, wx) - a0
            if rel < 0.0:
                rel += TWO_PI
            if rel <= span:
                d = fabs(r - 1.0)
        e = hypot(qx - vx[i], qy - vy[i])
        if e < d:
            d = e
        e = hypot(qx - vx[j], qy - vy[j])
        if e < d:
            d = e
        if d < best:
            best = d
    return best


cdef int _clip_area(const double *vx, const double *vy, const double *cx, const double *cy,
                    Py_ssize_t k, double qx, double qy, double *area) noexcept nogil:
    cdef double xs[64]
    cdef double ys[64]
    cdef Py_ssize_t i
    if _dist_to_polygon(vx, vy, cx, cy, k, qx, qy) >= 1.0 - EPS_GEOM:
        area[0] = 0.0
        return 0
    for i in range(k):
        xs[i] = cx[i]
        ys[i] = cy[i]
    xs[k] = qx
    ys[k] = qy
    return _isect_area(xs, ys, k + 1, area)


def dist_to_polygon(const double[::1] vx, const double[::1] vy, const double[::1] cx, const double[::1] cy,
                    double qx, double qy):
    return _dist_to_polygon(&vx[0], &vy[0], &cx[0], &cy[0], vx.shape[0], qx, qy)


def clip_area(const double[::1] vx, const double[::1] vy, const double[::1] cx, const double[::1] cy,
              double qx, double qy):
    cdef double a
    cdef Py_ssize_t k = vx.shape[0]
    if k > 63:
        raise ValueError("compiled clip_area supports at most 63 arcs")
    if _clip_area(&vx[0], &vy[0], &cx[0], &cy[0], k, qx, qy, &a) < 0:
        raise ChordTooLong("chord longer than 2 while clipping")
    return a


def cap_pair_areas(const double[::1] vx, const double[::1] vy, const double[::1] cx, const double[::1] cy,
                   const double[:, ::1] x1, const double[:, ::1] x2):
    cdef Py_ssize_t n = x1.shape[0], k = vx.shape[0], r
    cdef cnp.ndarray[cnp.double_t, ndim=2] out = np.empty((n, 2))
    cdef double[:, ::1] o = out
    cdef double lx, ly, ax, ay, bx, by
    cdef int bad = 0
    if k > 63:
        raise ValueError("compiled cap_pair_areas supports at most 63 arcs")
    with nogil:
        for r in range(n):
            ax = x1[r, 0]
            ay = x1[r, 1]
            bx = x2[r, 0]
            by = x2[r, 1]
            if _left_center(ax, ay, bx, by, &lx, &ly) < 0:
                bad = 1
                break
            if _clip_area(&vx[0], &vy[0], &cx[0], &cy[0], k, lx, ly, &o[r, 0]) < 0:
                bad = 1
                break
            if _clip_area(&vx[0], &vy[0], &cx[0], &cy[0], k, ax + bx - lx, ay + by - ly, &o[r, 1]) < 0:
                bad = 1
                break
    if bad:
        raise ChordTooLong("chord longer than 2 while clipping")
    return out
