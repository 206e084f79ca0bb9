"""Compiled kernels against their pure-Python twins.

    python benchmarks/bench_kernels.py [--repeat 5]

Prints the best wall time per call for each kernel and backend, and the speedup.
"""
import argparse
import timeit

import numpy as np

from discpoly import _kernels_py as py
from discpoly.polygon import _xy, regular_disc_polygon, reuleaux_triangle
from discpoly.sampling import RngStream, SmoothDisc, sample_uniform

try:
    from discpoly import _kernels as cy
except ImportError:
    cy = None


def cases():
    R = reuleaux_triangle()
    P9 = regular_disc_polygon(9, 0.4)
    for n in (1_000, 25_600):
        pts = sample_uniform(R, RngStream(1, n), n)
        xs, ys = np.ascontiguousarray(pts[:, 0]), np.ascontiguousarray(pts[:, 1])
        order = np.lexsort((ys, xs)).astype(np.intp)
        yield f"rhull n={n}", lambda b, xs=xs, ys=ys, order=order: b.rhull(xs, ys, order)
    for name, P in (("reuleaux", R), ("regular9", P9)):
        arrs = _xy(P)
        q = P.vertices.mean(axis=0) + [0.3, 0.1]
        yield f"clip_area {name}", lambda b, arrs=arrs, q=q: b.clip_area(*arrs, q[0], q[1])
    x1 = sample_uniform(R, RngStream(2, 0), 2_000)
    x2 = sample_uniform(R, RngStream(2, 1), 2_000)
    arrs = _xy(R)
    yield "cap_pair_areas 2000 pairs", lambda b: b.cap_pair_areas(*arrs, x1, x2)
    pts = sample_uniform(SmoothDisc.circle(1.0), RngStream(3, 0), 500)
    xs, ys = np.ascontiguousarray(pts[:, 0]), np.ascontiguousarray(pts[:, 1])
    yield "dist_to_polygon", lambda b: b.dist_to_polygon(*_xy(R), xs[0], ys[0])


def best(fn, repeat: int) -> float:
    timer = timeit.Timer(fn)
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if cy is None:
        print("compiled extension not built; nothing to compare")
        return
    print(f"{'kernel':<28}{'compiled':>12}{'python':>12}{'speedup':>10}")
    for name, call in cases():
        tc = best(lambda: call(cy), args.repeat)
        tp = best(lambda: call(py), args.repeat)
        print(f"{name:<28}{tc * 1e6:>10.1f}us{tp * 1e6:>10.1f}us{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
