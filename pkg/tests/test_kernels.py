import os
import subprocess
import sys

import numpy as np
import pytest

from discpoly import _kernels_py as py
from discpoly import kernels
from discpoly.errors import ChordTooLong
from discpoly.polygon import _xy, regular_disc_polygon, reuleaux_triangle
from discpoly.sampling import RngStream, SmoothDisc, sample_uniform

cy = pytest.importorskip("discpoly._kernels")


def _cols(pts):
    return np.ascontiguousarray(pts[:, 0]), np.ascontiguousarray(pts[:, 1])


@pytest.mark.parametrize("seed", range(50))
def test_hull_and_prune_agree(seed):
    pts = sample_uniform(SmoothDisc.circle(1.0), RngStream(seed, 0), int(5 + 40 * (seed % 7)))
    xs, ys = _cols(pts)
    order = np.lexsort((ys, xs)).astype(np.intp)
    ch_c = cy.convex_hull(xs, ys, order)
    ch_p = py.convex_hull_idx(xs, ys, order)
    assert np.array_equal(ch_c, ch_p)
    assert np.array_equal(cy.prune(xs, ys, ch_c), py.prune_idx(xs, ys, ch_p))
    assert np.array_equal(cy.rhull(xs, ys, order), py.rhull(xs, ys, order))


@pytest.mark.parametrize("P", [reuleaux_triangle(), regular_disc_polygon(5, 1.0), regular_disc_polygon(9, 0.4)])
def test_clip_and_distance_agree(P):
    g = np.random.default_rng(1)
    vx, vy, cx, cy_ = _xy(P)
    for q in g.normal(size=(300, 2)):
        assert cy.clip_area(vx, vy, cx, cy_, q[0], q[1]) == pytest.approx(
            py.clip_area(vx, vy, cx, cy_, q[0], q[1]), abs=1e-13)
        assert cy.dist_to_polygon(vx, vy, cx, cy_, q[0], q[1]) == pytest.approx(
            py.dist_to_polygon(vx, vy, cx, cy_, q[0], q[1]), abs=1e-13)


def test_cap_pairs_agree():
    P = regular_disc_polygon(5, 1.0)
    x1 = sample_uniform(P, RngStream(2, 0), 500)
    x2 = sample_uniform(P, RngStream(2, 1), 500)
    a = cy.cap_pair_areas(*_xy(P), x1, x2)
    b = py.cap_pair_areas(*_xy(P), x1, x2)
    assert np.allclose(a, b, atol=1e-13, rtol=0)


def test_read_only_inputs():
    P = reuleaux_triangle()
    xs, ys = P.vertices[:, 0].copy(), P.vertices[:, 1].copy()
    xs.setflags(write=False)
    ys.setflags(write=False)
    order = np.lexsort((ys, xs)).astype(np.intp)
    order.setflags(write=False)
    assert len(cy.rhull(xs, ys, order)) == 3


def test_chord_errors_same_type():
    xs = np.array([0.0, 1.5, 3.0, 1.5])
    ys = np.array([0.0, -0.1, 0.0, 0.1])
    cyc = np.array([0, 1, 2, 3], dtype=np.intp)
    with pytest.raises(ChordTooLong):
        cy.prune(xs, ys, cyc)
    with pytest.raises(ChordTooLong):
        py.prune_idx(xs, ys, cyc)


def test_many_arcs_fall_back():
    P = regular_disc_polygon(80, 0.05)
    vx, vy, cx, cy_ = _xy(P)
    c = P.vertices.mean(axis=0) + [0.3, 0.0]
    assert kernels.clip_area(vx, vy, cx, cy_, c[0], c[1]) == pytest.approx(
        py.clip_area(vx, vy, cx, cy_, c[0], c[1]), abs=1e-14)


def test_env_forces_python_backend():
    env = dict(os.environ, DISCPOLY_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import discpoly.kernels as k; print(k.BACKEND_NAME)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    if os.environ.get("DISCPOLY_PURE_PYTHON") is None:
        assert kernels.BACKEND_NAME == "compiled"
