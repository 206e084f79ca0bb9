"""Acceptance criteria 1-10 at their stated sizes and tolerances.

Each test records one PASS/FAIL line, shown in the terminal summary. Run
``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""
import math
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from discpoly.cli import hull_oracle_check, main
from discpoly.experiments import (
    DEFAULT_N_VALUES,
    ExperimentConfig,
    c_of_K,
    efron_check,
    estimator_equivalence,
    jacobian_experiment,
    run_vertex_experiment,
    smooth_case_experiment,
    vertex_targets,
)
from discpoly.geom import unit
from discpoly.polygon import (
    area,
    cap_pair_batch,
    disc_cap,
    ell1_relation_residual,
    normal_cones,
    regular_disc_polygon,
    reuleaux_triangle,
    spindle,
    t_star,
    vertex_cap_geometry,
)
from discpoly.sampling import RngStream, SmoothDisc, sample_uniform

SEED = 2024

REGIONS = {
    "spindle": spindle((-0.5, 0.0), (0.5, 0.0)),
    "reuleaux": reuleaux_triangle(),
    "regular5": regular_disc_polygon(5, 1.0),
}


def record(number: int, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")


def test_criterion_01_hull_oracle():
    t0 = time.perf_counter()
    rep = hull_oracle_check(1000, SEED, max_n=12)
    secs = time.perf_counter() - t0
    ok = rep["failures"] == 0 and secs < 10
    record(1, ok, f"{rep['failures']} mismatches in {rep['checked']} instances, {secs:.1f}s")
    assert rep["checked"] == 1000 and rep["failures"] == 0
    assert secs < 10


def test_criterion_02_decomposition_identity():
    # stated as |A - (A_- + A_+ + spindle)| <= 1e-9 A for every pair
    t0 = time.perf_counter()
    worst, bad, total = 0.0, 0, 0
    for i, P in enumerate(REGIONS.values()):
        A = area(P)
        x1 = sample_uniform(P, RngStream(SEED, 100 + i), 10_000)
        x2 = sample_uniform(P, RngStream(SEED, 200 + i), 10_000)
        am, ap = cap_pair_batch(P, x1, x2)
        sp = np.array([area(spindle(a, b)) for a, b in zip(x1, x2)])
        resid = np.abs(A - (am + ap + sp)) / A
        worst = max(worst, float(resid.max()))
        bad += int(np.sum(resid > 1e-9))
        total += len(resid)
    secs = time.perf_counter() - t0
    ok = bad == 0 and secs < 60
    record(2, ok, f"{bad}/{total} pairs off by more than 1e-9 A (max {worst:.3g} A), {secs:.1f}s")
    assert secs < 60
    assert bad == 0


def test_criterion_03_cap_bounds():
    fails = checked = 0
    for i, P in enumerate(REGIONS.values()):
        A = area(P)
        gen = RngStream(SEED, 300 + i).generator()
        n = 0
        while n < 10_000:
            u = unit(float(gen.uniform(0, 2 * math.pi)))
            ts = t_star(P, u)
            t = ts * float(gen.uniform(0.0, 0.3)) ** 2
            if t <= 0.0:
                continue
            cap = disc_cap(P, u, t, tstar=ts)
            if cap.area > 0.1 * A:
                continue
            n += 1
            tl = t * cap.chord_arc_length
            if not tl / (2 * math.pi) < cap.area < 2 * tl:
                fails += 1
        checked += n
    record(3, fails == 0, f"{fails} violations in {checked} caps")
    assert fails == 0


def test_criterion_04_ell1_relation_and_asymptotics():
    gen = RngStream(SEED, 400).generator()
    worst = 0.0
    for _ in range(1000):
        P = list(REGIONS.values())[int(gen.integers(3))]
        cone = normal_cones(P)[int(gen.integers(P.k))]
        beta = float(gen.uniform(0.01, 0.99)) * min(cone.width, 1.0)
        t = 10 ** float(gen.uniform(-6, -2))
        g = vertex_cap_geometry(P, cone.vertex_index, beta, t)
        worst = max(worst, abs(ell1_relation_residual(beta, t, g.ell1)))
    R = REGIONS["reuleaux"]
    ratios = []
    for beta in np.linspace(0.1, 1.0, 19):
        for t in (1e-4, 1e-5, 1e-6):
            g = vertex_cap_geometry(R, 0, float(beta), t)
            ratios.append(g.ell1 / (t / math.tan(beta)))
    lo, hi = min(ratios), max(ratios)
    ok = worst <= 1e-8 and 0.99 <= lo and hi <= 1.01
    record(4, ok, f"max residual {worst:.2e} over 1000 triples; ratio in [{lo:.5f}, {hi:.5f}]")
    assert worst <= 1e-8
    assert 0.99 <= lo and hi <= 1.01


def test_criterion_05_jacobian():
    P = REGIONS["reuleaux"]
    samples = jacobian_experiment(P, 200, SEED)
    by = {k: [s for s in samples if s.region == k] for k in ("vertex", "edge")}
    errs = {k: max(s.rel_error for s in v) for k, v in by.items()}
    fixed = jacobian_experiment(P, 200, SEED + 1, t_range=(0.05, 0.05))
    mism = min(s.mismatched_rel_error for s in fixed)
    ok = all(len(v) == 200 for v in by.values()) and max(errs.values()) <= 1e-4 and mism > 1e-4
    record(5, ok, f"max rel error vertex {errs['vertex']:.2e}, edge {errs['edge']:.2e}; "
                  f"swapped factor at t=0.05 errs by >= {mism:.3f}")
    assert all(len(v) == 200 for v in by.values())
    assert max(errs.values()) <= 1e-4
    assert mism > 1e-4


def test_criterion_06_efron():
    t0 = time.perf_counter()
    e = efron_check(REGIONS["reuleaux"], 100, 2000, SEED)
    secs = time.perf_counter() - t0
    ok = abs(e.lhs - e.rhs) <= 3 * e.combined_se and secs < 300
    record(6, ok, f"lhs {e.lhs:.4f} rhs {e.rhs:.4f} z {e.z:.2f}, {secs:.1f}s")
    assert abs(e.lhs - e.rhs) <= 3 * e.combined_se
    assert secs < 300


def test_criterion_07_estimator_equivalence():
    q = estimator_equivalence(REGIONS["reuleaux"], 50, trials=4000, pairs=2_000_000, seed=SEED)
    ok = q.z <= 3
    record(7, ok, f"direct {q.direct:.4f}+-{q.direct_se:.4f} pair integral "
                  f"{q.pair_integral:.4f}+-{q.pair_integral_se:.4f} z {q.z:.2f}")
    assert q.z <= 3


@pytest.mark.slow
def test_criterion_08_growth_slopes():
    t0 = time.perf_counter()
    ok, parts = True, []
    for name, P in REGIONS.items():
        res = run_vertex_experiment(ExperimentConfig(P, DEFAULT_N_VALUES, 500, SEED, region_name=name))
        t_f0, t_area = vertex_targets(P)
        ok_f0 = abs(res.slope_f0 - t_f0) <= 0.20 * t_f0
        ok_area = abs(res.slope_area - t_area) <= 0.25 * t_area
        ok = ok and ok_f0 and ok_area
        parts.append(f"{name} f0 {res.slope_f0:.3f}/{t_f0:.3f} area {res.slope_area:.4f}/{t_area:.4f}")
    secs = time.perf_counter() - t0
    ok = ok and secs < 1800
    record(8, ok, "; ".join(parts) + f", {secs:.0f}s")
    assert ok


@pytest.mark.slow
def test_criterion_09_smooth_case():
    K = SmoothDisc.circle(0.5)
    _, summary = smooth_case_experiment(K, ExperimentConfig(K, [100_000], 200, SEED, kind="smooth"))
    row = summary[0]
    limit = (8 / (3 * math.pi)) ** (1 / 3) * math.gamma(5 / 3) * math.pi
    quad = max(abs(c_of_K(SmoothDisc.circle(rho), 1.0) - 2 * math.pi * rho * (1 / rho - 1) ** (1 / 3))
               for rho in (0.1, 0.25, 0.5, 0.75, 0.9))
    ok_f0 = abs(row["f0_scaled"] - limit) <= 0.15 * limit
    ok = ok_f0 and quad <= 1e-10 and abs(row["f0_limit"] - limit) <= 1e-12
    record(9, ok, f"E f0 n^-1/3 = {row['f0_scaled']:.4f} vs {limit:.4f}; quadrature error {quad:.1e}")
    assert abs(row["f0_limit"] - limit) <= 1e-12
    assert quad <= 1e-10
    assert ok_f0


THREAD_RUNS = {
    "vertex": ["--n-list", "100,400,1600", "--trials", "40"],
    "efron": ["--n-list", "50", "--trials", "200"],
    "pairs": ["--n-list", "20", "--trials", "200", "--pairs", "20000"],
    "smooth": ["--n-list", "1000,4000", "--trials", "20"],
}


def test_criterion_10_thread_determinism(tmp_path):
    differing = []
    for kind, extra in THREAD_RUNS.items():
        for fmt in ("csv", "json"):
            outs = []
            for threads in ("1", "2", "4"):
                f = tmp_path / f"{kind}-{threads}.{fmt}"
                argv = ["experiment", kind, "--seed", "11", "--threads", threads, "--format", fmt,
                        "--output", str(f), *extra]
                assert main(argv) == 0
                outs.append(f.read_bytes())
            if not outs[0] == outs[1] == outs[2]:
                differing.append(f"{kind}/{fmt}")
    runs = 2 * len(THREAD_RUNS)
    record(10, not differing, f"{runs - len(differing)}/{runs} experiment outputs byte-identical for --threads 1, 2, 4")
    assert not differing


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
