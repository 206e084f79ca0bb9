"""Monte Carlo harness: vertex counts, missed areas, Efron identity, pair integral, Jacobian, smooth case."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy.special import gamma

from .errors import DegenerateCap, NotRConvex
from .geom import TWO_PI, unit, wrap_angle
from .hull import r_hull
from .polygon import (
    DiscPolygon,
    area,
    cap_pair_batch,
    disc_cap,
    edge_normal_arcs,
    ell1_relation_residual,
    lens_clip_area,
    locate_normal,
    normal_cones,
    spindle,
    support_point,
    t_star,
    vertex_cap_geometry,
)
from .sampling import Region, RngStream, SmoothDisc, region_area, sample_uniform, trial_stream_id

CSV_HEADER = "experiment,region,n,trials,mean_f0,se_f0,mean_missed_area,se_area"
DEFAULT_N_VALUES = (100, 400, 1600, 6400, 25600)
DEFAULT_TRIALS = 500
# growth slopes are fitted on n >= this only
SLOPE_MIN_N = 100
# A_1 is close to t * ell_1 / 2 only once beta is small too (the cutting point can leave P on wide cones)
A1_BETA_MAX = 0.01


@dataclass
class ExperimentConfig:
    region: Region
    n_values: Sequence[int] = DEFAULT_N_VALUES
    trials: int = DEFAULT_TRIALS
    seed: int = 0
    r: float = 1.0
    kind: str = "vertex"
    region_name: str = "region"
    threads: int = 1

    def __post_init__(self):
        if not self.n_values or min(self.n_values) < 1:
            raise ValueError("n_values must be non-empty and >= 1")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.r > 0.0:
            raise ValueError("r must be positive")


@dataclass
class ExperimentRow:
    n: int
    trials: int
    mean_f0: float
    se_f0: float
    mean_missed_area: float
    se_area: float


@dataclass
class ExperimentResult:
    experiment: str
    region_name: str
    rows: list[ExperimentRow]
    region_area: float
    slope_f0: float = math.nan
    slope_f0_se: float = math.nan
    slope_area: float = math.nan
    slope_area_se: float = math.nan
    per_trial_f0: dict[int, np.ndarray] = field(default_factory=dict, repr=False)

    def csv_lines(self) -> list[str]:
        return [
            f"{self.experiment},{self.region_name},{r.n},{r.trials},{r.mean_f0:.12g},{r.se_f0:.12g},"
            f"{r.mean_missed_area:.12g},{r.se_area:.12g}"
            for r in self.rows
        ]


def mean_se(x) -> tuple[float, float]:
    x = np.asarray(x, dtype=float)
    if len(x) < 2:
        return float(x.mean()), 0.0
    return float(x.mean()), float(x.std(ddof=1) / math.sqrt(len(x)))


def ols_slope(x, y) -> tuple[float, float]:
    """Least-squares slope of y on x and its standard error (nan if fewer than 3 points)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if len(x) < 2:
        return math.nan, math.nan
    xm = x - x.mean()
    sxx = float(xm @ xm)
    b = float(xm @ (y - y.mean())) / sxx
    if len(x) < 3:
        return b, math.nan
    resid = y - y.mean() - b * xm
    return b, math.sqrt(float(resid @ resid) / (len(x) - 2) / sxx)


# -- frames ------------------------------------------------------------------

def normalized_frame(P: DiscPolygon) -> DiscPolygon:
    """Congruent copy of ``P`` in a position fixed by its shape alone.

    Rigid motions of ``P`` map to the same copy up to rounding, so seeded
    sampling in this frame does not depend on where ``P`` sits in the plane.
    """
    if P.k < 2:
        return P
    g = P.vertices.mean(axis=0)
    widths = [c.width for c in normal_cones(P)]
    keys = [(round(float(np.hypot(*(v - g))), 9), round(w, 9)) for v, w in zip(P.vertices, widths)]
    i = max(range(P.k), key=lambda j: keys[j])
    d = P.vertices[i] - g
    ang = -math.atan2(d[1], d[0])
    c, sn = math.cos(ang), math.sin(ang)
    return P.transformed(rotation=ang, shift=(-(c * g[0] - sn * g[1]), -(sn * g[0] + c * g[1])))


# -- trials ------------------------------------------------------------------

def _trial(args):
    region, n, seed, sid = args
    pts = sample_uniform(region, RngStream(seed, sid), n)
    h = r_hull(pts, check=False)
    return h.f0, region_area(region) - area(h.hull)


def _map(fn, jobs, threads: int):
    if threads <= 1 or len(jobs) < 2:
        return [fn(j) for j in jobs]
    chunk = max(1, len(jobs) // (4 * threads))
    with ProcessPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, jobs, chunksize=chunk))


def run_trials(region: Region, n: int, trials: int, seed: int, n_index: int = 0,
               channel: int = 0, threads: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Per-trial (f0, missed area), ordered by trial index."""
    jobs = [(region, n, seed, trial_stream_id(n_index, t, channel)) for t in range(trials)]
    out = _map(_trial, jobs, threads)
    f0 = np.array([o[0] for o in out], dtype=float)
    miss = np.array([o[1] for o in out], dtype=float)
    return f0, miss


def _run(region: Region, cfg: ExperimentConfig, kind: str) -> ExperimentResult:
    rows = []
    per = {}
    for j, n in enumerate(sorted(cfg.n_values)):
        f0, miss = run_trials(region, n, cfg.trials, cfg.seed, j, threads=cfg.threads)
        per[n] = f0
        mf, sf = mean_se(f0)
        ma, sa = mean_se(miss)
        rows.append(ExperimentRow(n, cfg.trials, mf, sf, ma, sa))
    return ExperimentResult(kind, cfg.region_name, rows, region_area(region), per_trial_f0=per)


def run_vertex_experiment(cfg: ExperimentConfig, min_n: int = SLOPE_MIN_N) -> ExperimentResult:
    """Mean f0 and missed area per n; slopes against ln n over n >= ``min_n``."""
    if not isinstance(cfg.region, DiscPolygon):
        raise TypeError("vertex experiment needs a DiscPolygon region")
    res = _run(normalized_frame(cfg.region), cfg, "vertex")
    use = [r for r in res.rows if r.n >= min_n]
    x = [math.log(r.n) for r in use]
    res.slope_f0, res.slope_f0_se = ols_slope(x, [r.mean_f0 for r in use])
    res.slope_area, res.slope_area_se = ols_slope(x, [r.n * r.mean_missed_area for r in use])
    return res


def vertex_targets(P: DiscPolygon) -> tuple[float, float]:
    """Limits of E f0 / ln n and n E missed / ln n for a disc-polygon."""
    return 2.0 / 3.0 * P.f0, 2.0 / 3.0 * P.f0 * area(P)


# -- Efron identity --------------------------------------------------------

@dataclass
class EfronResult:
    lhs: float
    rhs: float
    combined_se: float

    @property
    def z(self) -> float:
        return abs(self.lhs - self.rhs) / self.combined_se if self.combined_se > 0 else (
            0.0 if self.lhs == self.rhs else math.inf)


def efron_check(P: Region, n: int, trials: int, seed: int, rhs_seed: Optional[int] = None,
                threads: int = 1) -> EfronResult:
    """E f0(P_{n+1}) against (n+1) E area(P minus P_n) / area(P), from independent streams."""
    if n < 1:
        raise ValueError("n >= 1")
    region = normalized_frame(P) if isinstance(P, DiscPolygon) else P
    A = region_area(region)
    f0, _ = run_trials(region, n + 1, trials, seed, channel=1, threads=threads)
    _, miss = run_trials(region, n, trials, seed if rhs_seed is None else rhs_seed, channel=2, threads=threads)
    lm, ls = mean_se(f0)
    rm, rs = mean_se(miss * (n + 1) / A)
    return EfronResult(lm, rm, math.hypot(ls, rs))


# -- pair integral -------------------------------------------------------------

def pair_integral_estimator(P: DiscPolygon, n: int, pairs: int, seed: int,
                            batch: int = 200_000) -> tuple[float, float]:
    """Monte Carlo value of C(n,2) W_n and its standard error.

    W_n averages (1 - A_-/A)^(n-2) + (1 - A_+/A)^(n-2) over independent
    uniform pairs; A_-, A_+ are the two caps cut by the unit circles through
    the pair.
    """
    if n < 2:
        raise ValueError("n >= 2")
    region = normalized_frame(P)
    A = area(region)
    gen = RngStream(seed, trial_stream_id(0, 0, channel=3)).generator()
    total = 0.0
    total2 = 0.0
    done = 0
    weight = math.comb(n, 2)
    while done < pairs:
        m = min(batch, pairs - done)
        x1 = sample_uniform(region, gen, m)
        x2 = sample_uniform(region, gen, m)
        am, ap = cap_pair_batch(region, x1, x2)
        g = weight * ((1.0 - am / A) ** (n - 2) + (1.0 - ap / A) ** (n - 2))
        total += float(g.sum())
        total2 += float((g * g).sum())
        done += m
    mean = total / pairs
    var = max(0.0, total2 / pairs - mean * mean) * pairs / max(1, pairs - 1)
    return mean, math.sqrt(var / pairs)


# -- Jacobian of the cap parametrisation ------------------------------------

def cap_pair_map(P: DiscPolygon, beta: float, t: float, phi1: float, phi2: float) -> np.ndarray:
    """(x1, x2) = (x_u - (1+t)u + u1, x_u - (1+t)u + u2) flattened to 4 numbers."""
    u = unit(beta)
    p = support_point(P, u) - (1.0 + t) * u
    return np.concatenate([p + unit(phi1), p + unit(phi2)])


def jacobian_check(P: DiscPolygon, beta: float, t: float, phi1: float, phi2: float,
                   step: float = 1e-5) -> tuple[float, float]:
    """Analytic |J| ((1+t) or t times |u1 x u2|) and the central-difference determinant."""
    cross = math.sin(phi2 - phi1)
    if abs(cross) < 1e-10:
        raise DegenerateCap("u1 and u2 are (anti)parallel")
    kind, _ = locate_normal(P, unit(beta))
    factor = (1.0 + t) if kind == "vertex" else t
    analytic = factor * abs(cross)
    x0 = np.array([beta, t, phi1, phi2])
    J = np.empty((4, 4))
    for j in range(4):
        e = np.zeros(4)
        e[j] = step
        J[:, j] = (cap_pair_map(P, *(x0 + e)) - cap_pair_map(P, *(x0 - e))) / (2.0 * step)
    return analytic, abs(float(np.linalg.det(J)))


def chord_arc_angles(P: DiscPolygon, beta: float, t: float) -> tuple[float, float]:
    """Start angle and length of L(u,t), the arc of normals along the cutting circle inside P."""
    cap = disc_cap(P, unit(beta), t)
    return cap.chord_arc_start, cap.chord_arc_length


@dataclass
class JacobianSample:
    region: str  # "vertex" or "edge" normal set
    beta: float
    t: float
    phi1: float
    phi2: float
    analytic: float
    numeric: float
    mismatched: float

    @property
    def rel_error(self) -> float:
        return abs(self.analytic - self.numeric) / self.numeric

    @property
    def mismatched_rel_error(self) -> float:
        return abs(self.mismatched - self.numeric) / self.numeric


def jacobian_experiment(P: DiscPolygon, configs: int, seed: int, t_range=(0.01, 0.1)) -> list[JacobianSample]:
    """``configs`` random (beta, t, phi1, phi2) in vertex cones and as many on edge normals.

    The two angles are drawn on the arc L(u,t) of the cutting circle inside
    P, at least 0.05 rad apart so the determinant is not tiny.
    """
    gen = RngStream(seed, trial_stream_id(0, 0, channel=5)).generator()
    cones = [c for c in normal_cones(P) if c.width > 1e-6]
    edges = [e for e in edge_normal_arcs(P) if e[2] > 1e-6]
    out = []
    for kind, pool in (("vertex", cones), ("edge", edges)):
        done = 0
        while done < configs:
            item = pool[int(gen.integers(len(pool)))]
            if kind == "vertex":
                beta = item.alpha + item.width * float(gen.uniform(0.05, 0.95))
            else:
                beta = item[1] + item[2] * float(gen.uniform(0.05, 0.95))
            beta = wrap_angle(beta)
            t = float(gen.uniform(*t_range))
            if locate_normal(P, unit(beta))[0] != kind or t >= t_star(P, unit(beta)):
                continue
            start, length = chord_arc_angles(P, beta, t)
            phi1 = start + length * float(gen.uniform(0.0, 1.0))
            phi2 = start + length * float(gen.uniform(0.0, 1.0))
            if abs(math.sin(phi2 - phi1)) < 0.05:
                continue
            analytic, numeric = jacobian_check(P, beta, t, phi1, phi2)
            cross = abs(math.sin(phi2 - phi1))
            mismatched = (t if kind == "vertex" else 1.0 + t) * cross
            out.append(JacobianSample(kind, beta, t, phi1, phi2, analytic, numeric, mismatched))
            done += 1
    return out


@dataclass
class EquivalenceResult:
    direct: float
    direct_se: float
    pair_integral: float
    pair_integral_se: float

    @property
    def z(self) -> float:
        se = math.hypot(self.direct_se, self.pair_integral_se)
        return abs(self.direct - self.pair_integral) / se if se > 0 else math.inf


def estimator_equivalence(P: DiscPolygon, n: int, trials: int, pairs: int, seed: int,
                          threads: int = 1) -> EquivalenceResult:
    """E f0(P_n) by direct simulation and by the pair integral, from separate streams."""
    f0, _ = run_trials(normalized_frame(P), n, trials, seed, channel=6, threads=threads)
    dm, ds = mean_se(f0)
    pm, ps = pair_integral_estimator(P, n, pairs, seed)
    return EquivalenceResult(dm, ds, pm, ps)


# -- smooth case ----------------------------------------------------------------

def simpson(f, a: float, b: float, n: int) -> float:
    n += n % 2
    x = np.linspace(a, b, n + 1)
    y = f(x)
    h = (b - a) / n
    return float(h / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum()))


def c_of_K(K: SmoothDisc, r: float = 1.0, tol: float = 1e-8, start: int = 64, max_n: int = 1 << 22) -> float:
    """Arc-length integral of (curvature - 1/r)^(1/3) over the boundary, composite Simpson with doubling."""
    inv_r = 0.0 if math.isinf(r) else 1.0 / r
    if not K.min_curvature() > inv_r:
        raise NotRConvex(f"minimum curvature {K.min_curvature()!r} <= 1/r")

    def f(th):
        return np.cbrt(K.curvature(th) - inv_r) * K.speed(th)

    n = start
    prev = simpson(f, 0.0, TWO_PI, n)
    while n < max_n:
        n *= 2
        cur = simpson(f, 0.0, TWO_PI, n)
        if abs(cur - prev) <= tol:
            return cur
        prev = cur
    return prev


def smooth_limits(K: SmoothDisc, r: float = 1.0) -> tuple[float, float]:
    """Limits of E f0 n^(-1/3) and E missed area n^(2/3) for a smooth r-convex disc."""
    A = K.area()
    c = c_of_K(K, r)
    g = gamma(5.0 / 3.0)
    return (2.0 / (3.0 * A)) ** (1.0 / 3.0) * g * c, (2.0 * A * A / 3.0) ** (1.0 / 3.0) * g * c


def smooth_case_experiment(K: SmoothDisc, cfg: ExperimentConfig) -> tuple[ExperimentResult, list[dict]]:
    K.check_r_convex(1.0)
    res = _run(K, cfg, "smooth")
    lim_f0, lim_area = smooth_limits(K)
    summary = []
    for row in res.rows:
        summary.append({
            "n": row.n,
            "f0_scaled": row.mean_f0 * row.n ** (-1.0 / 3.0),
            "f0_scaled_se": row.se_f0 * row.n ** (-1.0 / 3.0),
            "f0_limit": lim_f0,
            "area_scaled": row.mean_missed_area * row.n ** (2.0 / 3.0),
            "area_scaled_se": row.se_area * row.n ** (2.0 / 3.0),
            "area_limit": lim_area,
        })
    return res, summary


# -- lemma suite ------------------------------------------------------------------

def _nonadjacent_gap(P: DiscPolygon, per_arc: int = 400) -> float:
    """Smallest distance between boundary points on non-adjacent arcs (k >= 4)."""
    if P.k < 4:
        return math.nan
    pts = []
    for i in range(P.k):
        c = P.arc_centers[i]
        a0 = math.atan2(*(P.vertices[i] - c)[::-1])
        s = a0 + P.arc_angles()[i] * np.linspace(0.0, 1.0, per_arc)
        pts.append(np.column_stack([c[0] + np.cos(s), c[1] + np.sin(s)]))
    best = math.inf
    for i in range(P.k):
        for j in range(i + 2, P.k):
            if i == 0 and j == P.k - 1:
                continue
            d = np.hypot(pts[i][:, None, 0] - pts[j][None, :, 0], pts[i][:, None, 1] - pts[j][None, :, 1])
            best = min(best, float(d.min()))
    return best


def cap_vertex_count(P: DiscPolygon, p: np.ndarray) -> int:
    return int(np.sum(np.hypot(*(P.vertices - p).T) > 1.0))


def lemma_suite(P: DiscPolygon, seed: int, caps: int = 10_000, pairs: int = 10_000,
                small_fraction: float = 0.1) -> dict:
    """Randomised checks of the cap lemmas on ``P``; returns counts of checks and failures."""
    gen = RngStream(seed, trial_stream_id(0, 0, channel=4)).generator()
    A = area(P)
    report = {}

    # cap area bounds t*l/(2 pi) < A < 2 t l, and monotonicity in t
    checked = fails = mono_fail = ell_checked = ell_fail = 0
    two_checked = two_fail = 0
    gap = _nonadjacent_gap(P)
    while checked < caps:
        beta = float(gen.uniform(0.0, TWO_PI))
        u = unit(beta)
        ts = t_star(P, u)
        t = float(ts * gen.uniform(0.0, 0.3) ** 2)
        if t <= 0.0:
            continue
        cap = disc_cap(P, u, t, tstar=ts)
        if cap.area > small_fraction * A:
            continue
        checked += 1
        tl = t * cap.chord_arc_length
        if not (tl / TWO_PI < cap.area < 2.0 * tl):
            fails += 1
        smaller = disc_cap(P, u, 0.5 * t, tstar=ts)
        if smaller.area > cap.area + 1e-15:
            mono_fail += 1
        # ell grows with t only for caps around a single vertex; a cap holding
        # two vertices is a sliver over a whole arc and its ell shrinks
        if cap_vertex_count(P, cap.cutting_center) == 1:
            ell_checked += 1
            if smaller.chord_arc_length > cap.chord_arc_length + 1e-12:
                ell_fail += 1
        if not math.isnan(gap) and cap_vertex_count(P, cap.cutting_center) >= 2:
            two_checked += 1
            if not (cap.chord_arc_length > gap and cap.area > gap / TWO_PI * t):
                two_fail += 1
    report["cap_bounds"] = {"checked": checked, "failures": fails}
    report["cap_monotone"] = {"checked": checked, "failures": mono_fail}
    report["vertex_ell_monotone"] = {"checked": ell_checked, "failures": ell_fail}
    report["two_vertex_caps"] = {"checked": two_checked, "failures": two_fail}

    # caps and spindle cover P; the exact area identity counts the cap overlap
    x1 = sample_uniform(P, gen, pairs)
    x2 = sample_uniform(P, gen, pairs)
    am, ap = cap_pair_batch(P, x1, x2)
    sp = np.array([area(spindle(a, b)) for a, b in zip(x1, x2)])
    lens = np.array([lens_clip_area(P, a, b) for a, b in zip(x1, x2)])
    resid = np.abs(lens - sp)
    report["lens_identity"] = {"checked": pairs, "failures": int(np.sum(resid > 1e-9 * A)),
                               "max_relative_residual": float(resid.max() / A)}
    cover = am + ap + sp - A
    report["cap_cover"] = {"checked": pairs, "failures": int(np.sum(cover < -1e-9 * A))}
    naive = np.abs(cover)
    # informational: the disjoint-caps reading fails whenever the caps overlap
    report["disjoint_decomposition"] = {"checked": pairs, "violations": int(np.sum(naive > 1e-9 * A)),
                                        "max_relative_residual": float(naive.max() / A)}

    # ell_1 relation and A_1 bounds at every vertex
    rel_checked = rel_fail = a1_checked = a1_fail = 0
    if P.k >= 2:
        for cone in normal_cones(P):
            w = cone.width
            if w <= 0.0:
                continue
            for frac in np.linspace(0.05, 0.95, 10):
                beta = float(frac * min(w, 1.0))
                for t in (1e-3, 1e-4, 1e-5):
                    g = vertex_cap_geometry(P, cone.vertex_index, beta, t)
                    rel_checked += 1
                    if abs(ell1_relation_residual(beta, t, g.ell1)) > 1e-8:
                        rel_fail += 1
                # the A_1 bounds need beta itself small, not just t / beta
                b1 = float(frac * min(w, A1_BETA_MAX))
                for d in (0.002, 0.005, 0.01):
                    t = d * b1
                    g = vertex_cap_geometry(P, cone.vertex_index, b1, t)
                    a1_checked += 1
                    half = 0.5 * t * g.ell1
                    if not (0.95 * half <= g.area1 <= 1.05 * half):
                        a1_fail += 1
    report["ell1_relation"] = {"checked": rel_checked, "failures": rel_fail}
    report["area1_bounds"] = {"checked": a1_checked, "failures": a1_fail}
    report["total_failures"] = sum(v.get("failures", 0) for v in report.values() if isinstance(v, dict))
    return report
