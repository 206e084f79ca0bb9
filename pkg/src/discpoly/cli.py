"""Command-line entry point.

Exit codes: 0 ok, 1 a check failed, 2 bad arguments or unreadable input,
3 a geometric precondition does not hold (points not in a unit disc, ...).
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional, Sequence

from . import experiments as ex
from . import io
from .errors import GeometryError
from .hull import oracle_vertex_set, r_hull
from .polygon import DiscPolygon, regular_disc_polygon, reuleaux_triangle, spindle
from .sampling import RngStream, SmoothDisc, sample_uniform

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3

# tolerances reported next to the vertex-experiment slopes
SLOPE_F0_TOL = 0.20
SLOPE_AREA_TOL = 0.25
SMOOTH_TOL = 0.15


class UsageError(Exception):
    pass


def _n_list(text: str) -> list[int]:
    try:
        vals = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad --n-list {text!r}") from None
    if not vals or min(vals) < 1:
        raise argparse.ArgumentTypeError("--n-list needs positive integers")
    return vals


def _positive(text: str) -> float:
    v = float(text)
    if not v > 0.0 or math.isinf(v):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="discpoly", description="Random disc-polygons: hulls, regions, experiments.")
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hull", help="spindle hull of a CSV point set")
    h.add_argument("--input", required=True, help="CSV of x,y lines, '-' for stdin")
    h.add_argument("--output")
    h.add_argument("--r", type=_positive, default=1.0, help="disc radius")
    h.add_argument("--format", choices=("json", "csv"), default="json")

    m = sub.add_parser("make-region", help="write a region JSON")
    m.add_argument("shape", choices=("reuleaux", "regular-k", "spindle", "circle", "ellipse"))
    m.add_argument("--side", type=_positive, default=1.0, help="side length (reuleaux, regular-k, spindle)")
    m.add_argument("--k", type=int, default=5, help="vertex count for regular-k")
    m.add_argument("--radius", type=_positive, default=0.5)
    m.add_argument("--a", type=_positive, default=0.7)
    m.add_argument("--b", type=_positive, default=0.5)
    m.add_argument("--r", type=_positive, default=1.0)
    m.add_argument("--output")

    e = sub.add_parser("experiment", help="Monte Carlo experiments")
    e.add_argument("kind", choices=("vertex", "efron", "pairs", "smooth", "jacobian"))
    e.add_argument("--region", help="region JSON (default: Reuleaux triangle, or circle of radius 1/2 for smooth)")
    e.add_argument("--config", help="JSON with keys " + ", ".join(io.CONFIG_KEYS))
    e.add_argument("--seed", type=int)
    e.add_argument("--trials", type=int)
    e.add_argument("--n-list", type=_n_list)
    e.add_argument("--r", type=_positive, help="disc radius; overrides the region file's r")
    e.add_argument("--threads", type=int)
    e.add_argument("--pairs", type=int, default=200_000, help="pair samples for 'pairs'")
    e.add_argument("--configs", type=int, default=200, help="configurations per normal set for 'jacobian'")
    e.add_argument("--format", choices=("csv", "json"), default="csv")
    e.add_argument("--output")

    c = sub.add_parser("check", help="lemma suite and hull-oracle equivalence; exit 1 on any failure")
    c.add_argument("--region", help="region JSON (default: Reuleaux triangle)")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--trials", type=int, default=1000, help="random hull instances")
    c.add_argument("--caps", type=int, default=2000)
    c.add_argument("--pairs", type=int, default=2000)
    c.add_argument("--output")
    return p


# -- helpers -----------------------------------------------------------------

def _load_region(path: Optional[str], r: Optional[float], default):
    """(region in unit-radius coordinates, name, radius in caller units)."""
    if path is None:
        return default, default_name(default), (1.0 if r is None else float(r))
    d = json.loads(io.read_text(path))
    if not isinstance(d, dict):
        raise UsageError("region file must hold a JSON object")
    if r is not None:
        d["r"] = r
    return io.region_from_dict(d), io.region_name(path), float(d.get("r", 1.0))


def default_name(region) -> str:
    if isinstance(region, SmoothDisc):
        return region.kind
    return "reuleaux"


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _rows_csv(res: ex.ExperimentResult, r: float) -> str:
    # areas back in the caller's units
    s = r * r
    lines = [ex.CSV_HEADER]
    for row in res.rows:
        lines.append(",".join([res.experiment, res.region_name, str(row.n), str(row.trials), _fmt(row.mean_f0),
                               _fmt(row.se_f0), _fmt(row.mean_missed_area * s), _fmt(row.se_area * s)]))
    return "\n".join(lines) + "\n"


def _rows_json(res: ex.ExperimentResult, r: float) -> list[dict]:
    s = r * r
    return [{"n": row.n, "trials": row.trials, "mean_f0": row.mean_f0, "se_f0": row.se_f0,
             "mean_missed_area": row.mean_missed_area * s, "se_area": row.se_area * s} for row in res.rows]


def _within(value: float, target: float, tol: float) -> bool:
    return abs(value - target) <= tol * abs(target)


# -- subcommands -----------------------------------------------------------------

def cmd_hull(args) -> int:
    pts = io.read_points(args.input) / args.r
    res = r_hull(pts)
    if args.format == "json":
        text = io.dumps_json(res.to_json_dict(args.r))
    else:
        v = res.hull.vertices * args.r
        text = "index,x,y\n" + "".join(f"{i},{_fmt(x)},{_fmt(y)}\n" for i, (x, y) in zip(res.vertex_indices, v))
    io.write_atomic(args.output, text)
    return EXIT_OK


def cmd_make_region(args) -> int:
    side = args.side / args.r
    if args.shape == "reuleaux":
        region = reuleaux_triangle(side)
    elif args.shape == "regular-k":
        if args.k < 2:
            raise UsageError("--k must be at least 2")
        region = regular_disc_polygon(args.k, side)
    elif args.shape == "spindle":
        if side > 2.0:
            raise UsageError("spindle side must be at most 2r")
        region = spindle((-0.5 * side, 0.0), (0.5 * side, 0.0))
    elif args.shape == "circle":
        region = SmoothDisc.circle(args.radius / args.r)
        region.check_r_convex(1.0)
    else:
        region = SmoothDisc.ellipse(args.a / args.r, args.b / args.r)
        region.check_r_convex(1.0)
    if isinstance(region, DiscPolygon):
        region.validate()
    io.write_atomic(args.output, io.dumps_json(io.region_to_dict(region, args.r)))
    return EXIT_OK


def _experiment_settings(args) -> dict:
    conf = io.read_config(args.config) if args.config else {}
    out = {
        "region": conf.get("region"),
        "n_values": conf.get("n_values"),
        "trials": conf.get("trials"),
        "seed": conf.get("seed", 0),
        "r": conf.get("r"),
        "threads": conf.get("threads", 1),
    }
    if conf.get("kind") not in (None, args.kind):
        raise UsageError(f"config kind {conf['kind']!r} does not match {args.kind!r}")
    for key, val in (("region", args.region), ("n_values", args.n_list), ("trials", args.trials),
                     ("seed", args.seed), ("r", args.r), ("threads", args.threads)):
        if val is not None:
            out[key] = val
    if out["trials"] is not None and int(out["trials"]) < 1:
        raise UsageError("trials must be >= 1")
    if int(out["threads"]) < 1:
        raise UsageError("threads must be >= 1")
    return out


def cmd_experiment(args) -> int:
    st = _experiment_settings(args)
    default = SmoothDisc.circle(0.5) if args.kind == "smooth" else reuleaux_triangle()
    region, name, r = _load_region(st["region"], st["r"], default)
    seed, threads = int(st["seed"]), int(st["threads"])
    kind = args.kind
    if kind in ("vertex", "efron", "pairs", "jacobian") and not isinstance(region, DiscPolygon):
        raise UsageError(f"experiment {kind} needs a disc-polygon region")

    if kind in ("vertex", "smooth"):
        n_values = st["n_values"] or (list(ex.DEFAULT_N_VALUES) if kind == "vertex" else [1000, 10000, 100000])
        cfg = ex.ExperimentConfig(region, n_values, int(st["trials"] or ex.DEFAULT_TRIALS), seed, r, kind,
                                  name, threads)
        if kind == "vertex":
            res = ex.run_vertex_experiment(cfg)
            t_f0, t_area = ex.vertex_targets(region)
            summary = {
                "experiment": "vertex", "region": name, "seed": seed, "f0_P": region.f0,
                "slope_f0": res.slope_f0, "slope_f0_se": res.slope_f0_se, "target_f0": t_f0,
                "tolerance_f0": SLOPE_F0_TOL, "pass_f0": _within(res.slope_f0, t_f0, SLOPE_F0_TOL),
                "slope_area": res.slope_area * r * r, "slope_area_se": res.slope_area_se * r * r,
                "target_area": t_area * r * r, "tolerance_area": SLOPE_AREA_TOL,
                "pass_area": _within(res.slope_area, t_area, SLOPE_AREA_TOL),
            }
        else:
            res, rows = ex.smooth_case_experiment(region, cfg)
            summary = {"experiment": "smooth", "region": name, "seed": seed, "tolerance": SMOOTH_TOL,
                       "scaled": rows,
                       "pass": all(_within(row["f0_scaled"], row["f0_limit"], SMOOTH_TOL) for row in rows[-1:])}
        if args.format == "csv":
            text = _rows_csv(res, r)
        else:
            summary["rows"] = _rows_json(res, r)
            text = io.dumps_json(summary)
        io.write_atomic(args.output, text)
        return EXIT_OK

    if kind == "efron":
        n = (st["n_values"] or [100])[0]
        trials = int(st["trials"] or 2000)
        e = ex.efron_check(region, n, trials, seed, threads=threads)
        rec = {"experiment": "efron", "region": name, "n": n, "trials": trials, "lhs": e.lhs, "rhs": e.rhs,
               "combined_se": e.combined_se, "z": e.z, "pass": e.z <= 3.0}
    elif kind == "pairs":
        n = (st["n_values"] or [50])[0]
        trials = int(st["trials"] or 2000)
        q = ex.estimator_equivalence(region, n, trials, args.pairs, seed, threads=threads)
        rec = {"experiment": "pairs", "region": name, "n": n, "trials": trials, "pairs": args.pairs,
               "direct": q.direct, "direct_se": q.direct_se, "pair_integral": q.pair_integral,
               "pair_integral_se": q.pair_integral_se, "z": q.z, "pass": q.z <= 3.0}
    else:
        samples = ex.jacobian_experiment(region, args.configs, seed)
        rec = {"experiment": "jacobian", "region": name, "configs": args.configs, "tolerance": 1e-4}
        for set_name in ("vertex", "edge"):
            sel = [s for s in samples if s.region == set_name]
            rec[f"{set_name}_max_rel_error"] = max(s.rel_error for s in sel)
            rec[f"{set_name}_min_mismatched_rel_error"] = min(s.mismatched_rel_error for s in sel)
        rec["pass"] = max(rec["vertex_max_rel_error"], rec["edge_max_rel_error"]) <= 1e-4
    if args.format == "csv":
        keys = list(rec)
        text = ",".join(keys) + "\n" + ",".join(_cell(rec[k]) for k in keys) + "\n"
    else:
        text = io.dumps_json(rec)
    io.write_atomic(args.output, text)
    return EXIT_OK


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return _fmt(v)
    return str(v)


def hull_oracle_check(instances: int, seed: int, max_n: int = 12) -> dict:
    """r_hull against the supporting-circle oracle on random small sets inside a unit disc."""
    fails = 0
    for i in range(instances):
        gen = RngStream(seed, ex.trial_stream_id(0, i, channel=7)).generator()
        n = int(gen.integers(1, max_n + 1))
        pts = sample_uniform(SmoothDisc.circle(1.0), gen, n)
        if set(int(j) for j in r_hull(pts).vertex_indices) != oracle_vertex_set(pts):
            fails += 1
    return {"checked": instances, "failures": fails}


def cmd_check(args) -> int:
    region, name, _ = _load_region(args.region, None, reuleaux_triangle())
    if not isinstance(region, DiscPolygon):
        raise UsageError("check needs a disc-polygon region")
    report = {"region": name, "seed": args.seed}
    report["lemmas"] = ex.lemma_suite(region, args.seed, caps=args.caps, pairs=args.pairs)
    report["hull_oracle"] = hull_oracle_check(args.trials, args.seed)
    failures = report["lemmas"]["total_failures"] + report["hull_oracle"]["failures"]
    report["total_failures"] = failures
    io.write_atomic(args.output, io.dumps_json(report))
    return EXIT_CHECK if failures else EXIT_OK


COMMANDS = {"hull": cmd_hull, "make-region": cmd_make_region, "experiment": cmd_experiment, "check": cmd_check}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except GeometryError as exc:
        print(f"discpoly: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (UsageError, ValueError, TypeError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"discpoly: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

