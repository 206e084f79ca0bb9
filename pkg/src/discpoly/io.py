"""Reading points, regions and configs; atomic output."""
from __future__ import annotations

import json
import os
import sys
import tempfile
from pathlib import Path
from typing import Any, Optional, TextIO

import numpy as np

from .polygon import DiscPolygon
from .sampling import Region, SmoothDisc

CONFIG_KEYS = ("region", "n_values", "trials", "seed", "r", "kind", "threads")


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def parse_points(text: str) -> np.ndarray:
    """One ``x,y`` per line; blank lines and ``#`` comments are skipped."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'x,y', got {raw!r}")
        try:
            rows.append((float(parts[0]), float(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: not a number in {raw!r}") from None
    return np.asarray(rows, dtype=float).reshape(-1, 2)


def read_points(path: str) -> np.ndarray:
    return parse_points(read_text(path))


def region_from_dict(d: dict) -> Region:
    """Region in unit-radius coordinates; lengths are divided by ``d["r"]``."""
    r = float(d.get("r", 1.0))
    if not r > 0.0:
        raise ValueError("r must be positive")
    kind = d.get("type", "disc_polygon")
    if kind == "disc_polygon":
        return DiscPolygon.from_json_dict(d)
    center = tuple(float(c) / r for c in d.get("center", (0.0, 0.0)))
    if kind == "circle":
        return SmoothDisc.circle(float(d["radius"]) / r, center)
    if kind == "ellipse":
        return SmoothDisc.ellipse(float(d["a"]) / r, float(d["b"]) / r, center)
    raise ValueError(f"unknown region type {kind!r}")


def region_to_dict(region: Region, r: float = 1.0) -> dict:
    if isinstance(region, SmoothDisc):
        return region.to_json_dict(r)
    d = {"type": "disc_polygon"}
    d.update(region.to_json_dict(r))
    return d


def read_region(path: str) -> Region:
    return region_from_dict(json.loads(read_text(path)))


def region_name(path: Optional[str]) -> str:
    if not path or path == "-":
        return "region"
    return Path(path).stem


def read_config(path: str) -> dict[str, Any]:
    """JSON object whose keys mirror ExperimentConfig; unknown keys are an error."""
    d = json.loads(read_text(path))
    if not isinstance(d, dict):
        raise ValueError("config must be a JSON object")
    extra = sorted(set(d) - set(CONFIG_KEYS))
    if extra:
        raise ValueError(f"unknown config keys: {', '.join(extra)}")
    return d


def dumps_json(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def write_atomic(path: Optional[str], text: str, stdout: Optional[TextIO] = None) -> None:
    """Write ``text`` to ``path`` via a temp file in the same directory and a rename.

    ``None`` or ``"-"`` writes to stdout.
    """
    if path is None or path == "-":
        (stdout or sys.stdout).write(text)
        return
    target = Path(path)
    directory = target.parent if str(target.parent) else Path(".")
    fd, tmp = tempfile.mkstemp(prefix=f".{target.name}.", dir=directory)
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise
