"""Seeded uniform sampling in disc-polygons and smooth r-convex discs.

Every stream is a Philox-4x64 counter generator keyed by ``(seed,
stream_id)``. Two streams with different ids share no state, so trials can
run in any order or process and still draw the same points.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import NotRConvex, ZeroArea
from .geom import ccw_span
from .polygon import DiscPolygon, area

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class RngStream:
    seed: int
    stream_id: int = 0

    def generator(self) -> np.random.Generator:
        key = np.array([self.seed & _MASK64, self.stream_id & _MASK64], dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key))

    def substream(self, stream_id: int) -> "RngStream":
        return RngStream(self.seed, stream_id)


def trial_stream_id(n_index: int, trial: int, channel: int = 0) -> int:
    """Stream id for ``trial`` at the ``n_index``-th sample size; ``channel`` separates uses."""
    return (channel << 56) | (n_index << 32) | trial


@dataclass(frozen=True)
class SmoothDisc:
    """Circle (``a == b``) or axis-parallel ellipse with semi-axes ``a``, ``b``."""

    kind: str
    a: float
    b: float
    center: tuple[float, float] = (0.0, 0.0)

    @classmethod
    def circle(cls, radius: float, center=(0.0, 0.0)) -> "SmoothDisc":
        return cls("circle", radius, radius, tuple(center))

    @classmethod
    def ellipse(cls, a: float, b: float, center=(0.0, 0.0)) -> "SmoothDisc":
        return cls("ellipse", a, b, tuple(center))

    def area(self) -> float:
        return math.pi * self.a * self.b

    def boundary(self, theta):
        theta = np.asarray(theta, dtype=float)
        return np.stack([self.center[0] + self.a * np.cos(theta), self.center[1] + self.b * np.sin(theta)], axis=-1)

    def speed(self, theta):
        """|gamma'(theta)| of the standard parametrisation."""
        theta = np.asarray(theta, dtype=float)
        return np.hypot(self.a * np.sin(theta), self.b * np.cos(theta))

    def curvature(self, theta):
        theta = np.asarray(theta, dtype=float)
        return self.a * self.b / self.speed(theta) ** 3

    def min_curvature(self) -> float:
        hi, lo = max(self.a, self.b), min(self.a, self.b)
        return lo / hi**2

    def check_r_convex(self, r: float = 1.0) -> None:
        if not self.min_curvature() > 1.0 / r:
            raise NotRConvex(f"minimum curvature {self.min_curvature()!r} <= 1/r = {1.0 / r!r}")

    def contains_many(self, q: np.ndarray, eps: float = 1e-12) -> np.ndarray:
        q = np.asarray(q, dtype=float).reshape(-1, 2)
        x = (q[:, 0] - self.center[0]) / self.a
        y = (q[:, 1] - self.center[1]) / self.b
        return x * x + y * y <= 1.0 + eps

    def contains(self, q) -> bool:
        return bool(self.contains_many(np.asarray(q, dtype=float)[None, :])[0])

    def scaled(self, s: float) -> "SmoothDisc":
        return SmoothDisc(self.kind, self.a * s, self.b * s, (self.center[0] * s, self.center[1] * s))

    def to_json_dict(self, r: float = 1.0) -> dict:
        d = self.scaled(r)
        if self.kind == "circle":
            return {"type": "circle", "r": r, "radius": d.a, "center": list(d.center)}
        return {"type": "ellipse", "r": r, "a": d.a, "b": d.b, "center": list(d.center)}


Region = Union[DiscPolygon, SmoothDisc]


def region_area(region: Region) -> float:
    return region.area() if isinstance(region, SmoothDisc) else area(region)


def bounding_box(region: Region) -> tuple[np.ndarray, np.ndarray]:
    """Tight axis-aligned box: vertices plus any axis-parallel-tangent points of the arcs."""
    if isinstance(region, SmoothDisc):
        c = np.asarray(region.center, dtype=float)
        half = np.array([region.a, region.b])
        return c - half, c + half
    if region.k == 0:
        raise ZeroArea("empty region has no bounding box")
    pts = [region.vertices]
    if region.k >= 2:
        angles = region.arc_angles()
        for i in range(region.k):
            c = region.arc_centers[i]
            w = region.vertices[i] - c
            a0 = math.atan2(w[1], w[0])
            for phi in (0.0, 0.5 * math.pi, math.pi, 1.5 * math.pi):
                if ccw_span(a0, phi) <= angles[i]:
                    pts.append((c + [math.cos(phi), math.sin(phi)])[None, :])
    allp = np.vstack(pts)
    return allp.min(axis=0), allp.max(axis=0)


def _contains_many(region: Region, q: np.ndarray) -> np.ndarray:
    if isinstance(region, SmoothDisc):
        return region.contains_many(q, eps=0.0)
    return region.contains_many(q, eps=0.0)


def sample_uniform(region: Region, rng: Union[RngStream, np.random.Generator], n: int) -> np.ndarray:
    """``n`` i.i.d. uniform points in ``region`` by rejection from its bounding box."""
    A = region_area(region)
    if not A > 0.0:
        raise ZeroArea("sampling needs a region with positive area")
    gen = rng.generator() if isinstance(rng, RngStream) else rng
    lo, hi = bounding_box(region)
    accept = A / float(np.prod(hi - lo))
    out = []
    have = 0
    while have < n:
        m = int((n - have) / accept * 1.05) + 16
        cand = lo + gen.random((m, 2)) * (hi - lo)
        cand = cand[_contains_many(region, cand)]
        out.append(cand)
        have += len(cand)
    return np.vstack(out)[:n]
