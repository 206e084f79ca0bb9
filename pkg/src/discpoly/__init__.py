"""Unit disc-polygons, spindle hulls of planar point sets, and Monte Carlo
experiments on random disc-polygons.

Lengths are in units of the disc radius r; every region and point set is
rescaled to r = 1 on entry.
"""
from .errors import GeometryError
from .geom import min_enclosing_circle, unit_disc_centers_through
from .hull import HullResult, missed_area, oracle_vertex_set, r_hull
from .kernels import BACKEND_NAME
from .polygon import (
    DiscCap,
    DiscPolygon,
    area,
    cap_pair,
    contains,
    disc_cap,
    intersect_with_disc,
    normal_cones,
    regular_disc_polygon,
    reuleaux_triangle,
    spindle,
    t_star,
)
from .sampling import RngStream, SmoothDisc, sample_uniform

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "DiscCap",
    "DiscPolygon",
    "GeometryError",
    "HullResult",
    "RngStream",
    "SmoothDisc",
    "area",
    "cap_pair",
    "contains",
    "disc_cap",
    "intersect_with_disc",
    "min_enclosing_circle",
    "missed_area",
    "normal_cones",
    "oracle_vertex_set",
    "r_hull",
    "regular_disc_polygon",
    "reuleaux_triangle",
    "sample_uniform",
    "spindle",
    "t_star",
    "unit_disc_centers_through",
]
