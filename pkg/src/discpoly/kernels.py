"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
twin. Set ``DISCPOLY_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels_py as python_backend

compiled_backend = None
if os.environ.get("DISCPOLY_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

backend = compiled_backend if compiled_backend is not None else python_backend
BACKEND_NAME = "compiled" if compiled_backend is not None else "python"

# the compiled clipper works in a fixed stack buffer of this many arcs
MAX_COMPILED_ARCS = 63

rhull = backend.rhull
convex_hull = getattr(backend, "convex_hull_idx", None) or backend.convex_hull
prune = getattr(backend, "prune_idx", None) or backend.prune
dist_to_polygon = backend.dist_to_polygon


def _for_arcs(k: int):
    return backend if k <= MAX_COMPILED_ARCS else python_backend


def clip_area(vx, vy, cx, cy, qx, qy):
    return _for_arcs(len(vx)).clip_area(vx, vy, cx, cy, qx, qy)


def cap_pair_areas(vx, vy, cx, cy, x1, x2):
    return _for_arcs(len(vx)).cap_pair_areas(vx, vy, cx, cy, x1, x2)
