"""Bilinear interpolation of grid functions and two-mesh differences."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .solver import GridFunction

# merge tolerance: transition points of companion meshes differ by
# O(sqrt(eps)*ln 2) and must never be glued together
_MERGE_RTOL = 2.0**-48


@dataclass(frozen=True, eq=False)
class UnionMesh:
    """Per-axis merge of two tensor grids (all points of both, deduplicated)."""

    x: np.ndarray
    t: np.ndarray


def _merge_axis(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    merged = np.sort(np.concatenate([a, b]))
    gaps = np.diff(merged)
    thresh = _MERGE_RTOL * np.maximum(np.abs(merged[:-1]), np.abs(merged[1:]))
    keep = np.empty(len(merged), dtype=bool)
    keep[0] = True
    keep[1:] = gaps > thresh
    return merged[keep]


def union_mesh(ga: GridFunction, gb: GridFunction) -> UnionMesh:
    ta = ga.grid.final_time
    tb = gb.grid.final_time
    if abs(ta - tb) > 1e-12 * max(ta, tb):
        raise DomainError(f"grid functions cover different time extents: {ta} vs {tb}")
    return UnionMesh(
        x=_merge_axis(ga.mesh.points, gb.mesh.points),
        t=_merge_axis(ga.grid.points, gb.grid.points),
    )


def _axis_cells(nodes: np.ndarray, q: np.ndarray):
    """Cell index and barycentric weight of each query point along one axis."""
    idx = np.clip(np.searchsorted(nodes, q, side="right") - 1, 0, len(nodes) - 2)
    w = (q - nodes[idx]) / (nodes[idx + 1] - nodes[idx])
    return idx, w


def _check_bounds(lo: float, hi: float, q: np.ndarray, label: str) -> None:
    slack = 1e-12 * max(1.0, abs(hi))
    if np.any(q < lo - slack) or np.any(q > hi + slack):
        raise DomainError(f"{label} outside [{lo}, {hi}]")


def bilinear_eval(g: GridFunction, x, t):
    """Tensor-product linear interpolant of a grid function.

    Reproduces nodal values exactly at grid nodes; raises DomainError
    for points outside the grid's rectangle.  x and t broadcast.
    """
    xa = np.asarray(x, dtype=float)
    ta = np.asarray(t, dtype=float)
    xb, tb = np.broadcast_arrays(xa, ta)
    _check_bounds(float(g.mesh.points[0]), float(g.mesh.points[-1]), xb, "x")
    _check_bounds(float(g.grid.points[0]), float(g.grid.points[-1]), tb, "t")
    ix, wx = _axis_cells(g.mesh.points, xb.ravel())
    it, wt = _axis_cells(g.grid.points, tb.ravel())
    v = g.values
    low = (1.0 - wx) * v[it, ix] + wx * v[it, ix + 1]
    high = (1.0 - wx) * v[it + 1, ix] + wx * v[it + 1, ix + 1]
    out = (1.0 - wt) * low + wt * high
    if xa.ndim == 0 and ta.ndim == 0:
        return float(out[0])
    return out.reshape(xb.shape)


def _row_at(g: GridFunction, xs_idx, xs_w, t: float) -> np.ndarray:
    """Interpolated values along precomputed x-cells at one time."""
    it, wt = _axis_cells(g.grid.points, np.asarray([t]))
    j, w = int(it[0]), float(wt[0])
    row = (1.0 - w) * g.values[j] + w * g.values[j + 1]
    return (1.0 - xs_w) * row[xs_idx] + xs_w * row[xs_idx + 1]


def eval_on_grid(g: GridFunction, xs: np.ndarray, ts: np.ndarray) -> np.ndarray:
    """Interpolant sampled on a rectangular grid, shape (len(ts), len(xs))."""
    xs = np.asarray(xs, dtype=float)
    ts = np.asarray(ts, dtype=float)
    _check_bounds(float(g.mesh.points[0]), float(g.mesh.points[-1]), xs, "x")
    _check_bounds(float(g.grid.points[0]), float(g.grid.points[-1]), ts, "t")
    ix, wx = _axis_cells(g.mesh.points, xs)
    out = np.empty((len(ts), len(xs)))
    for r, t in enumerate(ts):
        out[r] = _row_at(g, ix, wx, float(t))
    return out


def max_diff(ga: GridFunction, gb: GridFunction) -> float:
    """Maximum difference of two interpolated grid functions on their union mesh.

    The scan runs over all union-mesh nodes at positive times; the
    initial row is left out because both solutions carry the same
    prescribed data there, and nodal sampling of discontinuous raw data
    would register a spurious jump-sized difference at t = 0.
    """
    um = union_mesh(ga, gb)
    ts = um.t[um.t > 0.0]
    ixa, wxa = _axis_cells(ga.mesh.points, um.x)
    ixb, wxb = _axis_cells(gb.mesh.points, um.x)
    worst = 0.0
    for t in ts:
        ra = _row_at(ga, ixa, wxa, float(t))
        rb = _row_at(gb, ixb, wxb, float(t))
        worst = max(worst, float(np.max(np.abs(ra - rb))))
    return worst
