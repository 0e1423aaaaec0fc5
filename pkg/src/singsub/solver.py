"""Implicit time marching for the remainder problem.

Backward Euler in time, central second differences on the (generally
nonuniform) space mesh.  Every time level requires one tridiagonal
solve; the matrix is strictly diagonally dominant because the reaction
coefficient is nonnegative, so the marching is unconditionally stable
and satisfies a discrete maximum principle.

``thomas_solve`` is the plain sequential elimination; time marching
defaults to LAPACK's banded solver, which computes the same
factorization in compiled code.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_banded

from .errors import ConfigurationError, NumericalError
from .mesh import SpaceMesh, TimeGrid
from .problem import TransformedProblem


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Discrete solution values on a tensor-product grid.

    values[j, i] is the solution at time grid.points[j] and space point
    mesh.points[i].  Row 0 carries the initial data, columns 0 and -1
    the boundary data.
    """

    values: np.ndarray
    mesh: SpaceMesh
    grid: TimeGrid

    def __post_init__(self):
        expected = (self.grid.n_steps + 1, self.mesh.n_elements + 1)
        if self.values.shape != expected:
            raise ConfigurationError(
                f"grid function shape {self.values.shape} does not match "
                f"mesh/grid shape {expected}"
            )


@dataclass
class TridiagonalSystem:
    """One tridiagonal system; sub[0] and sup[-1] are padding zeros."""

    sub: np.ndarray
    diag: np.ndarray
    sup: np.ndarray
    rhs: np.ndarray


def central_second_difference(u_left, u_mid, u_right, h_left, h_right):
    """Three-point second difference on a nonuniform stencil.

    Exact for quadratics on any stencil widths.
    """
    hbar = 0.5 * (h_left + h_right)
    return ((u_right - u_mid) / h_right - (u_mid - u_left) / h_left) / hbar


def _interior_coeffs(points: np.ndarray, eps: float):
    """Off-diagonal entries and diffusion diagonal for interior rows 1..n-2."""
    h = np.diff(points)
    hbar = 0.5 * (h[:-1] + h[1:])
    lower = -eps / (h[:-1] * hbar)
    upper = -eps / (h[1:] * hbar)
    return lower, upper, -(lower + upper)


def assemble_step(mesh: SpaceMesh, t: float, k: float, b, eps: float, f_row, y_prev, bc):
    """Assemble one backward-Euler level as a tridiagonal system.

    Interior row i enforces
        -eps*d2x(Y) + b(x_i,t)*Y_i + (Y_i - y_prev_i)/k = f_row[i];
    rows 0 and n-1 are identity rows pinning the boundary pair ``bc``.
    """
    pts = mesh.points
    n = len(pts)
    x_int = pts[1:-1]
    lower, upper, lap = _interior_coeffs(pts, eps)
    b_row = np.broadcast_to(np.asarray(b(x_int, t), dtype=float), x_int.shape)
    f_int = np.asarray(f_row, dtype=float)[1:-1]
    prev_int = np.asarray(y_prev, dtype=float)[1:-1]

    sub = np.zeros(n)
    diag = np.ones(n)
    sup = np.zeros(n)
    rhs = np.empty(n)
    sub[1:-1] = lower
    sup[1:-1] = upper
    diag[1:-1] = lap + b_row + 1.0 / k
    rhs[1:-1] = f_int + prev_int / k
    rhs[0] = bc[0]
    rhs[-1] = bc[1]
    return TridiagonalSystem(sub=sub, diag=diag, sup=sup, rhs=rhs)


def thomas_solve(system: TridiagonalSystem) -> np.ndarray:
    """Sequential elimination for a tridiagonal system.

    Assumes diagonal dominance (guaranteed by assembly); a vanishing
    pivot raises NumericalError.
    """
    sub, diag, sup, rhs = system.sub, system.diag, system.sup, system.rhs
    n = len(diag)
    c = np.empty(n)
    d = np.empty(n)
    if diag[0] == 0.0:
        raise NumericalError("zero pivot in row 0")
    c[0] = sup[0] / diag[0]
    d[0] = rhs[0] / diag[0]
    for i in range(1, n):
        denom = diag[i] - sub[i] * c[i - 1]
        if denom == 0.0:
            raise NumericalError(f"zero pivot in row {i}")
        c[i] = sup[i] / denom
        d[i] = (rhs[i] - sub[i] * d[i - 1]) / denom
    x = np.empty(n)
    x[-1] = d[-1]
    for i in range(n - 2, -1, -1):
        x[i] = d[i] - c[i] * x[i + 1]
    return x


def solve_parabolic(
    tp: TransformedProblem,
    mesh: SpaceMesh,
    grid: TimeGrid,
    eps: float,
    method: str = "banded",
) -> GridFunction:
    """March the remainder problem over the whole time grid.

    Row 0 is the initial data evaluated at the mesh points (boundary
    columns come from the boundary evaluators); each later row solves
    one tridiagonal system.  ``method`` picks the linear solver:
    "banded" (LAPACK, default) or "thomas" (the in-package elimination);
    both produce the same solution to rounding.
    """
    if tp.eps is not None and tp.eps != eps:
        raise ConfigurationError(
            f"problem was transformed at eps={tp.eps}, solve requested eps={eps}"
        )
    if method not in ("banded", "thomas"):
        raise ConfigurationError(f"unknown linear solver '{method}'")

    pts = mesh.points
    n = len(pts)
    ts = grid.points
    k = grid.step
    inv_k = 1.0 / k
    x_int = pts[1:-1]
    lower, upper, lap = _interior_coeffs(pts, eps)

    vals = np.empty((len(ts), n))
    vals[0] = np.broadcast_to(np.asarray(tp.y_initial(pts), dtype=float), pts.shape)
    vals[0, 0] = float(np.asarray(tp.y_left(float(ts[0]))))
    vals[0, -1] = float(np.asarray(tp.y_right(float(ts[0]))))

    if method == "thomas":
        for j in range(1, len(ts)):
            t = float(ts[j])
            f_row = np.empty(n)
            f_row[1:-1] = np.broadcast_to(
                np.asarray(tp.rhs_F(x_int, t), dtype=float), x_int.shape
            )
            f_row[0] = f_row[-1] = 0.0
            bc = (float(np.asarray(tp.y_left(t))), float(np.asarray(tp.y_right(t))))
            sysj = assemble_step(mesh, t, k, tp.b, eps, f_row, vals[j - 1], bc)
            vals[j] = thomas_solve(sysj)
            vals[j, 0], vals[j, -1] = bc
        vals.flags.writeable = False
        return GridFunction(vals, mesh, grid)

    ab = np.zeros((3, n))
    rhs = np.empty(n)
    for j in range(1, len(ts)):
        t = float(ts[j])
        b_row = np.broadcast_to(np.asarray(tp.b(x_int, t), dtype=float), x_int.shape)
        f_row = np.broadcast_to(np.asarray(tp.rhs_F(x_int, t), dtype=float), x_int.shape)
        bl = float(np.asarray(tp.y_left(t)))
        br = float(np.asarray(tp.y_right(t)))
        # solve_banded overwrites ab, so refill every level
        ab[0, 1] = 0.0
        ab[0, 2:] = upper
        ab[1, 0] = ab[1, -1] = 1.0
        ab[1, 1:-1] = lap + b_row + inv_k
        ab[2, : n - 2] = lower
        ab[2, n - 2] = 0.0
        rhs[1:-1] = f_row + vals[j - 1, 1:-1] * inv_k
        rhs[0] = bl
        rhs[-1] = br
        vals[j] = solve_banded((1, 1), ab, rhs, overwrite_ab=True, check_finite=False)
        vals[j, 0] = bl
        vals[j, -1] = br
    vals.flags.writeable = False
    return GridFunction(vals, mesh, grid)
