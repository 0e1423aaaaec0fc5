"""Two-mesh convergence studies over a range of diffusion parameters.

For each eps and each ladder cell (N, M), the problem is solved on its
layer-adapted mesh and on the doubled (2N, 2M) companion; the maximum
interpolated difference D over the union mesh estimates the error, and
P = log2(D / D_next) estimates the convergence order.  The uniform row
takes the worst D over the whole eps set, which is the quantity that an
eps-robust method must drive to zero.
"""

from __future__ import annotations

import csv
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import ConfigurationError
from .interp import eval_on_grid, max_diff
from .mesh import SpaceMesh, TimeGrid, boundary_layer_mesh, interior_layer_mesh, uniform_time_grid
from .problem import Family, ProblemSpec, TransformedProblem, raw_problem, transform
from .solver import GridFunction, solve_parabolic

M16_LADDER = ((256, 16), (512, 32), (1024, 64), (2048, 128), (4096, 256))
EQUAL_LADDER = ((64, 64), (128, 128), (256, 256), (512, 512), (1024, 1024))


def dyadic_eps_set(max_exponent: int = 30) -> tuple[float, ...]:
    """The eps sweep {2^0, 2^-1, ..., 2^-max_exponent}."""
    if max_exponent < 0:
        raise ConfigurationError("max_exponent must be >= 0")
    return tuple(2.0**-j for j in range(max_exponent + 1))


@dataclass
class SweepConfig:
    """What a convergence sweep runs over.

    mesh_pairs must double both N and M between consecutive entries; the
    companion (2N, 2M) solve for the last entry is added automatically.
    """

    mesh_pairs: tuple = M16_LADDER
    eps_set: tuple = field(default_factory=dyadic_eps_set)
    mu: float = 1.0
    subtract_singularity: bool = True
    threads: Optional[int] = None


def ladder_from(n0: int, m0: int, steps: int) -> tuple:
    """A doubling ladder of the given length starting at (n0, m0)."""
    if steps < 1:
        raise ConfigurationError("ladder needs at least one cell")
    return tuple((n0 * 2**i, m0 * 2**i) for i in range(steps))


def _space_mesh_for(spec: ProblemSpec, n: int, eps: float, mu: float) -> SpaceMesh:
    if spec.family == Family.INITIAL_INTERIOR:
        return interior_layer_mesh(n, eps, spec.T, mu, spec.disc.location)
    return boundary_layer_mesh(n, eps, spec.T, mu)


def _solve_size(
    tp: TransformedProblem, spec: ProblemSpec, eps: float, n: int, m: int, mu: float
) -> GridFunction:
    mesh = _space_mesh_for(spec, n, eps, mu)
    grid = uniform_time_grid(m, spec.T)
    return solve_parabolic(tp, mesh, grid, eps)


def two_mesh_difference(
    spec: ProblemSpec,
    eps: float,
    n: int,
    m: int,
    *,
    mu: float = 1.0,
    subtract: bool = True,
) -> float:
    """D for one cell: solve on (n, m) and (2n, 2m), compare on the union mesh."""
    tp = transform(spec, eps) if subtract else raw_problem(spec)
    coarse = _solve_size(tp, spec, eps, n, m, mu)
    fine = _solve_size(tp, spec, eps, 2 * n, 2 * m, mu)
    return max_diff(coarse, fine)


def order_of(d: float, d_next: float) -> float:
    """Estimated order log2(d / d_next); NaN when the ratio is degenerate."""
    if not (d > 0.0 and d_next > 0.0) or not (math.isfinite(d) and math.isfinite(d_next)):
        return math.nan
    return math.log2(d / d_next)


@dataclass
class ConvergenceTable:
    """D and P entries per eps plus the uniform (worst-over-eps) rows."""

    ladder: tuple
    eps_set: tuple
    d_rows: np.ndarray  # (len(eps_set), len(ladder))
    p_rows: np.ndarray  # (len(eps_set), len(ladder) - 1)
    d_uniform: np.ndarray
    p_uniform: np.ndarray
    example: Optional[int]
    family: int
    subtract: bool
    mu: float = 1.0
    elapsed_seconds: float = 0.0

    @staticmethod
    def _eps_label(eps: float) -> str:
        expo = -math.log2(eps)
        if abs(expo - round(expo)) < 1e-9:
            return str(int(round(expo)))
        return repr(expo)

    def to_csv(self, path) -> None:
        """One row per (eps, cell) plus the uniform rows.

        D and P are written with full round-trip precision.
        """
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["example", "family", "subtract", "eps_exponent", "N", "M", "D", "P"])
            ex = "" if self.example is None else str(self.example)
            sub = "true" if self.subtract else "false"
            for i, eps in enumerate(self.eps_set):
                label = self._eps_label(eps)
                for k, (n, m) in enumerate(self.ladder):
                    p = repr(float(self.p_rows[i, k])) if k < len(self.ladder) - 1 else ""
                    writer.writerow(
                        [ex, self.family, sub, label, n, m, repr(float(self.d_rows[i, k])), p]
                    )
            for k, (n, m) in enumerate(self.ladder):
                p = repr(float(self.p_uniform[k])) if k < len(self.ladder) - 1 else ""
                writer.writerow(
                    [ex, self.family, sub, "uniform", n, m, repr(float(self.d_uniform[k])), p]
                )

    @classmethod
    def from_csv(cls, path) -> "ConvergenceTable":
        eps_order: list[float] = []
        ladder: list[tuple[int, int]] = []
        d_map: dict = {}
        p_map: dict = {}
        example = None
        family = 0
        subtract = True
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            for row in reader:
                example = int(row["example"]) if row["example"] else None
                family = int(row["family"])
                subtract = row["subtract"] == "true"
                cell = (int(row["N"]), int(row["M"]))
                if cell not in ladder:
                    ladder.append(cell)
                key = row["eps_exponent"]
                if key != "uniform":
                    eps = 2.0 ** -float(key)
                    if eps not in eps_order:
                        eps_order.append(eps)
                    mapped = d_map.setdefault(eps, {})
                else:
                    mapped = d_map.setdefault("uniform", {})
                mapped[cell] = float(row["D"])
                if row["P"]:
                    p_map.setdefault(key if key == "uniform" else eps, {})[cell] = float(row["P"])
        ladder_t = tuple(sorted(ladder))
        n_cells = len(ladder_t)
        d_rows = np.array([[d_map[e][c] for c in ladder_t] for e in eps_order])
        p_rows = np.array([[p_map[e][c] for c in ladder_t[:-1]] for e in eps_order])
        d_uni = np.array([d_map["uniform"][c] for c in ladder_t])
        p_uni = np.array([p_map["uniform"][c] for c in ladder_t[: n_cells - 1]])
        return cls(
            ladder=ladder_t,
            eps_set=tuple(eps_order),
            d_rows=d_rows,
            p_rows=p_rows,
            d_uniform=d_uni,
            p_uniform=p_uni,
            example=example,
            family=family,
            subtract=subtract,
        )

    def to_text(self) -> str:
        """Aligned table with 4-significant-digit scientific notation."""
        width = 14
        head = (
            f"two-mesh differences: example={self.example} family={self.family} "
            f"subtract={'true' if self.subtract else 'false'} mu={self.mu:g} "
            f"elapsed={self.elapsed_seconds:.1f}s"
        )
        lines = [head]
        cols = "".join(f"N={n},M={m}".rjust(width) for n, m in self.ladder)
        lines.append(" " * 12 + cols)
        for i, eps in enumerate(self.eps_set):
            label = f"eps=2^-{self._eps_label(eps)}"
            dcells = "".join(f"{self.d_rows[i, k]:.3E}".rjust(width) for k in range(len(self.ladder)))
            pcells = "".join(
                f"{self.p_rows[i, k]:.3f}".rjust(width) for k in range(len(self.ladder) - 1)
            )
            lines.append(f"{label:<12}" + dcells)
            lines.append(" " * 12 + pcells)
        dcells = "".join(f"{self.d_uniform[k]:.3E}".rjust(width) for k in range(len(self.ladder)))
        pcells = "".join(
            f"{self.p_uniform[k]:.3f}".rjust(width) for k in range(len(self.ladder) - 1)
        )
        lines.append(f"{'uniform D':<12}" + dcells)
        lines.append(f"{'uniform P':<12}" + pcells)
        return "\n".join(lines)


def _validate_sweep(spec: ProblemSpec, cfg: SweepConfig) -> None:
    if len(cfg.mesh_pairs) < 1:
        raise ConfigurationError("sweep needs at least one ladder cell")
    for (n0, m0), (n1, m1) in zip(cfg.mesh_pairs, cfg.mesh_pairs[1:]):
        if n1 != 2 * n0 or m1 != 2 * m0:
            raise ConfigurationError(
                f"ladder must double both N and M, got ({n0},{m0}) -> ({n1},{m1})"
            )
    divisor = 8 if spec.family == Family.INITIAL_INTERIOR else 4
    for n, _ in cfg.mesh_pairs:
        if n % divisor != 0:
            raise ConfigurationError(f"N={n} is not divisible by {divisor} for this family")
    if any(e <= 0.0 for e in cfg.eps_set):
        raise ConfigurationError("eps values must be positive")


def uniform_sweep(spec: ProblemSpec, cfg: SweepConfig, example: Optional[int] = None) -> ConvergenceTable:
    """Fill the whole table: D per (eps, cell), uniform rows, all orders.

    Rows for different eps run concurrently; within a row the chain of
    solves is shared between adjacent cells (each solution is both the
    fine companion of one cell and the coarse grid of the next).
    """
    _validate_sweep(spec, cfg)
    started = time.perf_counter()
    sizes = list(cfg.mesh_pairs)
    last_n, last_m = sizes[-1]
    sizes.append((2 * last_n, 2 * last_m))

    def d_row(eps: float) -> np.ndarray:
        tp = transform(spec, eps) if cfg.subtract_singularity else raw_problem(spec)
        diffs = np.empty(len(sizes) - 1)
        prev = None
        for idx, (n, m) in enumerate(sizes):
            try:
                cur = _solve_size(tp, spec, eps, n, m, cfg.mu)
            except Exception as exc:
                raise RuntimeError(
                    f"sweep cell failed at eps={eps!r}, N={n}, M={m}: {exc}"
                ) from exc
            if prev is not None:
                diffs[idx - 1] = max_diff(prev, cur)
            prev = cur
        return diffs

    workers = cfg.threads
    if workers is None:
        import os

        workers = min(8, os.cpu_count() or 1)
    if workers <= 1 or len(cfg.eps_set) == 1:
        rows = [d_row(eps) for eps in cfg.eps_set]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(d_row, cfg.eps_set))

    d_rows = np.vstack(rows)
    n_cells = len(cfg.mesh_pairs)
    p_rows = np.empty((len(cfg.eps_set), n_cells - 1))
    for i in range(len(cfg.eps_set)):
        for k in range(n_cells - 1):
            p_rows[i, k] = order_of(d_rows[i, k], d_rows[i, k + 1])
    d_uniform = d_rows.max(axis=0)
    p_uniform = np.array([order_of(d_uniform[k], d_uniform[k + 1]) for k in range(n_cells - 1)])
    return ConvergenceTable(
        ladder=tuple(cfg.mesh_pairs),
        eps_set=tuple(cfg.eps_set),
        d_rows=d_rows,
        p_rows=p_rows,
        d_uniform=d_uniform,
        p_uniform=p_uniform,
        example=example,
        family=int(spec.family),
        subtract=cfg.subtract_singularity,
        mu=cfg.mu,
        elapsed_seconds=time.perf_counter() - started,
    )


def reconstruct_solution(
    tp: TransformedProblem, g: GridFunction, sample_nx: int, sample_nt: int
):
    """Sample singular_part + interpolated remainder on a uniform rectangle.

    Returns (xs, ts, u) with u of shape (sample_nt, sample_nx); this is
    the approximation to the original discontinuous-data solution.
    """
    xs = np.linspace(0.0, 1.0, sample_nx)
    ts = np.linspace(0.0, tp.spec.T, sample_nt)
    u = eval_on_grid(g, xs, ts)
    for r, t in enumerate(ts):
        u[r] += np.broadcast_to(np.asarray(tp.singular_part(xs, float(t)), dtype=float), xs.shape)
    return xs, ts, u
