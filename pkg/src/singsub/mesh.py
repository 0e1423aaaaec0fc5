"""Piecewise-uniform layer-adapted space meshes and the uniform time grid.

Two mesh layouts are provided:

* a three-band mesh condensing points inside boundary layers at both
  walls (used by problem families 1 and 3, which share the same mesh);
* a five-band mesh that additionally condenses around an interior point
  where the initial condition jumps (family 2).

Each band is generated by an affine map of an integer index (via
``np.linspace``), so band endpoints, and in particular the transition
points, are stored exactly and construction is bitwise reproducible.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError


class MeshKind(str, enum.Enum):
    BOUNDARY = "boundary"
    INTERIOR = "interior"


@dataclass(frozen=True)
class Transition:
    """Where the mesh switches between fine and coarse bands."""

    kind: MeshKind
    width: float
    interior_point: float | None = None


@dataclass(frozen=True, eq=False)
class SpaceMesh:
    points: np.ndarray
    transition: Transition

    @property
    def n_elements(self) -> int:
        return len(self.points) - 1

    @property
    def widths(self) -> np.ndarray:
        return np.diff(self.points)


@dataclass(frozen=True, eq=False)
class TimeGrid:
    points: np.ndarray
    step: float

    @property
    def n_steps(self) -> int:
        return len(self.points) - 1

    @property
    def final_time(self) -> float:
        return float(self.points[-1])


def _freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def _banded_points(edges: list[float], counts: list[int]) -> np.ndarray:
    """Concatenate per-band uniform subdivisions, sharing band endpoints."""
    parts = [np.linspace(edges[0], edges[1], counts[0] + 1)]
    for lo, hi, c in zip(edges[1:], edges[2:], counts[1:]):
        parts.append(np.linspace(lo, hi, c + 1)[1:])
    return np.concatenate(parts)


def _check_layer_args(n: int, eps: float, T: float, mu: float, divisor: int) -> None:
    if n < 2 * divisor or n % divisor != 0:
        raise ConfigurationError(
            f"mesh needs at least {2 * divisor} elements and a count divisible "
            f"by {divisor}, got {n}"
        )
    if not (eps > 0.0 and T > 0.0):
        raise ConfigurationError("eps and T must be positive")
    if not (0.0 < mu <= 1.0):
        raise ConfigurationError(f"mu must lie in (0, 1], got {mu}")


def boundary_layer_mesh(n: int, eps: float, T: float = 1.0, mu: float = 1.0) -> SpaceMesh:
    """Three-band mesh on [0, 1] with layer bands at both walls.

    The transition width is sigma = min(1/4, (4/mu)*sqrt(eps*T)*ln(n));
    the bands [0, sigma], [sigma, 1-sigma], [1-sigma, 1] carry n/4, n/2
    and n/4 uniform elements.  For large eps sigma saturates at 1/4 and
    the mesh degenerates to a uniform one.
    """
    _check_layer_args(n, eps, T, mu, 4)
    sigma = min(0.25, (4.0 / mu) * math.sqrt(eps * T) * math.log(n))
    pts = _banded_points([0.0, sigma, 1.0 - sigma, 1.0], [n // 4, n // 2, n // 4])
    return SpaceMesh(_freeze(pts), Transition(MeshKind.BOUNDARY, sigma))


def interior_layer_mesh(
    n: int, eps: float, T: float = 1.0, mu: float = 1.0, d: float = 0.5
) -> SpaceMesh:
    """Five-band mesh on [0, 1] with wall layers and a layer pair around d.

    The transition width is tau = min(1/8, (4/mu)*sqrt(eps*T)*ln(n)); the
    bands [0, tau], [tau, d-tau], [d-tau, d+tau], [d+tau, 1-tau],
    [1-tau, 1] carry n/8, n/4, n/4, n/4, n/8 uniform elements, and d is
    always a mesh point (the midpoint of the interior band).
    """
    _check_layer_args(n, eps, T, mu, 8)
    if not (0.0 < d < 1.0):
        raise ConfigurationError(f"interior point must lie in (0, 1), got {d}")
    tau = min(0.125, (4.0 / mu) * math.sqrt(eps * T) * math.log(n))
    if d - tau <= tau or d + tau >= 1.0 - tau:
        raise ConfigurationError(
            f"interior-layer mesh infeasible: d={d} with tau={tau:.6g} leaves "
            f"bands [{tau:.6g}, {d - tau:.6g}] and [{d + tau:.6g}, {1.0 - tau:.6g}] "
            "empty or inverted"
        )
    # the interior band is split at d so that d itself is an exact point
    pts = _banded_points(
        [0.0, tau, d - tau, d, d + tau, 1.0 - tau, 1.0],
        [n // 8, n // 4, n // 8, n // 8, n // 4, n // 8],
    )
    return SpaceMesh(_freeze(pts), Transition(MeshKind.INTERIOR, tau, d))


def uniform_time_grid(m: int, T: float) -> TimeGrid:
    """Uniform grid of m elements on [0, T]."""
    if m < 1 or int(m) != m:
        raise ConfigurationError(f"time grid needs at least one element, got {m}")
    if not (T > 0.0):
        raise ConfigurationError(f"final time must be positive, got {T}")
    return TimeGrid(_freeze(np.linspace(0.0, T, m + 1)), T / m)
