"""Problem instances, data-compatibility checks, and the regularizing transform.

A ``ProblemSpec`` describes a parabolic reaction-diffusion problem

    u_t - eps*u_xx + b(x,t)*u = f(x,t)   on (0,1) x (0,T]

whose boundary/initial data has a single jump, in one of three ways:

1. between the initial trace and a wall value at a corner,
2. inside the initial condition at an interior point d,
3. in the left wall value at a positive time d.

``transform`` subtracts the closed-form singular part carrying the jump
and returns the problem satisfied by the smooth remainder y, whose data
is continuous; ``raw_problem`` wraps the original discontinuous data
unchanged for the "solve it naively" comparison runs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import CapabilityError, ConfigurationError
from .specialfn import KernelParams, damped_complement_kernel, singular_kernel

_DATA_TOL = 1e-10


class Family(enum.IntEnum):
    BOUNDARY_INITIAL_CORNER = 1
    INITIAL_INTERIOR = 2
    BOUNDARY_IN_TIME = 3


@dataclass(frozen=True)
class ScalarField2D:
    """A coefficient or source field on [0,1] x [0,T].

    The evaluator must accept an ndarray of x at a scalar t and return a
    broadcastable result; the library calls it from concurrent workers,
    so it must be pure.
    """

    fn: Callable
    depends_on_x: bool = True

    def __call__(self, x, t):
        return self.fn(x, t)


@dataclass(frozen=True)
class DiscontinuitySpec:
    """Where the data jumps, by how much, and the frozen reaction anchor."""

    family: Family
    location: float
    jump: float
    anchor_b0: float

    def __post_init__(self):
        if self.jump == 0.0:
            raise ConfigurationError("jump must be nonzero")
        if self.anchor_b0 < 0.0:
            raise ConfigurationError("anchor_b0 must be nonnegative")
        fam = Family(self.family)
        if fam == Family.BOUNDARY_INITIAL_CORNER and self.location != 0.0:
            raise ConfigurationError("family 1 anchors its jump at the corner x = 0")
        if fam == Family.INITIAL_INTERIOR and not (0.0 < self.location < 1.0):
            raise ConfigurationError(
                f"family 2 jump location must lie in (0, 1), got {self.location}"
            )
        if fam == Family.BOUNDARY_IN_TIME and not (self.location > 0.0):
            raise ConfigurationError(
                f"family 3 jump time must be positive, got {self.location}"
            )


@dataclass(frozen=True)
class JumpInitial:
    """Initial condition with one-sided limits at an interior jump.

    ``below``/``above`` are smooth branches valid on their closed sides;
    direct calls use the below branch at the jump point itself.
    """

    below: Callable
    above: Callable
    location: float

    def __call__(self, x):
        xa = np.asarray(x, dtype=float)
        out = np.where(xa <= self.location, self.below(xa), self.above(xa))
        return float(out) if xa.ndim == 0 else out

    @property
    def left_limit(self) -> float:
        return float(self.below(self.location))

    @property
    def right_limit(self) -> float:
        return float(self.above(self.location))

    @property
    def jump(self) -> float:
        return self.right_limit - self.left_limit

    @property
    def mean(self) -> float:
        return 0.5 * (self.right_limit + self.left_limit)


@dataclass(frozen=True)
class StepBoundary:
    """Boundary value with one-sided limits at a jump time.

    Direct calls follow the data as given (old branch closed at the jump
    time); ``new_branch`` switches branches at the jump time itself,
    consistent with a step function that is closed at 0.
    """

    before: Callable
    after: Callable
    location: float

    def __call__(self, t):
        ta = np.asarray(t, dtype=float)
        out = np.where(ta <= self.location, self.before(ta), self.after(ta))
        return float(out) if ta.ndim == 0 else out

    def new_branch(self, t):
        ta = np.asarray(t, dtype=float)
        out = np.where(ta < self.location, self.before(ta), self.after(ta))
        return float(out) if ta.ndim == 0 else out

    @property
    def jump(self) -> float:
        return float(self.after(self.location)) - float(self.before(self.location))


@dataclass(frozen=True)
class DerivativeBundle:
    """Optional closed-form derivatives of the data, for compatibility checks.

    phi_* take x; gl_*/gr_* take t; f_*/b_* take (x, t).  Anything left
    as None limits the order of corner conditions that can be checked.
    """

    phi_x: Optional[Callable] = None
    phi_xx: Optional[Callable] = None
    phi_xxxx: Optional[Callable] = None
    gl_t: Optional[Callable] = None
    gl_tt: Optional[Callable] = None
    gr_t: Optional[Callable] = None
    gr_tt: Optional[Callable] = None
    f_t: Optional[Callable] = None
    f_xx: Optional[Callable] = None
    b_t: Optional[Callable] = None
    b_x: Optional[Callable] = None
    b_xx: Optional[Callable] = None


@dataclass(frozen=True)
class ProblemSpec:
    """One problem instance: coefficients, data, and its discontinuity."""

    b: ScalarField2D
    f: ScalarField2D
    initial: Callable
    boundary_left: Callable
    boundary_right: Callable
    T: float
    disc: DiscontinuitySpec
    derivatives: Optional[DerivativeBundle] = None
    name: str = ""

    @property
    def family(self) -> Family:
        return Family(self.disc.family)


@dataclass(frozen=True)
class TransformedProblem:
    """The remainder problem plus the singular part needed to reconstruct u.

    ``singular_part`` takes (x array, scalar t); the identity
    u_data == singular_part + y_data holds on the parabolic boundary away
    from the discontinuity point.  ``eps`` is None for raw (untransformed)
    problems, which are eps-independent.
    """

    rhs_F: ScalarField2D
    y_left: Callable
    y_right: Callable
    y_initial: Callable
    singular_part: Callable
    b: ScalarField2D
    eps: Optional[float]
    spec: ProblemSpec


def validate_problem(spec: ProblemSpec, samples: int = 33) -> None:
    """Check the family-specific data constraints where they are checkable."""
    fam = spec.family
    xs = np.linspace(0.0, 1.0, samples)
    ts = np.linspace(0.0, spec.T, samples)
    for t in ts:
        bvals = np.broadcast_to(np.asarray(spec.b(xs, float(t)), dtype=float), xs.shape)
        if np.any(bvals < 0.0):
            raise ConfigurationError(f"reaction coefficient is negative at t={t}")
    if fam == Family.BOUNDARY_INITIAL_CORNER:
        gl = np.asarray([float(np.asarray(spec.boundary_left(float(t)))) for t in ts])
        gr = np.asarray([float(np.asarray(spec.boundary_right(float(t)))) for t in ts])
        if np.max(np.abs(gl)) > _DATA_TOL or np.max(np.abs(gr)) > _DATA_TOL:
            raise ConfigurationError("family 1 requires homogeneous wall values")
        if abs(float(np.asarray(spec.initial(1.0)))) > _DATA_TOL:
            raise ConfigurationError("family 1 requires the initial trace to vanish at x=1")
        if abs(float(np.asarray(spec.initial(0.0))) - spec.disc.jump) > _DATA_TOL:
            raise ConfigurationError("family 1 jump must equal the initial trace at x=0+")
    elif fam == Family.INITIAL_INTERIOR:
        if not isinstance(spec.initial, JumpInitial):
            raise ConfigurationError("family 2 needs a JumpInitial initial condition")
        if spec.initial.location != spec.disc.location:
            raise ConfigurationError("jump location disagrees with the initial condition")
        if abs(spec.initial.jump - spec.disc.jump) > _DATA_TOL:
            raise ConfigurationError("jump magnitude disagrees with the initial condition")
        if abs(float(np.asarray(spec.initial(0.0)))) > _DATA_TOL or abs(
            float(np.asarray(spec.initial(1.0)))
        ) > _DATA_TOL:
            raise ConfigurationError("family 2 requires the initial trace to vanish at the walls")
    elif fam == Family.BOUNDARY_IN_TIME:
        if not isinstance(spec.boundary_left, StepBoundary):
            raise ConfigurationError("family 3 needs a StepBoundary left wall value")
        if spec.boundary_left.location != spec.disc.location:
            raise ConfigurationError("jump time disagrees with the wall data")
        if abs(spec.boundary_left.jump - spec.disc.jump) > _DATA_TOL:
            raise ConfigurationError("jump magnitude disagrees with the wall data")
        if not (spec.disc.location < spec.T):
            raise ConfigurationError("family 3 jump time must lie before the final time")
        phi = np.broadcast_to(np.asarray(spec.initial(xs), dtype=float), xs.shape)
        gr = np.asarray([float(np.asarray(spec.boundary_right(float(t)))) for t in ts])
        if np.max(np.abs(phi)) > _DATA_TOL or np.max(np.abs(gr)) > _DATA_TOL:
            raise ConfigurationError(
                "family 3 requires a zero initial trace and a zero right wall value"
            )


def _make_singular(spec: ProblemSpec, eps: float) -> Callable:
    """Build the family-specific singular-part evaluator (x array, scalar t)."""
    disc = spec.disc
    p = KernelParams(eps=eps, b0=disc.anchor_b0, T=spec.T)
    fam = spec.family
    if fam == Family.BOUNDARY_INITIAL_CORNER:
        amp = disc.jump

        def sing(x, t):
            return amp * singular_kernel(x, t, p)

    elif fam == Family.INITIAL_INTERIOR:
        amp = 0.5 * disc.jump
        d = disc.location

        def sing(x, t):
            return amp * singular_kernel(np.asarray(x, dtype=float) - d, t, p)

    else:
        amp = disc.jump
        d = disc.location

        def sing(x, t):
            if t < d:
                xa = np.asarray(x, dtype=float)
                return 0.0 if xa.ndim == 0 else np.zeros(xa.shape)
            return amp * damped_complement_kernel(x, t - d, p)

    return sing


def singular_part_eval(spec: ProblemSpec, eps: float, x, t):
    """Evaluate the subtracted singular part at (x, t)."""
    return _make_singular(spec, eps)(x, t)


def transform(spec: ProblemSpec, eps: float) -> TransformedProblem:
    """Subtract the singular part and return the remainder problem.

    The right-hand side becomes F = f - (b - b0) * singular_part, and the
    boundary/initial data of the remainder is continuous.
    """
    validate_problem(spec)
    disc = spec.disc
    fam = spec.family
    sing = _make_singular(spec, eps)
    b0 = disc.anchor_b0
    b_field = spec.b
    f_field = spec.f

    def rhs(x, t):
        xa = np.asarray(x, dtype=float)
        bvals = np.asarray(b_field(xa, t), dtype=float)
        return f_field(xa, t) - (bvals - b0) * sing(xa, t)

    if fam == Family.BOUNDARY_INITIAL_CORNER:
        amp = disc.jump
        phi = spec.initial

        def y_left(t):
            return 0.0

        def y_right(t):
            return -float(np.asarray(sing(1.0, t)))

        def y_initial(x):
            xa = np.asarray(x, dtype=float)
            out = np.asarray(phi(xa), dtype=float) - amp
            return float(out) if xa.ndim == 0 else out

    elif fam == Family.INITIAL_INTERIOR:
        phi = spec.initial
        d = disc.location
        half = 0.5 * disc.jump
        mean = phi.mean

        def y_left(t):
            return -float(np.asarray(sing(0.0, t)))

        def y_right(t):
            return -float(np.asarray(sing(1.0, t)))

        def y_initial(x):
            xa = np.asarray(x, dtype=float)
            vals = np.asarray(phi(xa), dtype=float) - half * np.sign(xa - d)
            out = np.where(xa == d, mean, vals)
            return float(out) if xa.ndim == 0 else out

    else:
        wall = spec.boundary_left
        d = disc.location
        amp = disc.jump
        b0_loc = disc.anchor_b0

        def y_left(t):
            # branch-consistent with a step closed at 0, so y stays continuous
            if t < d:
                return float(np.asarray(wall.before(t)))
            return float(np.asarray(wall.after(t))) - amp * float(np.exp(-b0_loc * (t - d)))

        def y_right(t):
            return -float(np.asarray(sing(1.0, t)))

        def y_initial(x):
            xa = np.asarray(x, dtype=float)
            return 0.0 if xa.ndim == 0 else np.zeros(xa.shape)

    return TransformedProblem(
        rhs_F=ScalarField2D(rhs, depends_on_x=True),
        y_left=y_left,
        y_right=y_right,
        y_initial=y_initial,
        singular_part=sing,
        b=spec.b,
        eps=eps,
        spec=spec,
    )


def raw_problem(spec: ProblemSpec) -> TransformedProblem:
    """Wrap the original discontinuous data without subtracting anything.

    At the jump point the data is sampled deterministically: the average
    of the one-sided limits at a family-2 initial node, and the new
    branch at a family-3 boundary time node (step closed at 0).
    """
    validate_problem(spec)
    fam = spec.family

    def zero_sing(x, t):
        xa = np.asarray(x, dtype=float)
        return 0.0 if xa.ndim == 0 else np.zeros(xa.shape)

    if fam == Family.INITIAL_INTERIOR:
        phi = spec.initial
        d = phi.location
        mean = phi.mean

        def u_initial(x):
            xa = np.asarray(x, dtype=float)
            out = np.where(xa == d, mean, np.asarray(phi(xa), dtype=float))
            return float(out) if xa.ndim == 0 else out

    else:
        u_initial = spec.initial

    if fam == Family.BOUNDARY_IN_TIME:
        u_left = spec.boundary_left.new_branch
    else:
        u_left = spec.boundary_left

    return TransformedProblem(
        rhs_F=spec.f,
        y_left=u_left,
        y_right=spec.boundary_right,
        y_initial=u_initial,
        singular_part=zero_sing,
        b=spec.b,
        eps=None,
        spec=spec,
    )


# ---------------------------------------------------------------------------
# Corner compatibility conditions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConditionCheck:
    corner: tuple[float, float]
    order: int
    description: str
    residual: float
    scale: float
    satisfied: bool
    eps_dependent: bool


@dataclass(frozen=True)
class CompatibilityReport:
    checks: tuple[ConditionCheck, ...]
    order: int
    eps: float
    b_depends_on_x: bool

    @property
    def all_satisfied(self) -> bool:
        return all(c.satisfied for c in self.checks)

    def __str__(self) -> str:
        lines = [f"corner compatibility up to order {self.order} at eps={self.eps:g}"]
        if self.b_depends_on_x:
            lines.append("note: b varies in x (outside the constant-in-x assumption)")
        for c in self.checks:
            mark = "ok " if c.satisfied else "VIOLATED"
            extra = "  [eps-dependent]" if c.eps_dependent else ""
            lines.append(
                f"  ({c.corner[0]:g},{c.corner[1]:g}) order {c.order}: {mark} "
                f"residual={c.residual:.3e} scale={c.scale:.3e}  {c.description}{extra}"
            )
        return "\n".join(lines)


def _need(bundle: Optional[DerivativeBundle], name: str, order: int) -> Callable:
    fn = getattr(bundle, name, None) if bundle is not None else None
    if fn is None:
        raise CapabilityError(
            f"compatibility check of order {order} needs the derivative evaluator '{name}'"
        )
    return fn


def _corner_checks(spec: ProblemSpec, corner_x: float, order: int, eps: float):
    """Residuals of the corner conditions at (corner_x, 0) for orders 0..order."""
    dv = spec.derivatives
    at_left = corner_x == 0.0
    g = spec.boundary_left if at_left else spec.boundary_right
    g0 = float(np.asarray(g(0.0)))
    phi0 = float(np.asarray(spec.initial(corner_x)))
    b00 = float(np.asarray(spec.b(corner_x, 0.0)))
    f00 = float(np.asarray(spec.f(corner_x, 0.0)))
    checks = []

    resid0 = phi0 - g0
    scale0 = 1.0 + abs(phi0) + abs(g0)
    checks.append(
        ConditionCheck(
            corner=(corner_x, 0.0),
            order=0,
            description="initial trace matches the wall value",
            residual=resid0,
            scale=scale0,
            satisfied=abs(resid0) <= _DATA_TOL * scale0,
            eps_dependent=False,
        )
    )
    if order < 1:
        return checks

    g_t = _need(dv, "gl_t" if at_left else "gr_t", 1)
    phi_xx = _need(dv, "phi_xx", 1)
    gt0 = float(np.asarray(g_t(0.0)))
    pxx0 = float(np.asarray(phi_xx(corner_x)))

    def resid1(e):
        return (gt0 - e * pxx0) + b00 * phi0 - f00

    r1 = resid1(eps)
    scale1 = 1.0 + abs(gt0) + abs(eps * pxx0) + abs(b00 * phi0) + abs(f00)
    sat1 = abs(r1) <= _DATA_TOL * scale1
    checks.append(
        ConditionCheck(
            corner=(corner_x, 0.0),
            order=1,
            description="first-order corner condition on the data",
            residual=r1,
            scale=scale1,
            satisfied=sat1,
            eps_dependent=abs(r1 - resid1(0.0)) > 1e-14 * scale1,
        )
    )
    if order < 2:
        return checks

    g_tt = _need(dv, "gl_tt" if at_left else "gr_tt", 2)
    phi_x = _need(dv, "phi_x", 2)
    phi_xxxx = _need(dv, "phi_xxxx", 2)
    f_t = _need(dv, "f_t", 2)
    f_xx = _need(dv, "f_xx", 2)
    b_t = _need(dv, "b_t", 2)
    b_x = _need(dv, "b_x", 2)
    b_xx = _need(dv, "b_xx", 2)

    gtt0 = float(np.asarray(g_tt(0.0)))
    px0 = float(np.asarray(phi_x(corner_x)))
    p4_0 = float(np.asarray(phi_xxxx(corner_x)))
    ft0 = float(np.asarray(f_t(corner_x, 0.0)))
    fxx0 = float(np.asarray(f_xx(corner_x, 0.0)))
    bt0 = float(np.asarray(b_t(corner_x, 0.0)))
    bx0 = float(np.asarray(b_x(corner_x, 0.0)))
    bxx0 = float(np.asarray(b_xx(corner_x, 0.0)))

    # time and twice-space derivatives of L applied to the data extension
    lphi_t = gtt0 + bt0 * phi0 + b00 * gt0

    def lphi_xx(e):
        return -e * p4_0 + bxx0 * phi0 + 2.0 * bx0 * px0 + b00 * pxx0

    def resid2(e):
        return (ft0 - lphi_t) + (fxx0 - lphi_xx(e))

    r2 = resid2(eps)
    scale2 = (
        1.0
        + abs(ft0)
        + abs(fxx0)
        + abs(gtt0)
        + abs(bt0 * phi0)
        + abs(b00 * gt0)
        + abs(eps * p4_0)
        + abs(bxx0 * phi0)
        + abs(2.0 * bx0 * px0)
        + abs(b00 * pxx0)
    )
    checks.append(
        ConditionCheck(
            corner=(corner_x, 0.0),
            order=2,
            description="second-order corner condition on the data",
            residual=r2,
            scale=scale2,
            satisfied=abs(r2) <= _DATA_TOL * scale2,
            eps_dependent=abs(r2 - resid2(0.0)) > 1e-14 * scale2,
        )
    )
    return checks


def check_compatibility(spec: ProblemSpec, order: int = 2, eps: float = 1.0) -> CompatibilityReport:
    """Evaluate the corner conditions at (0,0) and (1,0) up to the given order.

    A condition counts as satisfied when |residual| <= 1e-10 * (1 + |terms|).
    Conditions whose residual changes with eps are flagged, since they can
    only hold with eps-dependent data.
    """
    if order not in (0, 1, 2):
        raise ConfigurationError(f"order must be 0, 1 or 2, got {order}")
    checks = []
    for corner_x in (0.0, 1.0):
        checks.extend(_corner_checks(spec, corner_x, order, eps))
    return CompatibilityReport(
        checks=tuple(checks),
        order=order,
        eps=eps,
        b_depends_on_x=spec.b.depends_on_x,
    )


# ---------------------------------------------------------------------------
# Built-in benchmark problems
# ---------------------------------------------------------------------------


def _poly_source(x, t):
    x = np.asarray(x, dtype=float)
    return 4.0 * x * (1.0 - x) * t + t * t


def _poly_source_t(x, t):
    x = np.asarray(x, dtype=float)
    return 4.0 * x * (1.0 - x) + 2.0 * t


def _poly_source_xx(x, t):
    return -8.0 * t + 0.0 * np.asarray(x, dtype=float)


def _zero1(u):
    return np.zeros(np.shape(u)) if np.ndim(u) else 0.0


def _zero2(x, t):
    return np.zeros(np.shape(x)) if np.ndim(x) else 0.0


def _example1() -> ProblemSpec:
    def phi(x):
        return (1.0 - np.asarray(x, dtype=float)) ** 2

    return ProblemSpec(
        b=ScalarField2D(lambda x, t: 1.0 + t + 0.0 * np.asarray(x, dtype=float), depends_on_x=False),
        f=ScalarField2D(_poly_source),
        initial=phi,
        boundary_left=_zero1,
        boundary_right=_zero1,
        T=1.0,
        disc=DiscontinuitySpec(Family.BOUNDARY_INITIAL_CORNER, 0.0, 1.0, 1.0),
        derivatives=DerivativeBundle(
            phi_x=lambda x: -2.0 * (1.0 - np.asarray(x, dtype=float)),
            phi_xx=lambda x: 2.0 + 0.0 * np.asarray(x, dtype=float),
            phi_xxxx=_zero1,
            gl_t=_zero1,
            gl_tt=_zero1,
            gr_t=_zero1,
            gr_tt=_zero1,
            f_t=_poly_source_t,
            f_xx=_poly_source_xx,
            b_t=lambda x, t: 1.0 + 0.0 * np.asarray(x, dtype=float),
            b_x=_zero2,
            b_xx=_zero2,
        ),
        name="example 1: corner jump, reaction varies in t",
    )


def _example2() -> ProblemSpec:
    def phi(x):
        return (1.0 - np.asarray(x, dtype=float)) ** 2

    return ProblemSpec(
        b=ScalarField2D(lambda x, t: 1.0 + 10.0 * np.asarray(x, dtype=float)),
        f=ScalarField2D(_poly_source),
        initial=phi,
        boundary_left=_zero1,
        boundary_right=_zero1,
        T=1.0,
        disc=DiscontinuitySpec(Family.BOUNDARY_INITIAL_CORNER, 0.0, 1.0, 1.0),
        derivatives=DerivativeBundle(
            phi_x=lambda x: -2.0 * (1.0 - np.asarray(x, dtype=float)),
            phi_xx=lambda x: 2.0 + 0.0 * np.asarray(x, dtype=float),
            phi_xxxx=_zero1,
            gl_t=_zero1,
            gl_tt=_zero1,
            gr_t=_zero1,
            gr_tt=_zero1,
            f_t=_poly_source_t,
            f_xx=_poly_source_xx,
            b_t=_zero2,
            b_x=lambda x, t: 10.0 + 0.0 * np.asarray(x, dtype=float),
            b_xx=_zero2,
        ),
        name="example 2: corner jump, reaction varies in x",
    )


def _example3() -> ProblemSpec:
    def below(x):
        return -1.0 + (2.0 * np.asarray(x, dtype=float) - 1.0) ** 2

    def above(x):
        return 1.0 - (2.0 * np.asarray(x, dtype=float) - 1.0) ** 2

    return ProblemSpec(
        b=ScalarField2D(lambda x, t: 1.0 + 10.0 * np.asarray(x, dtype=float) * t),
        f=ScalarField2D(_poly_source),
        initial=JumpInitial(below, above, 0.5),
        boundary_left=_zero1,
        boundary_right=_zero1,
        T=1.0,
        disc=DiscontinuitySpec(Family.INITIAL_INTERIOR, 0.5, 2.0, 1.0),
        derivatives=DerivativeBundle(
            phi_x=lambda x: np.where(
                np.asarray(x, dtype=float) <= 0.5,
                4.0 * (2.0 * np.asarray(x, dtype=float) - 1.0),
                -4.0 * (2.0 * np.asarray(x, dtype=float) - 1.0),
            ),
            phi_xx=lambda x: np.where(np.asarray(x, dtype=float) <= 0.5, 8.0, -8.0),
            phi_xxxx=_zero1,
            gl_t=_zero1,
            gl_tt=_zero1,
            gr_t=_zero1,
            gr_tt=_zero1,
            f_t=_poly_source_t,
            f_xx=_poly_source_xx,
            b_t=lambda x, t: 10.0 * np.asarray(x, dtype=float),
            b_x=lambda x, t: 10.0 * t + 0.0 * np.asarray(x, dtype=float),
            b_xx=_zero2,
        ),
        name="example 3: interior initial jump",
    )


def _example4() -> ProblemSpec:
    return ProblemSpec(
        b=ScalarField2D(lambda x, t: 1.0 + np.asarray(x, dtype=float)),
        f=ScalarField2D(_poly_source),
        initial=_zero1,
        boundary_left=StepBoundary(_zero1, lambda t: 0.5 + 0.0 * np.asarray(t, dtype=float), 0.25),
        boundary_right=_zero1,
        T=1.0,
        disc=DiscontinuitySpec(Family.BOUNDARY_IN_TIME, 0.25, 0.5, 1.0),
        derivatives=DerivativeBundle(
            phi_x=_zero1,
            phi_xx=_zero1,
            phi_xxxx=_zero1,
            gl_t=_zero1,
            gl_tt=_zero1,
            gr_t=_zero1,
            gr_tt=_zero1,
            f_t=_poly_source_t,
            f_xx=_poly_source_xx,
            b_t=_zero2,
            b_x=lambda x, t: 1.0 + 0.0 * np.asarray(x, dtype=float),
            b_xx=_zero2,
        ),
        name="example 4: left wall jump in time",
    )


def builtin_examples() -> tuple[ProblemSpec, ProblemSpec, ProblemSpec, ProblemSpec]:
    """The four built-in benchmark problems, in index order 1..4."""
    return (_example1(), _example2(), _example3(), _example4())


def builtin_example(index: int) -> ProblemSpec:
    """One built-in benchmark problem, index in 1..4."""
    if index not in (1, 2, 3, 4):
        raise ConfigurationError(f"built-in example index must be 1..4, got {index}")
    return builtin_examples()[index - 1]
