"""Closed-form singular functions carrying a data discontinuity.

The central object is the similarity solution

    K(x, t) = exp(-b0*t) * erf(x / (2*sqrt(eps*t))),

which solves the constant-coefficient reaction-diffusion equation
``K_t - eps*K_xx + b0*K = 0`` on a quarter plane, taking the value
``sign(x)`` at t = 0 and 0 on the lateral boundary x = 0.  It is the
exact carrier of a unit jump between initial and boundary data, and is
what the transformed problems subtract from the solution.  The module
also provides the time-power weightings ``t**n * K`` and
``t**n * (1 - K)`` and the closed-form derivatives used by the
property tests.

All functions are pure and vectorized over numpy arrays; scalar inputs
return Python floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

_SQRT_PI = math.sqrt(math.pi)
_INV_SQRT_PI = 5.6418958354775628695e-1

# erf saturates to +-1 beyond this point: 1 - erf(6) < 2.2e-17, below
# double-precision resolution around 1.
ERF_SATURATION = 6.0

# Rational minimax coefficients for the error function in three regimes
# (Cody-style Chebyshev-rational fits; relative error below 1e-16).
_ERF_SMALL_CUT = 0.46875
_ERF_A = (3.16112374387056560e00, 1.13864154151050156e02, 3.77485237685302021e02)
_ERF_A3 = 3.20937758913846947e03
_ERF_A4 = 1.85777706184603153e-1
_ERF_B = (2.36012909523441209e01, 2.44024637934444173e02, 1.28261652607737228e03)
_ERF_B3 = 2.84423683343917062e03
_ERFC_C = (
    5.64188496988670089e-1,
    8.88314979438837594e00,
    6.61191906371416295e01,
    2.98635138197400131e02,
    8.81952221241769090e02,
    1.71204761263407058e03,
    2.05107837782607147e03,
)
_ERFC_C7 = 1.23033935479799725e03
_ERFC_C8 = 2.15311535474403846e-8
_ERFC_D = (
    1.57449261107098347e01,
    1.17693950891312499e02,
    5.37181101862009858e02,
    1.62138957456669019e03,
    3.29079923573345963e03,
    4.36261909014324716e03,
    3.43936767414372164e03,
)
_ERFC_D7 = 1.23033935480374942e03
_ERFC_P = (
    3.05326634961232344e-1,
    3.60344899949804439e-1,
    1.25781726111229246e-1,
    1.60837851487422766e-2,
)
_ERFC_P4 = 6.58749161529837803e-4
_ERFC_P5 = 1.63153871373020978e-2
_ERFC_Q = (
    2.56852019228982242e00,
    1.87295284992346047e00,
    5.27905102951428412e-1,
    6.05183413124413191e-2,
)
_ERFC_Q4 = 2.33520497626869185e-3


def _exp_neg_sq(y: np.ndarray) -> np.ndarray:
    """exp(-y*y) with the argument split to avoid rounding in y*y."""
    hi = np.floor(y * 16.0) / 16.0
    return np.exp(-hi * hi) * np.exp(-(y - hi) * (y + hi))


def _erf_small(a: np.ndarray) -> np.ndarray:
    """erf on 0 <= a <= 0.46875."""
    z = a * a
    num = _ERF_A4 * z
    den = z
    for ai, bi in zip(_ERF_A, _ERF_B):
        num = (num + ai) * z
        den = (den + bi) * z
    return a * (num + _ERF_A3) / (den + _ERF_B3)


def _erfc_mid(y: np.ndarray) -> np.ndarray:
    """erfc on 0.46875 < y <= 4."""
    num = _ERFC_C8 * y
    den = y
    for ci, di in zip(_ERFC_C, _ERFC_D):
        num = (num + ci) * y
        den = (den + di) * y
    return _exp_neg_sq(y) * (num + _ERFC_C7) / (den + _ERFC_D7)


def _erfc_far(y: np.ndarray) -> np.ndarray:
    """erfc on y > 4."""
    z = 1.0 / (y * y)
    num = _ERFC_P5 * z
    den = z
    for pi, qi in zip(_ERFC_P, _ERFC_Q):
        num = (num + pi) * z
        den = (den + qi) * z
    r = z * (num + _ERFC_P4) / (den + _ERFC_Q4)
    return _exp_neg_sq(y) * (_INV_SQRT_PI - r) / y


def erf(z):
    """Error function, accurate to <= 1e-14 absolute over the real line.

    Single-pass rational minimax evaluation; odd by construction
    (erf(-z) is computed as -erf(z), bitwise) and saturated to +-1 for
    |z| >= 6.  Raises DomainError on non-finite input.
    """
    arr = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("erf requires finite input")
    a = np.abs(np.atleast_1d(arr))
    core = np.ones_like(a)
    small = a <= _ERF_SMALL_CUT
    if np.any(small):
        core[small] = _erf_small(a[small])
    mid = (a > _ERF_SMALL_CUT) & (a <= 4.0)
    if np.any(mid):
        core[mid] = 1.0 - _erfc_mid(a[mid])
    far = (a > 4.0) & (a < ERF_SATURATION)
    if np.any(far):
        core[far] = 1.0 - _erfc_far(a[far])
    out = np.where(np.atleast_1d(arr) < 0.0, -core, core)
    if arr.ndim == 0:
        return float(out[0])
    return out.reshape(arr.shape)


def heaviside(x):
    """Unit step, closed at the origin: 0 for x < 0 and 1 for x >= 0."""
    arr = np.asarray(x, dtype=float)
    out = np.where(arr < 0.0, 0.0, 1.0)
    if arr.ndim == 0:
        return float(out)
    return out


@dataclass(frozen=True)
class KernelParams:
    """Parameters of the singular kernel.

    eps: diffusion coefficient of the perturbed operator, > 0.
    b0:  reaction coefficient frozen at the discontinuity anchor, >= 0.
    T:   final time of the enclosing problem (used by callers for bounds).
    """

    eps: float
    b0: float
    T: float = 1.0

    def __post_init__(self):
        if not (self.eps > 0.0):
            raise DomainError(f"eps must be positive, got {self.eps}")
        if not (self.b0 >= 0.0):
            raise DomainError(f"b0 must be nonnegative, got {self.b0}")
        if not (self.T > 0.0):
            raise DomainError(f"T must be positive, got {self.T}")


def singular_kernel(x, t, p: KernelParams):
    """The jump-carrying similarity solution.

    For t > 0 returns exp(-b0*t) * erf(x / (2*sqrt(eps*t))).  At t = 0
    returns the pointwise limit sign(x), which matches the initial trace
    on either side of the jump and is 0 at x = 0.
    """
    xa = np.asarray(x, dtype=float)
    ta = np.asarray(t, dtype=float)
    if np.any(ta < 0.0):
        raise DomainError("singular_kernel requires t >= 0")
    xb, tb = np.broadcast_arrays(xa, ta)
    out = np.empty(xb.shape, dtype=float)
    at_zero = tb == 0.0
    if np.any(at_zero):
        out[at_zero] = np.sign(xb[at_zero])
    pos = ~at_zero
    if np.any(pos):
        tp = tb[pos]
        zarg = xb[pos] / (2.0 * np.sqrt(p.eps * tp))
        out[pos] = np.exp(-p.b0 * tp) * erf(zarg)
    if xa.ndim == 0 and ta.ndim == 0:
        return float(out)
    return out


def singular_kernel_derivatives(x, t, p: KernelParams):
    """Closed-form (d/dx, d/dt, d2/dx2) of the kernel for t > 0.

    The time derivative is produced through the defining equation
    K_t = -b0*K + eps*K_xx, so the residual of that equation is zero
    by construction.
    """
    xa = np.asarray(x, dtype=float)
    ta = np.asarray(t, dtype=float)
    if np.any(ta <= 0.0):
        raise DomainError("singular_kernel_derivatives requires t > 0")
    xb, tb = np.broadcast_arrays(xa, ta)
    damp = np.exp(-p.b0 * tb)
    k_x = damp / np.sqrt(math.pi * p.eps * tb) * np.exp(-(xb * xb) / (4.0 * p.eps * tb))
    k_xx = -xb / (2.0 * p.eps * tb) * k_x
    k = singular_kernel(xb, tb, p)
    k_t = -p.b0 * k + p.eps * k_xx
    if xa.ndim == 0 and ta.ndim == 0:
        return float(k_x), float(k_t), float(k_xx)
    return k_x, k_t, k_xx


def singular_kernel_tn(x, t, n: int, p: KernelParams):
    """t**n times the kernel, for integer n >= 0."""
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a nonnegative integer, got {n}")
    ta = np.asarray(t, dtype=float)
    return np.asarray(ta, dtype=float) ** n * singular_kernel(x, t, p)


def complement_kernel_tn(x, t, n: int, p: KernelParams):
    """t**n times (1 - kernel); vanishes at t = 0 for x > 0."""
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a nonnegative integer, got {n}")
    ta = np.asarray(t, dtype=float)
    return np.asarray(ta, dtype=float) ** n * (1.0 - singular_kernel(x, t, p))


def damped_complement_kernel(x, t, p: KernelParams):
    """exp(-b0*t) - kernel, the jump carrier for a wall value switching on.

    Unlike 1 - kernel, this combination solves the constant-coefficient
    equation exactly (both terms do), so subtracting it leaves a clean
    right-hand side.  It equals 1 at (x=0, t=0+), vanishes at t = 0 for
    x > 0, and decays in time.
    """
    ta = np.asarray(t, dtype=float)
    if np.any(ta < 0.0):
        raise DomainError("damped_complement_kernel requires t >= 0")
    return np.exp(-p.b0 * ta) - singular_kernel(x, t, p)


def singular_kernel_t2_dtt(x, t, p: KernelParams):
    """Second time derivative of t**2 * kernel, in closed form.

    With g = t^2 exp(-b0 t) and z = x / (2 sqrt(eps t)), this is
    g''*erf(z) + [2 g' z' + g z''] erf'(z) + g z'^2 erf''(z), which
    collapses to an erf term plus a Gaussian term.  Bounded but not
    continuous up to the corner; only meaningful for x > 0 and t > 0.
    """
    xa = np.asarray(x, dtype=float)
    ta = np.asarray(t, dtype=float)
    if np.any(xa <= 0.0):
        raise DomainError("singular_kernel_t2_dtt requires x > 0")
    if np.any(ta <= 0.0):
        raise DomainError("singular_kernel_t2_dtt requires t > 0")
    xb, tb = np.broadcast_arrays(xa, ta)
    damp = np.exp(-p.b0 * tb)
    bt = p.b0 * tb
    z = xb / (2.0 * np.sqrt(p.eps * tb))
    gauss = (
        damp
        * (2.0 / _SQRT_PI)
        * np.exp(-z * z)
        * z
        * (0.75 - 0.5 * z * z - (2.0 - bt))
    )
    smooth = erf(z) * (2.0 - 4.0 * bt + bt * bt) * damp
    out = gauss + smooth
    if xa.ndim == 0 and ta.ndim == 0:
        return float(out)
    return out
