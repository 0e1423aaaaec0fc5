import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singsub import (
    DomainError,
    KernelParams,
    complement_kernel_tn,
    erf,
    heaviside,
    singular_kernel,
    singular_kernel_derivatives,
    singular_kernel_t2_dtt,
    singular_kernel_tn,
)
from singsub.specialfn import damped_complement_kernel

mpmath.mp.dps = 40


def erf_series_mpf(z) -> mpmath.mpf:
    """Maclaurin series of erf summed in 40-digit arithmetic."""
    za = abs(mpmath.mpf(z))
    term = za
    acc = za
    n = 1
    while True:
        term *= -(za * za) / n
        contrib = term / (2 * n + 1)
        acc += contrib
        if abs(contrib) < mpmath.mpf("1e-36") * (abs(acc) + 1):
            break
        n += 1
        if n > 500:
            break
    val = acc * 2 / mpmath.sqrt(mpmath.pi)
    return val if z >= 0 else -val


def erf_series_oracle(z: float) -> float:
    return float(erf_series_mpf(float(z)))


class TestErf:
    def test_known_values(self):
        assert erf(0.0) == 0.0
        assert abs(erf(1.0) - 0.8427007929497149) < 1e-14
        assert abs(erf(-1.0) + 0.8427007929497149) < 1e-14
        assert abs(erf(0.4) - 0.42839235504666845) < 1e-14

    def test_against_series_oracle(self):
        rng = np.random.default_rng(7)
        zs = np.concatenate(
            [rng.uniform(-6, 6, 1500), np.linspace(-6, 6, 481), [1.999999, 2.0, 2.000001]]
        )
        ours = erf(zs)
        worst = max(abs(float(o) - erf_series_oracle(z)) for z, o in zip(zs, ours))
        assert worst <= 1e-14

    def test_saturation(self):
        assert erf(6.0) == 1.0
        assert erf(-6.0) == -1.0
        assert erf(1e280) == 1.0

    def test_oddness_bitwise_bulk(self):
        rng = np.random.default_rng(11)
        zs = rng.uniform(-12.0, 12.0, 10_000)
        assert np.array_equal(erf(-zs), -erf(zs))

    @given(st.floats(min_value=-20, max_value=20, allow_nan=False))
    @settings(max_examples=200, deadline=None)
    def test_oddness_bitwise(self, z):
        assert erf(-z) == -erf(z)

    def test_monotone_on_grid(self):
        zs = np.linspace(-8.0, 8.0, 4001)
        vals = erf(zs)
        assert np.all(np.diff(vals) >= 0.0)

    def test_nonfinite_rejected(self):
        with pytest.raises(DomainError):
            erf(math.nan)
        with pytest.raises(DomainError):
            erf(np.array([0.0, math.inf]))

    def test_vector_shape_and_scalar_type(self):
        out = erf(np.array([[0.0, 1.0], [2.0, 3.0]]))
        assert out.shape == (2, 2)
        assert isinstance(erf(0.3), float)


class TestHeaviside:
    def test_closed_at_zero(self):
        assert heaviside(0.0) == 1.0
        assert heaviside(-1e-300) == 0.0
        assert heaviside(0.25) == 1.0

    def test_vectorized(self):
        out = heaviside(np.array([-1.0, 0.0, 1.0]))
        assert list(out) == [0.0, 1.0, 1.0]


class TestKernel:
    def test_params_validation(self):
        with pytest.raises(DomainError):
            KernelParams(eps=0.0, b0=1.0)
        with pytest.raises(DomainError):
            KernelParams(eps=1.0, b0=-1.0)
        with pytest.raises(DomainError):
            KernelParams(eps=1.0, b0=0.0, T=0.0)

    def test_zero_at_wall(self):
        p = KernelParams(eps=0.5, b0=1.0)
        assert singular_kernel(0.0, 0.5, p) == 0.0

    def test_initial_trace(self):
        p = KernelParams(eps=0.5, b0=1.0)
        assert singular_kernel(0.3, 0.0, p) == 1.0
        assert singular_kernel(-0.3, 0.0, p) == -1.0
        assert singular_kernel(0.0, 0.0, p) == 0.0

    def test_value_composes_erf(self):
        p = KernelParams(eps=2.0**-4, b0=1.0)
        # argument 0.1 / (2*sqrt(0.0625*0.25)) = 0.4
        want = math.exp(-0.25) * 0.42839235504666845
        assert abs(singular_kernel(0.1, 0.25, p) - want) < 1e-14

    def test_negative_time_rejected(self):
        p = KernelParams(eps=1.0, b0=0.0)
        with pytest.raises(DomainError):
            singular_kernel(0.1, -0.1, p)

    def test_bounded_by_damping(self):
        rng = np.random.default_rng(3)
        for _ in range(300):
            eps = 10.0 ** rng.uniform(-9, 0)
            b0 = rng.uniform(0.0, 3.0)
            p = KernelParams(eps=eps, b0=b0)
            x = rng.uniform(-2, 2)
            t = rng.uniform(0.0, 1.0)
            assert abs(singular_kernel(x, t, p)) <= math.exp(-b0 * t) + 1e-15


class TestKernelDerivatives:
    def test_symmetry_point(self):
        p = KernelParams(eps=1.0, b0=0.0)
        kx, kt, kxx = singular_kernel_derivatives(0.0, 1.0, p)
        assert abs(kx - 1.0 / math.sqrt(math.pi)) < 1e-14
        assert kxx == 0.0
        assert kt == 0.0

    def test_pde_residual_random(self):
        rng = np.random.default_rng(5)
        for _ in range(1000):
            eps = 2.0 ** rng.uniform(-20, 0)
            b0 = rng.uniform(0.0, 2.0)
            p = KernelParams(eps=eps, b0=b0)
            x = rng.uniform(-1, 1)
            t = rng.uniform(1e-6, 1.0)
            kx, kt, kxx = singular_kernel_derivatives(x, t, p)
            k = singular_kernel(x, t, p)
            assert abs(kt - eps * kxx + b0 * k) <= 1e-12

    def test_x_derivative_against_finite_difference(self):
        # the kernel is saturated at this point, so the difference quotient
        # must be formed in high precision to survive the cancellation
        p = KernelParams(eps=2.0**-6, b0=1.0)
        x, t, h = mpmath.mpf(0.5), mpmath.mpf(0.25), mpmath.mpf(1e-6)
        damp = mpmath.exp(-t)

        def kernel_mp(xx):
            return damp * erf_series_mpf(xx / (2 * mpmath.sqrt(p.eps * t)))

        approx = float((kernel_mp(x + h) - kernel_mp(x - h)) / (2 * h))
        kx, _, _ = singular_kernel_derivatives(0.5, 0.25, p)
        assert abs(kx - approx) <= 1e-6 * abs(kx)

    def test_requires_positive_time(self):
        p = KernelParams(eps=1.0, b0=0.0)
        with pytest.raises(DomainError):
            singular_kernel_derivatives(0.1, 0.0, p)


class TestWeightedKernels:
    def test_time_factor(self):
        p = KernelParams(eps=2.0**-4, b0=1.0)
        assert singular_kernel_tn(0.2, 0.0, 1, p) == 0.0
        assert complement_kernel_tn(0.2, 0.0, 1, p) == 0.0

    def test_complement_vanishes_initially(self):
        p = KernelParams(eps=2.0**-4, b0=1.0)
        assert complement_kernel_tn(0.7, 0.0, 0, p) == 0.0
        assert damped_complement_kernel(0.7, 0.0, p) == 0.0

    def test_composition(self):
        p = KernelParams(eps=2.0**-4, b0=1.0)
        want = 0.25 * singular_kernel(0.1, 0.5, p)
        assert abs(singular_kernel_tn(0.1, 0.5, 2, p) - want) < 1e-15

    def test_negative_order_rejected(self):
        p = KernelParams(eps=1.0, b0=0.0)
        with pytest.raises(DomainError):
            singular_kernel_tn(0.1, 0.5, -1, p)

    def test_recurrence_via_finite_differences(self):
        # for constant-in-time reaction, applying the operator to t^n * K
        # must return n * t^(n-1) * K
        rng = np.random.default_rng(13)
        for _ in range(60):
            eps = 2.0 ** rng.uniform(-6, 0)
            b0 = rng.uniform(0.0, 2.0)
            p = KernelParams(eps=eps, b0=b0)
            n = int(rng.integers(1, 4))
            x = rng.uniform(0.05, 0.95)
            t = rng.uniform(0.2, 0.9)
            ht = 1e-6 * t
            hx = 1e-5
            s_t = (
                singular_kernel_tn(x, t + ht, n, p) - singular_kernel_tn(x, t - ht, n, p)
            ) / (2 * ht)
            s_xx = (
                singular_kernel_tn(x + hx, t, n, p)
                - 2 * singular_kernel_tn(x, t, n, p)
                + singular_kernel_tn(x - hx, t, n, p)
            ) / (hx * hx)
            lhs = s_t - eps * s_xx + b0 * singular_kernel_tn(x, t, n, p)
            rhs = n * singular_kernel_tn(x, t, n - 1, p)
            assert abs(lhs - rhs) <= 1e-5 * (abs(rhs) + 1e-3)

    def test_damped_complement_solves_pde(self):
        # exp(-b0 t) and the kernel both solve the constant-coefficient
        # equation, so their difference must too
        p = KernelParams(eps=2.0**-8, b0=1.5)
        x, t = 0.3, 0.4
        ht, hx = 1e-6, 1e-5
        c_t = (
            damped_complement_kernel(x, t + ht, p) - damped_complement_kernel(x, t - ht, p)
        ) / (2 * ht)
        c_xx = (
            damped_complement_kernel(x + hx, t, p)
            - 2 * damped_complement_kernel(x, t, p)
            + damped_complement_kernel(x - hx, t, p)
        ) / (hx * hx)
        resid = c_t - p.eps * c_xx + p.b0 * damped_complement_kernel(x, t, p)
        assert abs(resid) < 1e-6


class TestSecondTimeDerivative:
    def test_closed_form_value(self):
        # direct arithmetic: z = 1/2, gaussian weight z*(3/4 - z^2/2 - 2),
        # plus 2*erf(z); frozen from the 40-digit difference quotient
        p = KernelParams(eps=1.0, b0=0.0)
        z = 0.5
        want = (
            2.0 / math.sqrt(math.pi) * math.exp(-0.25) * z * (0.75 - 0.125 - 2.0)
            + 2.0 * erf(0.5)
        )
        got = singular_kernel_t2_dtt(1.0, 1.0, p)
        assert abs(got - want) < 1e-14
        assert abs(got - 0.43683673260797478) < 1e-13

    def test_far_field_limit(self):
        p = KernelParams(eps=2.0**-20, b0=0.0)
        assert abs(singular_kernel_t2_dtt(0.9, 0.5, p) - 2.0) < 1e-12

    def test_against_finite_difference(self):
        rng = np.random.default_rng(17)
        for _ in range(50):
            eps = 2.0 ** rng.uniform(-8, 0)
            b0 = rng.uniform(0.0, 1.0)
            p = KernelParams(eps=eps, b0=b0)
            x = rng.uniform(0.2, 1.0)
            t = rng.uniform(0.2, 1.0)
            h = 1e-3 * t
            approx = (
                singular_kernel_tn(x, t + h, 2, p)
                - 2 * singular_kernel_tn(x, t, 2, p)
                + singular_kernel_tn(x, t - h, 2, p)
            ) / (h * h)
            exact = singular_kernel_t2_dtt(x, t, p)
            assert abs(exact - approx) <= 1e-4 * (abs(exact) + 1e-6)

    def test_bounded_on_log_grid(self):
        xs = np.logspace(-6, 0, 200)
        ts = np.logspace(-6, 0, 200)
        for eps in (1.0, 2.0**-10, 2.0**-20):
            for b0 in (0.0, 1.0):
                p = KernelParams(eps=eps, b0=b0)
                vals = singular_kernel_t2_dtt(xs[None, :], ts[:, None], p)
                assert np.all(np.isfinite(vals))
                assert np.max(np.abs(vals)) <= 10.0

    def test_domain_errors(self):
        p = KernelParams(eps=1.0, b0=0.0)
        with pytest.raises(DomainError):
            singular_kernel_t2_dtt(0.0, 1.0, p)
        with pytest.raises(DomainError):
            singular_kernel_t2_dtt(1.0, 0.0, p)
