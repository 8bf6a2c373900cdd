import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate

from salpeter import kernels as kn
from salpeter.errors import DomainError
from salpeter.kernels import KernelContext

radius = st.floats(0.01, 20.0)
mass = st.floats(0.01, 10.0)

# m int dy K1(m y) P_l(...) evaluated with mpmath at 30 digits
GCAL_REF = [
    (1, 1.0, 0.7, 1.3, 0.33980145891244242),
    (3, 2.0, 1.0, 1.1, 1.1348548759863907),
    (2, 0.5, 0.2, 3.0, 0.00024518648217935294),
]


def green_fourier(m, d):
    """G(m, d) from its momentum-space integral, with scipy's oscillatory (QAWF) rule.

    1/(sqrt(p^2+m^2)-m) = (sqrt(p^2+m^2)+m)/p^2; the m/p and p/p pieces have
    elementary sine transforms and the bounded rest goes to QAWF.
    """
    rest = integrate.quad(lambda p: (math.sqrt(p * p + m * m) - p) / p if p > 0 else m,
                          0, math.inf, weight="sin", wvar=d)[0]
    return (m * math.pi / 2 + 1 / d + rest) / (2 * math.pi ** 2 * d)


@pytest.mark.parametrize("m,d", [(1.0, 0.3), (1.0, 2.0), (3.0, 0.7), (0.2, 5.0), (10.0, 0.05)])
def test_green_function_fourier_oracle(m, d):
    assert KernelContext(m).green(d) == pytest.approx(green_fourier(m, d), rel=1e-6)


@settings(max_examples=50)
@given(mass, st.floats(1e-3, 30.0))
def test_green_majorization_chain(m, d):
    ctx = KernelContext(m)
    g, g1, g2 = ctx.green(d), ctx.green_g1(d), ctx.green_g2(d)
    assert 0 < g <= g1 * (1 + 1e-13)
    assert g1 <= g2 * (1 + 1e-13)


def test_green_massless_limit():
    ctx = KernelContext(0.0)
    assert ctx.green_g1(0.5) == pytest.approx(1 / (2 * math.pi ** 2 * 0.25))
    assert ctx.green_g2(0.5) == ctx.green_g1(0.5)
    with pytest.raises(DomainError):
        ctx.green(0.5)
    # small m recovers the massless value
    assert KernelContext(1e-6).green(0.5) == pytest.approx(ctx.green_g1(0.5), rel=1e-5)


@pytest.mark.parametrize("l,m,r,rp,ref", GCAL_REF)
def test_gcal_reference(l, m, r, rp, ref):
    assert KernelContext(m, 1, l).kernel_gcal(r, rp) == pytest.approx(ref, rel=1e-11)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), mass, radius, radius)
def test_gcal_against_scipy_quad(l, m, r, rp):
    if abs(r - rp) < 1e-6 * r:
        return
    x = lambda y: (r * r + rp * rp - y * y) / (2 * r * rp)  # noqa: E731
    from scipy.special import eval_legendre, k1
    ref = integrate.quad(lambda y: m * k1(m * y) * eval_legendre(l, x(y)), abs(r - rp), r + rp,
                         epsabs=1e-13, epsrel=1e-11, limit=400)[0]
    got = KernelContext(m, 1, l).kernel_gcal(r, rp)
    assert got == pytest.approx(ref, rel=1e-7, abs=1e-11)


@settings(max_examples=50)
@given(st.integers(0, 8), st.floats(0.0, 5.0), st.sampled_from([1, 2]), radius, radius)
def test_kernel_symmetry(l, m, alpha, r, rp):
    ctx = KernelContext(m, alpha, l)
    assert ctx.kernel_t(r, rp) == pytest.approx(ctx.kernel_t(rp, r), rel=1e-12)
    assert ctx.partial_wave_a(r, rp) == pytest.approx(ctx.partial_wave_a(rp, r), rel=1e-12)


@settings(max_examples=50)
@given(st.integers(0, 8), st.sampled_from([1, 2]), radius, radius)
def test_massless_t_equals_a(l, alpha, r, rp):
    ctx = KernelContext(0.0, alpha, l)
    assert ctx.kernel_t(r, rp) == pytest.approx(ctx.partial_wave_a(r, rp), rel=1e-13)


@settings(max_examples=50)
@given(mass, radius, radius)
def test_s_wave_kernel_majorized(m, r, rp):
    ctx = KernelContext(m, 1, 0)
    assert ctx.kernel_t(r, rp) <= ctx.partial_wave_a(r, rp) * (1 + 1e-12)


@settings(max_examples=40)
@given(st.integers(0, 6), mass, radius, radius, st.floats(0.1, 10.0))
def test_kernel_scale_covariance(l, m, r, rp, lam):
    # T_l(lam r, lam r'; m / lam) = T_l(r, r'; m)
    a = KernelContext(m, 1, l).kernel_t(r, rp)
    b = KernelContext(m / lam, 1, l).kernel_t(lam * r, lam * rp)
    assert b == pytest.approx(a, rel=1e-9, abs=1e-14)


@settings(max_examples=50)
@given(st.integers(0, 12), st.floats(0.0, 3.0), radius, radius)
def test_hypergeometric_coefficient_agrees(nu, m, x, y):
    ctx = KernelContext(m, 1, nu)
    a = ctx.coefficient_a(x, y)
    b = ctx.coefficient_a_hypergeometric(x, y)
    if math.isinf(a):
        assert math.isinf(b)
    else:
        assert b == pytest.approx(a, rel=1e-10)


def test_partial_wave_normalisation():
    ctx = KernelContext(1.5, 2, 3)
    x, y = 0.4, 1.7
    assert ctx.partial_wave_a(x, y) == pytest.approx(
        4 * math.pi / 7 * x * y * ctx.coefficient_a(x, y) / 2, rel=1e-13)


def test_partial_waves_resum_green_majorant():
    # sum_nu a_nu P_nu(cos theta) = G2(m, |x - y|)
    ctx0 = KernelContext(0.8)
    x, y, c = 1.0, 2.5, 0.3
    d = math.sqrt(x * x + y * y - 2 * x * y * c)
    from scipy.special import eval_legendre
    total = sum(KernelContext(0.8, 1, nu).coefficient_a(x, y) * eval_legendre(nu, c) for nu in range(80))
    assert total == pytest.approx(ctx0.green_g2(d), rel=1e-10)


def test_vectorised_shapes():
    ctx = KernelContext(1.0, 1, 2)
    r = np.linspace(0.1, 3, 7)
    out = kn.kernel_t(ctx, r[:, None], r[None, :])
    assert out.shape == (7, 7)
    assert np.isinf(out[3, 3])
    assert isinstance(kn.kernel_gcal(ctx, 1.0, 2.0), float)


@pytest.mark.parametrize("kwargs", [dict(mass=-1.0), dict(alpha=3), dict(ell=-1), dict(ell=1.5)])
def test_context_validation(kwargs):
    with pytest.raises(DomainError):
        KernelContext(**kwargs)


def test_radii_must_be_positive():
    with pytest.raises(DomainError):
        KernelContext(1.0).kernel_t(0.0, 1.0)
