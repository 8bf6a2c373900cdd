"""Acceptance checks against published values and required invariants.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints one
PASS/FAIL line per criterion.
"""

import math
import warnings

import numpy as np
import pytest
from scipy import integrate

from salpeter import bounds, reference, solver
from salpeter import potentials as pot
from salpeter.kernels import KernelContext
from salpeter.numerics.special import airy_negative_zeros, riemann_zeta


def crit(number, title):
    return pytest.mark.criterion(number, title)


C1 = crit(1, "c(l) table, 28 values within 0.002")
C2 = crit(2, "s-wave critical couplings against beta (trace, Daubechies, exact)")
C3 = crit(3, "l-wave critical couplings at m = 0 (p-condition, max-condition, exact)")
C4 = crit(4, "largest angular momentum L+ and exact L")
C5 = crit(5, "s-wave existence limits 4.000 and 3.685 within 0.2%")
C6 = crit(6, "oscillator counts below lambda_n: bound 1, 8, 21; exact 0, 1, 2")
C7 = crit(7, "C(nu, 2) identity to 1e-6, B(5,2,3) <= 2.172, zeta value")
C8 = crit(8, "square-well crossover ratio 0.4859 within 1%")
C9 = crit(9, "nonrelativistic asymptotes of beta g_c at beta = 50 within 2%")
C10 = crit(10, "kernel, validity, homogeneity and replay properties")


# -- 1 -----------------------------------------------------------------------

@C1
@pytest.mark.parametrize("ell", sorted(reference.C_ELL))
def test_c_ell_table(ell):
    assert abs(bounds.const_c_ell(ell) - reference.C_ELL[ell]) <= 0.002


# -- 2 -----------------------------------------------------------------------

S_WAVE = [(form, method, beta, ref)
          for form, cols in reference.CRITICAL_S_WAVE.items()
          for method, refs in cols.items()
          for beta, ref in zip(reference.CRITICAL_S_WAVE_BETAS, refs)]


def _s_wave_value(form, method, beta):
    if method == "trace":
        return bounds.critical_trace(form, 0, float(beta), 2)
    if method == "daubechies":
        return bounds.critical_daubechies(form, float(beta), 2)
    return solver.critical_coupling_exact(form, 0, float(beta), 2).g_c_exact


@C2
@pytest.mark.parametrize("form,method,beta,ref", S_WAVE)
def test_s_wave_critical(form, method, beta, ref):
    tol = {"trace": 0.005, "daubechies": 0.005, "exact": 0.01}[method]
    assert _s_wave_value(form, method, beta) == pytest.approx(ref, rel=tol)


# -- 3 -----------------------------------------------------------------------

L_WAVE = [(form, method, ell, ref)
          for form, cols in reference.CRITICAL_L_WAVE.items()
          for method, refs in cols.items()
          for ell, ref in zip(reference.CRITICAL_L_WAVE_ELLS, refs)]


@C3
@pytest.mark.parametrize("form,method,ell,ref", L_WAVE)
def test_l_wave_critical(form, method, ell, ref):
    V = pot.from_family(form, 1.0)
    if method == "existence-p":
        got, tol = bounds.existence_critical_p(V, ell, 2).g_crit, 0.01
    elif method == "existence-max":
        got, tol = bounds.existence_critical_max(V, ell, 2).g_crit, 0.005
    else:
        got, tol = solver.critical_coupling_exact(form, ell, 0.0, 2).g_c_exact, 0.01
    assert got == pytest.approx(ref, rel=tol)


# -- 4 -----------------------------------------------------------------------

@C4
@pytest.mark.parametrize("form", ["exp", "pt"])
@pytest.mark.parametrize("i", range(len(reference.L_MAX_G)))
def test_l_max(form, i):
    g = reference.L_MAX_G[i]
    assert bounds.l_plus(pot.from_family(form, g), 2).l_plus == reference.L_MAX[form]["bound"][i]
    assert solver.l_exact(form, g, 0.0, 2) == reference.L_MAX[form]["exact"][i]


# -- 5 -----------------------------------------------------------------------

@C5
@pytest.mark.parametrize("form", ["exp", "pt"])
def test_existence_s_wave(form):
    got = bounds.existence_critical_p(pot.from_family(form, 1.0), 0, 2).g_crit
    assert got == pytest.approx(reference.EXISTENCE_S_WAVE[form], rel=reference.EXISTENCE_S_WAVE_TOL)


# -- 6 -----------------------------------------------------------------------

@C6
def test_oscillator_counts():
    osc = pot.harmonic_oscillator(1.0)
    lams = airy_negative_zeros(3)
    implied = [bounds.bound_below_energy(osc, 0, 0.0, 1, lam).implied_count for lam in lams]
    exact = [solver.count_states_below(osc, 0, 0.0, 1, lam * (1 - 1e-9)) for lam in lams]
    assert implied == list(reference.OSCILLATOR_IMPLIED)
    assert exact == list(reference.OSCILLATOR_EXACT)


# -- 7 -----------------------------------------------------------------------

@C7
def test_c_nu_2_identity():
    worst = max(abs(bounds.const_c_nu_q(nu, 2.0, 1) * math.sqrt(2 * nu + 1) - 1.0) for nu in range(101))
    assert worst <= 1e-6


@C7
def test_b_523():
    assert bounds.const_b(5, 2.0, 3.0, 1).value <= reference.B_523_BOUND


@C7
def test_zeta_formula():
    assert (1 - 2 ** (-4 / 3)) * riemann_zeta(4 / 3) == pytest.approx(reference.B_523_BOUND, abs=5e-3)


# -- 8 -----------------------------------------------------------------------

@C8
def test_square_well_crossover():
    x = bounds.square_well_crossover()
    assert x == pytest.approx(reference.SQUARE_WELL_CROSSOVER, rel=0.01)
    # on either side of the crossover the other bound is tighter (deep well, R2 = 1)
    for ratio, central_wins in ((0.3, False), (0.7, True)):
        sw = pot.square_well(1e4, ratio, 1.0)
        c = bounds.bound_total_central_ur(sw, 2).raw_bound
        d = bounds.bound_daubechies(sw, 0.0, 2).raw_bound
        assert (c < d) == central_wins


# -- 9 -----------------------------------------------------------------------

@C9
@pytest.mark.parametrize("form,ref", [("exp", 1.4142), ("pt", 1.9663)])
def test_trace_asymptote(form, ref):
    beta = 50.0
    assert beta * bounds.critical_trace(form, 0, beta, 2) == pytest.approx(ref, rel=0.02)


@C9
@pytest.mark.parametrize("form,ref", [("exp", 1.4458), ("pt", 2.000)])
def test_exact_asymptote(form, ref):
    beta = 50.0
    assert beta * solver.critical_coupling_exact(form, 0, beta, 2).g_c_exact == pytest.approx(ref, rel=0.02)


# -- 10 ----------------------------------------------------------------------

RADII = [(0.05, 0.4), (0.3, 0.31), (1.0, 2.5), (4.0, 0.7), (8.0, 9.0)]


@C10
@pytest.mark.parametrize("m", [0.1, 1.0, 7.0])
def test_green_majorization_chain(m):
    ctx = KernelContext(m)
    d = np.geomspace(1e-3, 50.0, 200)
    g, g1, g2 = ctx.green(d), ctx.green_g1(d), ctx.green_g2(d)
    assert np.all(g > 0) and np.all(g <= g1) and np.all(g1 <= g2)
    # the majorized s-wave kernel dominates the exact one
    for r, rp in RADII:
        c = KernelContext(m, 2, 0)
        assert c.kernel_t(r, rp) <= c.partial_wave_a(r, rp)


@C10
@pytest.mark.parametrize("ell", [0, 1, 4])
def test_kernel_symmetry(ell):
    for m in (0.0, 0.5, 3.0):
        ctx = KernelContext(m, 2, ell)
        for r, rp in RADII:
            assert ctx.kernel_t(r, rp) == pytest.approx(ctx.kernel_t(rp, r), rel=1e-12)
            assert ctx.partial_wave_a(r, rp) == pytest.approx(ctx.partial_wave_a(rp, r), rel=1e-12)


@C10
@pytest.mark.parametrize("ell", [0, 1, 2, 7])
def test_massless_t_equals_a(ell):
    ctx = KernelContext(0.0, 2, ell)
    for r, rp in RADII:
        assert ctx.kernel_t(r, rp) == pytest.approx(ctx.partial_wave_a(r, rp), rel=1e-13)


def _green_fourier(m, d):
    # 1/(sqrt(p^2+m^2)-m) = (sqrt(p^2+m^2)+m)/p^2; the bounded remainder goes to QAWF
    rest = integrate.quad(lambda p: (math.sqrt(p * p + m * m) - p) / p if p > 0 else m,
                          0, math.inf, weight="sin", wvar=d)[0]
    return (m * math.pi / 2 + 1 / d + rest) / (2 * math.pi ** 2 * d)


@C10
@pytest.mark.parametrize("m,d", [(1.0, 0.1), (1.0, 1.0), (1.0, 4.0), (0.3, 2.0), (5.0, 0.5)])
def test_green_fourier_oracle(m, d):
    assert KernelContext(m).green(d) == pytest.approx(_green_fourier(m, d), rel=1e-4)


GRID = {
    "exp": (pot.exponential, (1.5, 2.8, 3.8)),
    "pt": (pot.poschl_teller, (1.5, 2.8, 3.8)),
    "sqw": (lambda g: pot.square_well(g, 0.0, 1.0), (1.5, 3.2, 5.0)),
}


def _total_count(V, beta):
    total, ell = 0, 0
    while True:
        n = solver.count_states_below(V, ell, beta, 2, 0.0)
        if n == 0:
            return total
        total += (2 * ell + 1) * n
        ell += 1


@C10
@pytest.mark.parametrize("form", sorted(GRID))
@pytest.mark.parametrize("k", range(3))
def test_validity_grid(form, k):
    make, factors = GRID[form]
    g_c = solver.critical_coupling_exact(make(1.0), 0, 0.0, 2).g_c_exact
    V = make(factors[k] * g_c)
    n_s = solver.count_states_below(V, 0, 0.0, 2, 0.0)
    assert n_s == k + 1
    n_tot = _total_count(V, 0.0)
    assert bounds.bound_lwave_trace(V, 0, 0.0, 2).implied_count >= n_s
    assert bounds.bound_lwave_holder(V, 0, 2, 2.0, math.inf, 2).implied_count >= n_s
    assert bounds.bound_daubechies(V, 0.0, 2).implied_count >= n_tot
    assert bounds.bound_total_central_ur(V, 2).implied_count >= n_tot
    # massive case: same shape at beta = 1
    Vm = make(factors[k] * solver.critical_coupling_exact(make(1.0), 0, 1.0, 2).g_c_exact)
    assert bounds.bound_lwave_trace(Vm, 0, 1.0, 2).implied_count >= solver.count_states_below(Vm, 0, 1.0, 2, 0.0)
    assert bounds.bound_daubechies(Vm, 1.0, 2).implied_count >= _total_count(Vm, 1.0)


@C10
def test_total_trace_validity_and_positivity():
    V = pot.exponential(2.0 * 5.574)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        rep = bounds.bound_total_trace(V, 0.0, 2, n=4, nu_max=8, samples=2 ** 15, seed=1)
    assert rep.raw_bound > 0
    assert rep.implied_count >= _total_count(V, 0.0)


@C10
@pytest.mark.parametrize("n", [2, 3, 4])
def test_lwave_homogeneity(n):
    kw = dict(samples=2 ** 12, seed=4) if n > 2 else {}
    a = bounds.bound_lwave_trace(pot.poschl_teller(1.0), 1, 0.5, 2, n, **kw)
    b = bounds.bound_lwave_trace(pot.poschl_teller(2.0), 1, 0.5, 2, n, **kw)
    key = "estimate" if n > 2 else None
    ra = a.params[key] if key else a.raw_bound
    rb = b.params[key] if key else b.raw_bound
    assert rb / ra == pytest.approx(2.0 ** n, rel=1e-7)


@C10
def test_total_homogeneity():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        a = bounds.bound_total_trace(pot.exponential(1.0), 1.0, 2, n=4, nu_max=6, samples=2 ** 12, seed=8)
        b = bounds.bound_total_trace(pot.exponential(2.0), 1.0, 2, n=4, nu_max=6, samples=2 ** 12, seed=8)
    assert b.params["estimate"] / a.params["estimate"] == pytest.approx(16.0, rel=1e-9)
    h1 = bounds.bound_total_holder(pot.exponential(1.0), 5, 2.0, 3.0, 2).raw_bound
    h2 = bounds.bound_total_holder(pot.exponential(2.0), 5, 2.0, 3.0, 2).raw_bound
    assert h2 / h1 == pytest.approx(32.0, rel=1e-8)
    d1 = bounds.bound_daubechies(pot.exponential(1.0), 0.0, 2).raw_bound
    d2 = bounds.bound_daubechies(pot.exponential(2.0), 0.0, 2).raw_bound
    assert d2 / d1 == pytest.approx(8.0, rel=1e-8)


@C10
def test_mc_replay():
    kw = dict(m=0.5, alpha=2, n=4, nu_max=5, samples=2 ** 12, seed=123)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        a = bounds.bound_total_trace(pot.poschl_teller(3.0), **kw)
        b = bounds.bound_total_trace(pot.poschl_teller(3.0), **kw)
    assert a.raw_bound == b.raw_bound and a.params["terms"] == b.params["terms"]
    x = bounds.bound_lwave_trace(pot.poschl_teller(3.0), 0, 0.5, 2, 3, samples=2 ** 12, seed=77)
    y = bounds.bound_lwave_trace(pot.poschl_teller(3.0), 0, 0.5, 2, 3, samples=2 ** 12, seed=77)
    assert x.raw_bound == y.raw_bound
