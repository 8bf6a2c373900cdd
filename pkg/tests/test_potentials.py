import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from salpeter import potentials as pot
from salpeter.errors import DivergenceError, DomainError, QuadratureError


def test_family_shapes():
    e = pot.exponential(2.0, R=0.5)
    assert e(0.0) == pytest.approx(-4.0)
    assert e(0.5) == pytest.approx(-4.0 / math.e)
    p = pot.poschl_teller(3.0)
    assert p(1.0) == pytest.approx(-3.0 / math.cosh(1.0) ** 2)
    assert pot.from_family("PT", 3.0) == p
    with pytest.raises(DomainError):
        pot.from_family("yukawa", 1.0)


def test_negative_part_and_truncation():
    v = pot.exponential(1.0)
    r = np.linspace(0, 5, 11)
    np.testing.assert_allclose(v.negative_part(r), np.exp(-r))
    vt = v.truncate_at_energy(0.25)
    assert vt.support == pytest.approx((0.0, math.log(4.0)))
    np.testing.assert_allclose(vt.negative_part(r), np.maximum(np.exp(-r) - 0.25, 0.0))
    assert pot.truncate_at_energy(v, 2.0).is_zero


def test_oscillator_truncation_is_upward():
    osc = pot.harmonic_oscillator(2.0)
    assert osc.confining
    assert osc.negative_part(1.0) == 0.0
    vt = osc.truncate_at_energy(8.0)
    assert vt.support == pytest.approx((0.0, 1.0))
    assert vt.negative_part(0.5) == pytest.approx(8.0 - 8.0 * 0.25)


def test_square_well_geometry():
    sw = pot.square_well(3.0, 0.5, 2.0)
    assert sw.support == (0.5, 2.0)
    assert sw(1.0) == -3.0 and sw(2.5) == 0.0 and sw(0.2) == 0.0
    m = sw.moments()
    assert m.vmax == pytest.approx(3.0)
    assert m.m_rmax == pytest.approx(6.0, rel=1e-9)
    assert m.i_rint == pytest.approx(3.0 * (4.0 - 0.25) / 2, rel=1e-9)


@pytest.mark.parametrize("kwargs", [
    dict(form="exponential", g=-1.0), dict(form="exponential", R=0.0),
    dict(form="square_well", v0=1.0, r1=2.0, r2=1.0), dict(form="square_well", v0=0.0, r2=1.0),
    dict(form="harmonic_oscillator", k=0.0),
])
def test_invalid_parameters(kwargs):
    with pytest.raises(DomainError):
        pot.RadialPotential(**kwargs)


def test_exponential_moments():
    m = pot.exponential(1.0).moments()
    assert m.m_rmax == pytest.approx(1 / math.e, rel=1e-10)
    assert m.r_at_m == pytest.approx(1.0, rel=1e-5)
    assert m.i_rint == pytest.approx(1.0, rel=1e-10)
    assert isinstance(m.r_at_m, float)


def test_poschl_teller_moments():
    m = pot.poschl_teller(1.0).moments()
    # maximiser of x / cosh^2 x solves 2 x tanh x = 1
    assert 2 * m.r_at_m * math.tanh(m.r_at_m) == pytest.approx(1.0, abs=1e-5)
    assert m.m_rmax == pytest.approx(0.447743, abs=2e-6)
    assert m.i_rint == pytest.approx(math.log(2.0), rel=1e-10)


@settings(max_examples=25, deadline=None)
@given(st.floats(0.1, 50.0), st.floats(0.2, 5.0))
def test_moment_scaling(g, R):
    # max r|V| scales as g, int r|V| as g R, max|V| as g / R
    base = pot.exponential(1.0).moments()
    m = pot.exponential(g, R).moments()
    assert m.m_rmax == pytest.approx(g * base.m_rmax, rel=1e-8)
    assert m.vmax == pytest.approx(g / R, rel=1e-12)
    assert m.i_rint == pytest.approx(g * R * base.i_rint, rel=1e-8)


def test_radial_integral_rejects_slow_tail():
    v = pot.tabulated([0, 1, 2, 3, 4], [-1, -1, -1, -1, -1])
    assert v.support == (0.0, 4.0)
    assert v.radial_integral(lambda r, w: w) == pytest.approx(4.0, rel=1e-9)
    # h ~ 1/(1+r) at large r: log-divergent
    with pytest.raises((DivergenceError, QuadratureError)):
        pot.exponential(1.0).radial_integral(lambda r, w: 1.0 / (1.0 + r))


def test_tabulated_matches_analytic(tmp_path):
    r = np.linspace(0, 12, 400)
    path = tmp_path / "v.dat"
    path.write_text("# r V\n" + "\n".join(f"{a:.17g} {-math.exp(-a):.17g}" for a in r))
    tab = pot.from_file(path)
    ref = pot.exponential(1.0)
    assert tab(2.345) == pytest.approx(ref(2.345), rel=1e-6)
    assert tab.moments().m_rmax == pytest.approx(ref.moments().m_rmax, rel=1e-6)
    assert tab(20.0) == 0.0


def test_tabulated_file_errors(tmp_path):
    bad = tmp_path / "bad.dat"
    bad.write_text("1 2 3\n")
    with pytest.raises(DomainError):
        pot.from_file(bad)
    bad.write_text("0 -1\n1 -1\n1 -1\n2 0\n")
    with pytest.raises(DomainError):
        pot.from_file(bad)


def test_tabulated_support_edges():
    tab = pot.tabulated([0, 1, 2, 3, 4], [1, -1, -1, 1, 1])
    lo, hi = tab.support
    assert 0 < lo < 1 and 2 < hi < 3
    assert tab.eval(lo) == pytest.approx(0.0, abs=1e-12)
