"""Upper limits on the number of bound states and the constants they need.

Every counting bound returns a ``BoundReport``.  Its ``raw_bound`` is the
right-hand side of a strict inequality N < raw_bound, so the implied count
is the largest integer strictly below it.  Critical couplings derived from
a bound are lower limits on the exact critical coupling.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq
from scipy.special import jn_zeros

from salpeter.errors import ConvergenceError, DivergenceError, DomainError
from salpeter.kernels import KernelContext
from salpeter.numerics.optimize import golden_section_max
from salpeter.numerics.quadrature import qmc_batches, quad
from salpeter.numerics.special import hurwitz_zeta, legendre_q_ratio
from salpeter.potentials import RadialPotential, from_family, moments, square_well

SQRT_2PI = math.sqrt(2 * math.pi)
DAUBECHIES_K_MASSLESS = 0.103
DAUBECHIES_K_MASSIVE = 0.239
DEFAULT_SAMPLES = 2 ** 20
# c(l) is integrated exactly up to this l and extrapolated in 1/l beyond
_C_ELL_EXACT_MAX = 1000


class BoundMethod(str, enum.Enum):
    TRACE_TOTAL = "trace_total"
    TRACE_LWAVE = "trace_lwave"
    HOLDER_TOTAL = "holder_total"
    HOLDER_LWAVE = "holder_lwave"
    CENTRAL_UR = "central_ur"
    DAUBECHIES = "daubechies"
    BELOW_ENERGY = "below_energy"


def implied_count(raw_bound: float) -> int:
    """Largest integer strictly below ``raw_bound`` (never negative)."""
    if not math.isfinite(raw_bound):
        raise DivergenceError("bound is not finite")
    if raw_bound <= 0:
        return 0
    return max(math.ceil(raw_bound) - 1, 0)


@dataclass(frozen=True)
class BoundReport:
    method: BoundMethod
    raw_bound: float
    implied_count: int
    params: dict = field(default_factory=dict)
    err_estimate: float = 0.0

    @classmethod
    def build(cls, method, raw, params=None, err=0.0):
        raw = max(float(raw), 0.0)
        return cls(BoundMethod(method), raw, implied_count(raw), dict(params or {}), float(err))


@dataclass(frozen=True)
class ExistenceResult:
    g_crit: float
    ell: int
    method: str
    p_star: float | None = None


@dataclass(frozen=True)
class AngularMomentumLimit:
    l_plus: int
    l_plus_plus: int
    s_value: float
    l_plus_plus_simple: int = 0


@dataclass(frozen=True)
class SeriesSum:
    value: float
    index: int
    tail: float


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------

def _check_alpha(alpha):
    if alpha not in (1, 2):
        raise DomainError("alpha must be 1 or 2")


@lru_cache(maxsize=8192)
def _c_unit(nu: int, q: float) -> float:
    # C(nu, q) for alpha = 1 as (1/pi) [int_0^inf 2 cosh(eta) Q_nu(cosh eta)^q d eta]^(1/q),
    # integrated in u = lam * eta with the decaying factor t^(nu+1) = e^(-(nu+1) eta)
    # taken out of Q_nu so nothing overflows.
    lam = q * (nu + 1) - 1.0
    ln_r0 = 0.5 * math.log(math.pi) + math.lgamma(nu + 1) - math.lgamma(nu + 1.5)

    def f(u):
        u = np.asarray(u, dtype=float)
        out = np.zeros_like(u)
        ok = u < 700.0
        eta = u[ok] / lam
        t = np.exp(-eta)
        ln_r = np.full_like(eta, ln_r0)
        # where t^(nu+1) would underflow the series ratio has reached its t -> 0 limit
        big = (nu + 1) * eta < 650.0
        q_vals = np.asarray(legendre_q_ratio(nu, t[big], -np.expm1(-2.0 * eta[big])))
        ln_r[big] = np.log(q_vals) + (nu + 1) * eta[big]
        out[ok] = (1.0 + t * t) * np.exp(-u[ok] + q * ln_r) / lam
        return out

    integral = quad(f, 0.0, math.inf, rel_tol=1e-11)
    return integral ** (1.0 / q) / math.pi


def const_c_nu_q(nu: int, q: float, alpha: int = 1) -> float:
    """C(nu, q): the norm constant of the nu-th partial wave of the massless kernel."""
    _check_alpha(alpha)
    if int(nu) != nu or nu < 0:
        raise DomainError("nu must be an integer >= 0")
    if not q >= 1:
        raise DomainError("q must be >= 1")
    if nu == 0 and q == 1:
        raise DivergenceError("C(0, 1) diverges")
    if math.isinf(q):
        raise DivergenceError("C(nu, q) diverges as q -> infinity")
    return _c_unit(int(nu), float(q)) / alpha


def _gamma_ratio(ell):
    """Gamma(l + 3/2) / Gamma(l + 1)."""
    return math.exp(math.lgamma(ell + 1.5) - math.lgamma(ell + 1))


def _c_ell_exact(ell: int) -> float:
    return math.sqrt(math.pi) * _gamma_ratio(ell) * math.sqrt(2 * ell + 1) * _c_unit(ell, 1.0)


@lru_cache(maxsize=1)
def _c_ell_tail_fit():
    # c(l) - sqrt(2 pi) ~ a / l + b / l^2, matched at two large l
    l1, l2 = _C_ELL_EXACT_MAX // 2, _C_ELL_EXACT_MAX
    d1, d2 = _c_ell_exact(l1) - SQRT_2PI, _c_ell_exact(l2) - SQRT_2PI
    b = (d1 * l1 - d2 * l2) / (1.0 / l1 - 1.0 / l2)
    a = d2 * l2 - b / l2
    return a, b


def const_c_ell(ell: int) -> float:
    """c(l) = sqrt(pi) Gamma(l+3/2)/Gamma(l+1) sqrt(2l+1) C(l, 1) alpha; independent of alpha."""
    if int(ell) != ell or ell < 0:
        raise DomainError("ell must be an integer >= 1")
    if ell == 0:
        raise DomainError("c(0) is infinite because C(0, 1) diverges")
    ell = int(ell)
    if ell <= _C_ELL_EXACT_MAX:
        return _c_ell_exact(ell)
    a, b = _c_ell_tail_fit()
    return SQRT_2PI + a / ell + b / ell ** 2


def const_c_ell1(ell: int, alpha: int = 1) -> float:
    """C(l, 1) via c(l); valid for every l >= 1 including the extrapolated range."""
    _check_alpha(alpha)
    return const_c_ell(ell) / (alpha * math.sqrt(math.pi) * _gamma_ratio(ell) * math.sqrt(2 * ell + 1))


def _holder_q(p, pp):
    q1 = p / (p - 1.0)
    q2 = p if math.isinf(pp) else p * pp / (pp - 1.0)
    return q1, q2


def const_b_tilde(n: int, ell: int, p: float, pp: float, alpha: int = 1) -> float:
    """[C(l, p/(p-1))]^(n-1) C(l, p p'/(p'-1))."""
    _check_holder_args(p, pp)
    q1, q2 = _holder_q(p, pp)
    return const_c_nu_q(ell, q1, alpha) ** (n - 1) * const_c_nu_q(ell, q2, alpha)


def const_b(n: int, p: float, pp: float, alpha: int = 1, tol: float = 1e-10,
            nu_cap: int = 200, nu_limit: int = 500) -> SeriesSum:
    """sum_nu (2nu+1) C(nu, p/(p-1))^(n-1) C(nu, p p'/(p'-1)).

    Summation stops once a term falls below ``tol`` times the running sum on
    three consecutive decreasing terms.  Slowly converging series are cut at
    ``nu_cap`` and completed by a power-law tail fitted to the last terms
    (summed with the Hurwitz zeta function).
    """
    _check_holder_args(p, pp)
    if n < 2:
        raise DomainError("n must be >= 2")
    q1, q2 = _holder_q(p, pp)
    total = 0.0
    terms = []
    decreasing = 0
    for nu in range(0, nu_limit + 1):
        term = (2 * nu + 1) * const_c_nu_q(nu, q1, alpha) ** (n - 1) * const_c_nu_q(nu, q2, alpha)
        total += term
        decreasing = decreasing + 1 if terms and term < terms[-1] else 0
        terms.append(term)
        if decreasing >= 3 and term < tol * total:
            return SeriesSum(total, nu, 0.0)
        if nu >= nu_cap and decreasing >= 3:
            break
    else:
        raise DivergenceError("B series terms do not decrease before nu = 500")
    nu = len(terms) - 1
    half = nu // 2
    slope = math.log(terms[half] / terms[nu]) / math.log((nu + 0.5) / (half + 0.5))
    if slope <= 1.0:
        raise DivergenceError(f"B series terms decay like nu^-{slope:.3f}; the sum diverges")
    tail = terms[nu] * (nu + 0.5) ** slope * hurwitz_zeta(slope, nu + 1.5)
    return SeriesSum(total + tail, nu, tail)


# ---------------------------------------------------------------------------
# radial integrals
# ---------------------------------------------------------------------------

def _pair_integral(V: RadialPotential, kernel, rel_tol: float = 1e-8) -> float:
    """int dx int dy |V-(x)| |V-(y)| kernel(x, y)^2 for a symmetric kernel.

    Evaluated as twice the integral over y < x, so the diagonal singularity
    always sits at an endpoint of the inner integral.
    """
    if V.is_zero:
        return 0.0
    lo, hi = V.support
    s = V.length_scale
    lo_u, hi_u = lo / s, hi / s
    bps = [p / s for p in V.breakpoints if lo < p < hi]

    def inner(xs):
        out = np.empty(len(xs))
        for i, x in enumerate(xs):
            pts = [p for p in bps if lo_u < p < x]

            def f(y, x=x):
                w = V.negative_part(y * s)
                return w * np.asarray(kernel(x * s, y * s)) ** 2

            out[i] = quad(f, lo_u, x, singular_points=pts, rel_tol=0.1 * rel_tol, abs_tol=1e-300)
        return out * V.negative_part(np.asarray(xs) * s)

    total = quad(inner, lo_u, hi_u, singular_points=bps, rel_tol=rel_tol, abs_tol=1e-300)
    return 2.0 * total * s * s


def _check_holder_args(p, pp):
    if not p > 1 or not pp > 1:
        raise DomainError("Holder exponents must satisfy p > 1 and p' > 1")


def _holder_factors(V: RadialPotential, n: int, p: float, pp: float) -> float:
    """Product of the four radial factors; homogeneous of degree n in |V-|."""
    f1 = V.radial_integral(lambda r, w: r ** (2.0 * (p - 1.0) / p) * w)
    if math.isinf(pp):
        f2 = moments(V).vmax
        e3 = 1.0
    else:
        f2 = V.radial_integral(lambda r, w: w ** (p * pp)) ** (1.0 / (p * pp))
        e3 = (pp - 1.0) / pp
    f3 = V.radial_integral(lambda r, w: r ** e3 * w ** p) ** (1.0 / p)
    f4 = V.radial_integral(lambda r, w: r ** (p - 1.0) * w ** p) ** ((n - 3.0) / p)
    return f1 * f2 * f3 * f4


# ---------------------------------------------------------------------------
# trace bounds
# ---------------------------------------------------------------------------

def _mc_points(V: RadialPotential, n: int):
    """Integration box in scaled radius and the scale factor."""
    lo, hi = V.support
    s = V.length_scale
    return [(lo / s, hi / s)] * n, s


def _cyclic_weights(V, x, s):
    r = x * s
    w = np.prod(V.negative_part(r), axis=1) * s ** x.shape[1]
    return r, w


def _cyclic_product(kernel, r):
    n = r.shape[1]
    prod = np.ones(len(r))
    for i in range(n):
        prod = prod * kernel(r[:, i], r[:, (i + 1) % n])
    return prod


def bound_lwave_trace(V: RadialPotential, ell: int, m: float, alpha: int, n: int = 2,
                      samples: int = DEFAULT_SAMPLES, seed: int = 0, rel_tol: float = 1e-8) -> BoundReport:
    """N_l < n-fold cyclic trace of T_l weighted by |V-| (n = 2 nested, n = 3, 4 QMC)."""
    ctx = KernelContext(m, alpha, ell)
    params = {"n": n, "ell": ell, "m": m, "alpha": alpha, "kappa2": _kappa2(V)}
    if n < 2:
        raise DomainError("n must be >= 2")
    if V.is_zero:
        return BoundReport.build(BoundMethod.TRACE_LWAVE, 0.0, params)
    if n == 2:
        raw = _pair_integral(V, ctx.kernel_t, rel_tol)
        return BoundReport.build(BoundMethod.TRACE_LWAVE, raw, params, rel_tol * raw)
    if n > 4:
        raise DomainError("bound_lwave_trace supports n <= 4")
    box, s = _mc_points(V, n)

    def f(x):
        r, w = _cyclic_weights(V, x, s)
        with np.errstate(divide="ignore", invalid="ignore"):
            val = w * _cyclic_product(ctx.kernel_t, r)
        return np.where(np.isfinite(val), val, 0.0)

    means, used = qmc_batches(f, n, box, samples, seed)
    est = float(means.mean())
    se = float(means.std(ddof=1) / math.sqrt(len(means)))
    params.update(samples=used, seed=seed, estimate=est, std_error=se)
    return BoundReport.build(BoundMethod.TRACE_LWAVE, est + 3 * se, params, 3 * se)


def bound_total_trace(V: RadialPotential, m: float, alpha: int, n: int = 4, nu_max: int = 8,
                      samples: int = DEFAULT_SAMPLES, seed: int = 0) -> BoundReport:
    """N < sum_nu (2nu+1) (n-fold cyclic trace of A_nu), by randomised QMC.

    The same point sets serve every nu.  Terms beyond ``nu_max`` are bounded
    by the power law nu^-(n-2) matched at ``nu_max`` and added to the bound.
    """
    if n < 4:
        raise DomainError("the total-wave trace needs n >= 4")
    if nu_max < 1:
        raise DomainError("nu_max must be >= 1")
    params = {"n": n, "m": m, "alpha": alpha, "nu_max": nu_max, "samples": samples, "seed": seed}
    if V.is_zero:
        return BoundReport.build(BoundMethod.TRACE_TOTAL, 0.0, params)
    ctxs = [KernelContext(m, alpha, nu) for nu in range(nu_max + 1)]
    box, s = _mc_points(V, n)

    def f(x):
        r, w = _cyclic_weights(V, x, s)
        cols = []
        for ctx in ctxs:
            with np.errstate(divide="ignore", invalid="ignore"):
                val = (2 * ctx.nu + 1) * w * _cyclic_product(ctx.partial_wave_a, r)
            cols.append(np.where(np.isfinite(val), val, 0.0))
        return np.stack(cols, axis=1)

    means, used = qmc_batches(f, n, box, samples, seed)
    terms = means.mean(axis=0)
    term_se = means.std(axis=0, ddof=1) / math.sqrt(len(means))
    batch_totals = means.sum(axis=1)
    est = float(batch_totals.mean())
    se = float(batch_totals.std(ddof=1) / math.sqrt(len(means)))
    if not terms[-1] < terms[-2]:
        warnings.warn("total-wave trace terms are not decreasing at nu_max", RuntimeWarning, stacklevel=2)
    decay = n - 2.0
    tail = float(terms[-1] * (nu_max + 0.5) ** decay * hurwitz_zeta(decay, nu_max + 1.5))
    params.update(samples=used, estimate=est, std_error=se, tail=tail,
                  terms=[float(t) for t in terms], term_std_errors=[float(t) for t in term_se])
    return BoundReport.build(BoundMethod.TRACE_TOTAL, est + tail + 3 * se, params, tail + 3 * se)


# ---------------------------------------------------------------------------
# Holder bounds (massless)
# ---------------------------------------------------------------------------

def bound_total_holder(V: RadialPotential, n: int, p: float, pp: float, alpha: int) -> BoundReport:
    """N < B(n, p, p') times four radial factors of |V-| (m = 0, n >= 5)."""
    _check_holder_args(p, pp)
    if n < 5:
        raise DomainError("the total Holder bound needs n >= 5")
    params = {"n": n, "p": p, "pp": pp, "alpha": alpha}
    if V.is_zero:
        return BoundReport.build(BoundMethod.HOLDER_TOTAL, 0.0, params)
    b = const_b(n, p, pp, alpha)
    params.update(b=b.value, nu_index=b.index, b_tail=b.tail)
    raw = b.value * _holder_factors(V, n, p, pp)
    return BoundReport.build(BoundMethod.HOLDER_TOTAL, raw, params, raw * b.tail / b.value)


def bound_lwave_holder(V: RadialPotential, ell: int, n: int, p: float, pp: float, alpha: int) -> BoundReport:
    """N_l < B~(n, l, p, p') times the four radial factors (m = 0, n >= 2)."""
    _check_holder_args(p, pp)
    if n < 2:
        raise DomainError("the l-wave Holder bound needs n >= 2")
    params = {"n": n, "ell": ell, "p": p, "pp": pp, "alpha": alpha}
    if V.is_zero:
        return BoundReport.build(BoundMethod.HOLDER_LWAVE, 0.0, params)
    raw = const_b_tilde(n, ell, p, pp, alpha) * _holder_factors(V, n, p, pp)
    return BoundReport.build(BoundMethod.HOLDER_LWAVE, raw, params)


# ---------------------------------------------------------------------------
# existence conditions and angular-momentum limits
# ---------------------------------------------------------------------------

def existence_condition_p(V: RadialPotential, ell: int, p: float, alpha: int) -> float:
    """int dr/r [C(l, p/(p-1)) r |V-|]^p; at least one l-wave bound state needs this >= 1."""
    if not p > 1:
        raise DomainError("p must be > 1")
    if V.is_zero:
        return 0.0
    c = const_c_nu_q(ell, p / (p - 1.0), alpha)
    return c ** p * V.radial_integral(lambda r, w: r ** (p - 1.0) * w ** p)


def _g_crit_p(V, ell, p, alpha):
    lhs = existence_condition_p(V, ell, p, alpha)
    return V.g * lhs ** (-1.0 / p)


def existence_critical_p(V: RadialPotential, ell: int, alpha: int,
                         p_range=(1.02, 64.0)) -> ExistenceResult:
    """Largest critical strength from the p-condition, optimised over ln p.

    The result is expressed in units of the potential's own strength ``g``.
    """
    if V.is_zero:
        raise DomainError("zero potential has no critical coupling")
    a, b = math.log(p_range[0]), math.log(p_range[1])
    x, g = golden_section_max(lambda lp: _g_crit_p(V, ell, math.exp(lp), alpha), a, b, xtol=1e-5)
    return ExistenceResult(g, ell, "p_condition", math.exp(x))


def existence_critical_max(V: RadialPotential, ell: int, alpha: int) -> ExistenceResult:
    """Critical strength from C(l, 1) max(r|V-|) = 1 (l >= 1)."""
    if ell < 1:
        raise DomainError("the max condition needs l >= 1: C(0, 1) diverges")
    mom = moments(V)
    if mom.m_rmax == 0:
        raise DomainError("zero potential has no critical coupling")
    return ExistenceResult(V.g / (const_c_ell1(ell, alpha) * mom.m_rmax), ell, "max_condition")


def _l_plus_from_m(m_rmax: float, alpha: int) -> int:
    if m_rmax <= 0 or const_c_ell1(1, alpha) * m_rmax < 1:
        return 0
    lo, hi = 1, 2
    while const_c_ell1(hi, alpha) * m_rmax >= 1:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if const_c_ell1(mid, alpha) * m_rmax >= 1:
            lo = mid
        else:
            hi = mid
    return lo


def _l_pp(s: float) -> int:
    return int(math.floor(0.25 * (math.sqrt(1.0 + 8.0 * s * s) - 1.0) + 1e-12))


def l_plus(V: RadialPotential, alpha: int) -> AngularMomentumLimit:
    """L+ from the max condition and the closed-form relaxation L++.

    ``l_plus_plus`` uses c(L) in place of c(1), iterated from the plain value
    down to a fixed point; every iterate remains an upper limit on L+.
    """
    _check_alpha(alpha)
    m_rmax = moments(V).m_rmax
    lp = _l_plus_from_m(m_rmax, alpha)
    pref = m_rmax / (alpha * math.sqrt(math.pi))
    s1 = const_c_ell(1) * pref
    simple = _l_pp(s1)
    current = simple
    for _ in range(100):
        if current < 1:
            break
        nxt = _l_pp(const_c_ell(current) * pref)
        if nxt >= current:
            break
        current = nxt
    return AngularMomentumLimit(lp, current, s1, simple)


# ---------------------------------------------------------------------------
# other bounds
# ---------------------------------------------------------------------------

def bound_total_central_ur(V: RadialPotential, alpha: int) -> BoundReport:
    """N < (L+ + 1) max|V-| int r|V-| dr / alpha^2 (m = 0)."""
    _check_alpha(alpha)
    params = {"alpha": alpha}
    if V.is_zero:
        params.update(l_plus=0, asymptotic=0.0)
        return BoundReport.build(BoundMethod.CENTRAL_UR, 0.0, params)
    mom = moments(V)
    lim = l_plus(V, alpha)
    raw = (lim.l_plus + 1) * mom.vmax * mom.i_rint / alpha ** 2
    params.update(l_plus=lim.l_plus, asymptotic=mom.m_rmax * mom.vmax * mom.i_rint / alpha ** 3)
    return BoundReport.build(BoundMethod.CENTRAL_UR, raw, params)


def daubechies_constant(m: float) -> float:
    return DAUBECHIES_K_MASSLESS if m == 0 else DAUBECHIES_K_MASSIVE


def bound_daubechies(V: RadialPotential, m: float, alpha: int) -> BoundReport:
    """N <= K int d^3r [w (w + 2m)]^(3/2) with w = |V-|/alpha."""
    _check_alpha(alpha)
    if m < 0:
        raise DomainError("mass must be >= 0")
    k = daubechies_constant(m)
    params = {"m": m, "alpha": alpha, "K": k}
    if V.is_zero:
        return BoundReport.build(BoundMethod.DAUBECHIES, 0.0, params)
    integral = V.radial_integral(lambda r, w: r * r * ((w / alpha) * (w / alpha + 2 * m)) ** 1.5)
    raw = 4 * math.pi * k * integral
    # N <= raw, not strict: an integer raw still allows N = raw
    report = BoundReport.build(BoundMethod.DAUBECHIES, raw, params)
    if raw == math.floor(raw):
        report = BoundReport(report.method, raw, int(raw), report.params, 0.0)
    return report


def _kappa2(V: RadialPotential) -> float:
    return abs(V.shift)


def bound_below_energy(V: RadialPotential, ell: int, m: float, alpha: int, kappa2: float,
                       rel_tol: float = 1e-8) -> BoundReport:
    """Limit on l-wave states at or below E = -kappa2 (or +kappa2 for confining V)."""
    vk = V.truncate_at_energy(kappa2)
    rep = bound_lwave_trace(vk, ell, m, alpha, 2, rel_tol=rel_tol)
    params = dict(rep.params, kappa2=kappa2)
    return BoundReport.build(BoundMethod.BELOW_ENERGY, rep.raw_bound, params, rep.err_estimate)


# ---------------------------------------------------------------------------
# critical couplings implied by bounds
# ---------------------------------------------------------------------------

def critical_trace(form: str, ell: int, beta: float, alpha: int, rel_tol: float = 1e-9) -> float:
    """g at which the n = 2 l-wave trace bound equals 1 (R = 1)."""
    raw = bound_lwave_trace(from_family(form, 1.0), ell, beta, alpha, 2, rel_tol=rel_tol).raw_bound
    return 1.0 / math.sqrt(raw)


def critical_daubechies(form: str, beta: float, alpha: int) -> float:
    """g at which the Daubechies bound equals 1 (R = 1)."""
    f = lambda g: bound_daubechies(from_family(form, g), beta, alpha).raw_bound - 1.0  # noqa: E731
    hi = 1.0
    while f(hi) < 0:
        hi *= 2.0
    lo = hi / 2.0
    while f(lo) > 0:
        lo /= 2.0
    return brentq(f, lo, hi, xtol=1e-14, rtol=1e-12)


@dataclass(frozen=True)
class NonrelativisticReference:
    form: str
    this_work: float
    literature_bound: float
    exact: float


# beta * g_c of the strongest earlier nonrelativistic bound, per family
_LITERATURE_NR_BOUND = {"exponential": 1.4383, "poschl_teller": 1.9910}


@lru_cache(maxsize=4)
def _nr_asymptote(form: str) -> float:
    # large-beta limit: only the S_0 kernel survives, T_0 -> 2 beta min(x, y) / alpha,
    # so beta g_c -> alpha / (2 sqrt(int int v v min^2)); quoted for alpha = 2
    v = from_family(form, 1.0)
    integral = _pair_integral(v, lambda x, y: np.minimum(x, y), rel_tol=1e-11)
    return 2.0 / (2.0 * math.sqrt(integral))


def nr_reference(form: str, ell: int = 0) -> NonrelativisticReference:
    """Large-beta coefficients of beta * g_c (alpha = 2)."""
    if ell != 0:
        raise DomainError("nonrelativistic references are tabulated for l = 0 only")
    name = from_family(form, 1.0).form.value
    if name == "exponential":
        exact = float(jn_zeros(0, 1)[0]) ** 2 / 4.0
    elif name == "poschl_teller":
        exact = 2.0
    else:
        raise DomainError(f"no nonrelativistic reference for {form!r}")
    return NonrelativisticReference(name, _nr_asymptote(name), _LITERATURE_NR_BOUND[name], exact)


# ---------------------------------------------------------------------------
# square-well comparison
# ---------------------------------------------------------------------------

def square_well_crossover(alpha: int = 2, v0: float | None = None) -> float:
    """Ratio R1/R2 above which the central bound beats the Daubechies bound (m = 0).

    With ``v0=None`` the strong-coupling form of the central bound is used
    (L+ replaced by its asymptote), which makes the ratio independent of the
    depth.  Otherwise the finite-depth bound with the integer L+ is compared
    for a well of outer radius 1 and depth ``v0``.
    """
    k4pi3 = 4 * math.pi * DAUBECHIES_K_MASSLESS / 3.0
    if v0 is None:
        return brentq(lambda x: 0.5 * (1 + x) - k4pi3 * (1 + x + x * x), 0.0, 1.0, xtol=1e-14)

    def diff(x):
        sw = square_well(v0, x, 1.0)
        return bound_total_central_ur(sw, alpha).raw_bound - bound_daubechies(sw, 0.0, alpha).raw_bound

    xs = np.linspace(0.0, 0.999, 400)
    vals = [diff(x) for x in xs]
    for i in range(len(xs) - 1, 0, -1):
        if vals[i] < 0 <= vals[i - 1]:
            return brentq(diff, xs[i - 1], xs[i], xtol=1e-10)
    raise ConvergenceError("no crossover found for this depth")
