"""Special functions: modified Bessel K0/K1, the Green-function integral F,
equal-parameter Gauss hypergeometric, Legendre P and Q, Airy zeros, zeta.

Everything here is vectorised over numpy arrays and returns a plain ``float``
when called with a scalar.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special as _sc

from salpeter.errors import DomainError, ConvergenceError

EULER_GAMMA = 0.57721566490153286061
_EPS = 1e-17


def _prepare(x):
    arr = np.asarray(x, dtype=float)
    return arr, arr.ndim == 0


def _finish(out, scalar):
    return float(out) if scalar else out


# ---------------------------------------------------------------------------
# Modified Bessel functions of the second kind
# ---------------------------------------------------------------------------

def _k01_series(x):
    """Ascending series, accurate for 0 < x <= 2."""
    y = 0.25 * x * x
    lg = np.log(0.5 * x)
    # k-th terms of I0 and I1/(x/2)
    t0 = np.ones_like(x)
    t1 = np.ones_like(x)
    i0 = np.ones_like(x)
    i1s = np.ones_like(x)
    k0sum = np.zeros_like(x)
    psum = (-EULER_GAMMA) + (1.0 - EULER_GAMMA)  # psi(1) + psi(2)
    k1sum = np.full_like(x, psum)
    harm = 0.0
    for k in range(1, 40):
        t0 = t0 * y / (k * k)
        t1 = t1 * y / (k * (k + 1))
        harm += 1.0 / k
        i0 = i0 + t0
        i1s = i1s + t1
        k0sum = k0sum + harm * t0
        # psi(k+1) + psi(k+2) = -2*gamma + 2*H_k + 1/(k+1)
        k1sum = k1sum + (-2.0 * EULER_GAMMA + 2.0 * harm + 1.0 / (k + 1)) * t1
        if np.all(t0 < 1e-18 * i0):
            break
    k0 = -(lg + EULER_GAMMA) * i0 + k0sum
    i1 = 0.5 * x * i1s
    k1 = 1.0 / x + lg * i1 - 0.25 * x * k1sum
    return k0, k1


def _k01_steed(x):
    """Temme/Steed continued fraction (CF2) for x > 2."""
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    h = d.copy()
    delh = d.copy()
    q1 = np.zeros_like(x)
    q2 = np.ones_like(x)
    a1 = 0.25
    q = np.full_like(x, a1)
    c = a1
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, 2000):
        a -= 2 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1 = q2
        q2 = qnew
        q = q + c * qnew
        b = b + 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h = h + delh
        dels = q * delh
        s = s + dels
        if np.all(np.abs(dels) < _EPS * np.abs(s)):
            break
    else:  # pragma: no cover - CF2 converges in a few dozen steps for x > 2
        raise ConvergenceError("Bessel K continued fraction did not converge")
    h = a1 * h
    k0 = np.sqrt(np.pi / (2.0 * x)) * np.exp(-x) / s
    k1 = k0 * (x + 0.5 - h) / x
    return k0, k1


def _k01(x):
    if np.any(~(x > 0)):
        raise DomainError("modified Bessel K requires x > 0")
    k0 = np.empty_like(x)
    k1 = np.empty_like(x)
    small = x <= 2.0
    if np.any(small):
        k0[small], k1[small] = _k01_series(x[small])
    if np.any(~small):
        k0[~small], k1[~small] = _k01_steed(x[~small])
    return k0, k1


def bessel_k0(x):
    """Modified Bessel function K0 for x > 0."""
    arr, scalar = _prepare(x)
    k0, _ = _k01(np.atleast_1d(arr))
    return _finish(k0.reshape(arr.shape), scalar)


def bessel_k1(x):
    """Modified Bessel function K1 for x > 0."""
    arr, scalar = _prepare(x)
    _, k1 = _k01(np.atleast_1d(arr))
    return _finish(k1.reshape(arr.shape), scalar)


def bessel_k01(x):
    """Both K0 and K1 in one pass."""
    arr, scalar = _prepare(x)
    k0, k1 = _k01(np.atleast_1d(arr))
    return _finish(k0.reshape(arr.shape), scalar), _finish(k1.reshape(arr.shape), scalar)


def _k0_tail(y):
    """int_y^inf K0(z) dz = int_0^inf exp(-y cosh t) / cosh t dt.

    The trapezoid rule converges geometrically here (integrand analytic in
    the strip |Im t| < pi/2), so a fixed step of 0.05 is plenty.
    """
    h = 0.05
    tmax = np.minimum(40.0, np.arccosh(np.maximum(1.0, 45.0 / y + 1.0)))
    nmax = int(np.ceil(tmax.max() / h)) + 1
    t = h * np.arange(nmax)
    ch = np.cosh(t)
    with np.errstate(under="ignore"):
        vals = np.exp(-np.outer(y, ch)) / ch
    vals[:, 0] *= 0.5
    return h * vals.sum(axis=1)


def bessel_k1_integral_f(y):
    """F(y) = K1(y) + int_0^y K0(z) dz  (equivalently int_y^inf K1(z)/z dz + pi/2)."""
    arr, scalar = _prepare(y)
    flat = np.atleast_1d(arr).ravel()
    if np.any(~(flat > 0)):
        raise DomainError("F(y) requires y > 0")
    _, k1 = _k01(flat)
    out = k1 + (0.5 * np.pi - _k0_tail(flat))
    return _finish(out.reshape(arr.shape), scalar)


# ---------------------------------------------------------------------------
# Legendre functions
# ---------------------------------------------------------------------------

def legendre_p(l: int, x):
    """Legendre polynomial P_l(x) on [-1, 1] by the three-term recurrence."""
    if l < 0:
        raise DomainError("l must be >= 0")
    arr, scalar = _prepare(x)
    if np.any(np.abs(arr) > 1.0):
        raise DomainError("Legendre P requires |x| <= 1")
    p_prev = np.ones_like(arr)
    if l == 0:
        return _finish(p_prev, scalar)
    p = arr.copy()
    for k in range(1, l):
        p_prev, p = p, ((2 * k + 1) * arr * p - k * p_prev) / (k + 1)
    return _finish(p, scalar)


def _q_direct(nu, t):
    # Q_nu = sqrt(pi) G(nu+1)/G(nu+3/2) t^{nu+1} 2F1(1/2, nu+1; nu+3/2; t^2)
    t2 = t * t
    term = np.ones_like(t)
    total = np.ones_like(t)
    active = np.ones(t.shape, dtype=bool)
    k = 0
    while np.any(active):
        term = term * ((k + 0.5) * (nu + 1 + k) / ((nu + 1.5 + k) * (k + 1))) * t2
        total = total + term
        k += 1
        active = term > _EPS * total
        if k > 200000:
            raise ConvergenceError("Legendre Q series did not converge")
    logpref = 0.5 * math.log(math.pi) + math.lgamma(nu + 1) - math.lgamma(nu + 1.5)
    with np.errstate(under="ignore"):
        return np.exp(logpref + (nu + 1) * np.log(t)) * total


def _q_log(nu, t, s):
    """Logarithmic expansion about t = 1 in s = 1 - t^2."""
    ls = np.log(s)
    # bracket_k = 2 H_k - psi(1/2+k) - psi(nu+1+k) - ln s, gamma terms cancel
    harm_nu = sum(1.0 / j for j in range(1, nu + 1))
    half = 2.0 * math.log(2.0)   # -(psi(1/2) + gamma)
    two_h = 0.0
    nu_part = harm_nu            # psi(nu+1+k) + gamma
    coef = np.ones_like(t)
    total = (two_h + half - nu_part) - ls
    k = 0
    while True:
        coef = coef * ((0.5 + k) * (nu + 1 + k) / ((k + 1.0) ** 2)) * s
        two_h += 2.0 / (k + 1)
        half -= 2.0 / (2 * k + 1)
        nu_part += 1.0 / (nu + 1 + k)
        k += 1
        term = coef * ((two_h + half - nu_part) - ls)
        total = total + term
        # the bracket changes sign, so bound the term by its coefficient
        if k > nu + 5 and np.all(coef * (3.0 + np.abs(ls) + math.log(nu + k)) <= _EPS * total):
            break
        if k > 200000:
            raise ConvergenceError("Legendre Q log-series did not converge")
    with np.errstate(under="ignore"):
        return np.exp((nu + 1) * np.log(t)) * total


def legendre_q_ratio(nu: int, t, one_minus_t2=None):
    """Q_nu(w) at w = (1 + t^2) / (2 t), for a ratio 0 < t < 1.

    This is the Legendre function of the second kind that appears in the
    partial-wave expansion of 1/|r - r'|^2 with t = r_< / r_>.  Pass
    ``one_minus_t2`` when it is available more accurately than ``1 - t*t``
    (close to the diagonal).  Returns ``inf`` at t = 1.
    """
    if nu < 0:
        raise DomainError("nu must be >= 0")
    arr, scalar = _prepare(t)
    flat = np.atleast_1d(arr).astype(float).ravel()
    if np.any(~((flat > 0) & (flat <= 1))):
        raise DomainError("Legendre Q ratio requires 0 < t <= 1")
    if one_minus_t2 is None:
        s = (1.0 - flat) * (1.0 + flat)
    else:
        s = np.broadcast_to(np.asarray(one_minus_t2, dtype=float), arr.shape).ravel().copy()
    out = np.full_like(flat, np.inf)
    finite = s > 0
    if nu == 0:
        # ln((1+t)/(1-t)) = 2 ln(1+t) - ln(1-t^2)
        out[finite] = 2.0 * np.log1p(flat[finite]) - np.log(s[finite])
        return _finish(out.reshape(arr.shape), scalar)
    eta = -np.log(flat)
    use_log = finite & (eta <= min(0.5, 3.0 / (nu + 1)))
    use_direct = finite & ~use_log
    if np.any(use_log):
        out[use_log] = _q_log(nu, flat[use_log], s[use_log])
    if np.any(use_direct):
        out[use_direct] = _q_direct(nu, flat[use_direct])
    return _finish(out.reshape(arr.shape), scalar)


def legendre_q(nu: int, w):
    """Q_nu(w) for real w > 1."""
    arr, scalar = _prepare(w)
    if np.any(~(arr > 1)):
        raise DomainError("Legendre Q requires w > 1")
    root = np.sqrt((arr - 1.0) * (arr + 1.0))
    t = 1.0 / (arr + root)
    # 1 - t^2 = 2 t root
    out = legendre_q_ratio(nu, t, 2.0 * t * root)
    return _finish(np.asarray(out), scalar)


# ---------------------------------------------------------------------------
# Gauss hypergeometric F(n, n; 2n; z)
# ---------------------------------------------------------------------------

_HYP_SWITCH = 0.75


def _hyp_series(n, z):
    term = np.ones_like(z)
    total = np.ones_like(z)
    k = 0
    while True:
        term = term * ((n + k) ** 2 / ((2.0 * n + k) * (k + 1))) * z
        total = total + term
        k += 1
        if np.all(term <= _EPS * total):
            return total
        if k > 100000:
            raise ConvergenceError("hypergeometric series did not converge")


def hyp2f1_equal_params(n: int, z, one_minus_z=None):
    """F(n, n; 2n; z) for integer n >= 1 and 0 <= z < 1.

    Uses the power series up to z = 0.75.  Beyond that the function is
    rewritten through Legendre Q_{n-1}, whose expansion about z = 1 carries
    the ln(1 - z) singularity explicitly (c - a - b = 0).  ``one_minus_z``
    may be supplied when it is known more accurately than ``1 - z``.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    arr, scalar = _prepare(z)
    flat = np.atleast_1d(arr).astype(float).ravel()
    if np.any((flat < 0) | (flat >= 1)) or np.any(np.isnan(flat)):
        raise DomainError("hypergeometric argument must satisfy 0 <= z < 1")
    if one_minus_z is None:
        omz = 1.0 - flat
    else:
        omz = np.broadcast_to(np.asarray(one_minus_z, dtype=float), arr.shape).ravel()
    out = np.empty_like(flat)
    low = flat <= _HYP_SWITCH
    if np.any(low):
        out[low] = _hyp_series(n, flat[low])
    if np.any(~low):
        zz = flat[~low]
        u = np.sqrt(omz[~low])
        one_minus_t = 2.0 * u * (1.0 - u) / zz
        t = 1.0 - one_minus_t
        s = one_minus_t * (2.0 - one_minus_t)
        q = legendre_q_ratio(n - 1, t, s)
        logpref = math.log(2.0) + math.lgamma(2 * n) - 2.0 * math.lgamma(n)
        out[~low] = np.exp(logpref - n * np.log(zz)) * q
    return _finish(out.reshape(arr.shape), scalar)


# ---------------------------------------------------------------------------
# Airy zeros and zeta
# ---------------------------------------------------------------------------

def airy_negative_zeros(count: int) -> list[float]:
    """Magnitudes lambda_1 < lambda_2 < ... of the zeros of Ai(-x)."""
    if not 1 <= count <= 50:
        raise DomainError("count must be in [1, 50]")
    zeros = _sc.ai_zeros(count)[0]
    return [float(-z) for z in zeros]


# Bernoulli numbers B_2 .. B_16
_B2K = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6, -3617 / 510)


def hurwitz_zeta(s: float, q: float) -> float:
    """sum_{k>=0} (k + q)^-s for s > 1, q > 0 by Euler-Maclaurin."""
    if not s > 1:
        raise DomainError("zeta requires s > 1")
    if not q > 0:
        raise DomainError("Hurwitz zeta requires q > 0")
    N = 25
    head = sum((k + q) ** -s for k in range(N))
    a = N + q
    tail = a ** (1 - s) / (s - 1) + 0.5 * a ** -s
    rising = s                   # s (s+1) ... (s+2j-2)
    power = a ** (-s - 1)
    fact = 2.0                   # (2j)!
    for j, b in enumerate(_B2K, start=1):
        tail += b / fact * rising * power
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        power /= a * a
        fact *= (2 * j + 1) * (2 * j + 2)
    return head + tail


def riemann_zeta(w: float) -> float:
    """Riemann zeta function for real w > 1."""
    if not w > 1:
        raise DomainError("zeta requires w > 1")
    return hurwitz_zeta(w, 1.0)
