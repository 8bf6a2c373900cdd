"""Green function of sqrt(p^2 + m^2) - m and its partial-wave kernels.

All kernel routines broadcast over numpy arrays of radii.  Lengths are in
units of the potential range (R = 1), so the mass argument is beta = mR.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_legendre

from salpeter.errors import DomainError
from salpeter.numerics.special import (
    bessel_k0, bessel_k1, bessel_k1_integral_f, hyp2f1_equal_params, legendre_p,
    legendre_q_ratio,
)

_GL_X, _GL_W = roots_legendre(24)
_GL_U = 0.5 * (_GL_X + 1.0)
_GL_WU = 0.5 * _GL_W
# panel edges for the Bessel part, in units of 1/m past the lower limit
_PANELS = (0.0, 0.25, 1.0, 4.0, 16.0, 64.0, math.inf)


@dataclass(frozen=True)
class KernelContext:
    """Mass ``mass`` (>= 0), particle factor ``alpha`` (1 or 2), wave index ``ell``.

    The same index serves as the total-wave nu of the partial-wave
    expansion and as the orbital angular momentum of the radial kernels.
    """

    mass: float = 0.0
    alpha: int = 1
    ell: int = 0

    def __post_init__(self):
        if not (self.mass >= 0 and math.isfinite(self.mass)):
            raise DomainError("mass must be finite and >= 0")
        if self.alpha not in (1, 2):
            raise DomainError("alpha must be 1 or 2")
        if int(self.ell) != self.ell or self.ell < 0:
            raise DomainError("wave index must be an integer >= 0")
        object.__setattr__(self, "ell", int(self.ell))

    @property
    def nu(self) -> int:
        return self.ell

    # -- Green functions ---------------------------------------------------

    def green(self, delta):
        """Exact zero-energy Green function G(m, delta)."""
        d = _positive(delta, "delta")
        if self.mass <= 0:
            raise DomainError("green needs m > 0; use green_g2 for m = 0")
        m = self.mass
        return _out(m / (4 * math.pi * d) * (1.0 + (2.0 / math.pi) * bessel_k1_integral_f(m * d)))

    def green_g1(self, delta):
        """First majorant: F(y) replaced by K1(y) + pi/2."""
        d = _positive(delta, "delta")
        m = self.mass
        if m == 0:
            return _out(1.0 / (2 * math.pi ** 2 * d * d))
        return _out(m / (2 * math.pi * d) + m * bessel_k1(m * d) / (2 * math.pi ** 2 * d))

    def green_g2(self, delta):
        """Second majorant: K1(y) further replaced by 1/y."""
        d = _positive(delta, "delta")
        return _out(self.mass / (2 * math.pi * d) + 1.0 / (2 * math.pi ** 2 * d * d))

    # -- radial kernels ----------------------------------------------------

    def kernel_s(self, r, rp):
        """Nonrelativistic part 2m/(2l+1) r_<^(l+1) r_>^(-l)."""
        r, rp = _radii(r, rp)
        lo, hi = np.minimum(r, rp), np.maximum(r, rp)
        l = self.ell
        return _out(2.0 * self.mass / (2 * l + 1) * lo * (lo / hi) ** l)

    def _q(self, r, rp):
        """Q_l at w = (r^2 + r'^2)/(2 r r'), i.e. int dy P_l / y over [|r-r'|, r+r']."""
        lo, hi = np.minimum(r, rp), np.maximum(r, rp)
        t = lo / hi
        # 1 - t^2 without cancellation
        s = (hi - lo) * (hi + lo) / (hi * hi)
        return np.asarray(legendre_q_ratio(self.ell, t, s))

    def kernel_gcal(self, r, rp):
        """m int dy K1(m y) P_l((r^2 + r'^2 - y^2) / (2 r r')) over [|r-r'|, r+r'].

        Written as Q_l(w) plus the bounded remainder m K1(m y) - 1/y, which
        is integrated by Gauss-Legendre panels graded on the scale 1/m.
        """
        r, rp = _radii(r, rp)
        m = self.mass
        if m <= 0:
            return _out(self._q(r, rp))
        if self.ell == 0:
            diff = np.abs(r - rp)
            with np.errstate(divide="ignore"):
                near = np.where(diff > 0, bessel_k0(np.where(diff > 0, m * diff, 1.0)), np.inf)
            return _out(near - bessel_k0(m * (r + rp)))
        return _out(self._q(r, rp) + self._gcal_remainder(r, rp))

    def _gcal_remainder(self, r, rp):
        m, l = self.mass, self.ell
        a = np.abs(r - rp)
        b = r + rp
        total = np.zeros(np.broadcast(r, rp).shape)
        for j in range(len(_PANELS) - 1):
            lo = np.minimum(a + _PANELS[j] / m, b)
            hi = np.minimum(a + _PANELS[j + 1] / m, b)
            width = hi - lo
            if not np.any(width > 0):
                continue
            shape = (-1,) + (1,) * lo.ndim
            if j == 0:
                # quadratic grading towards the lower edge removes the y ln y kink
                y = lo[None, ...] + width[None, ...] * _GL_U.reshape(shape) ** 2
                w = (_GL_WU * 2 * _GL_U).reshape(shape) * width[None, ...]
            else:
                y = lo[None, ...] + width[None, ...] * _GL_U.reshape(shape)
                w = _GL_WU.reshape(shape) * width[None, ...]
            y = np.maximum(y, 1e-300)
            my = m * y
            # m K1(m y) - 1/y, with its small-argument series where K1 cancels
            with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
                diff = np.where(my > 1e-3, m * bessel_k1(np.maximum(my, 1e-3)) - 1.0 / y,
                                0.5 * m * my * (np.log(0.5 * my) + 0.5772156649015329 - 0.5))
            x = (r * r + rp * rp - y * y) / (2 * r * rp)
            p = legendre_p(l, np.clip(x, -1.0, 1.0))
            total = total + np.sum(w * diff * p, axis=0)
        return total

    def kernel_t(self, r, rp):
        """T_l = [G_l / pi + S_l] / alpha."""
        g = np.asarray(self.kernel_gcal(r, rp))
        s = np.asarray(self.kernel_s(r, rp))
        return _out((g / math.pi + s) / self.alpha)

    # -- total-wave expansion of the majorized kernel ----------------------

    def coefficient_a(self, x, y):
        """a_nu(m, x, y), the nu-th Legendre coefficient of G2(m, |x - y|)."""
        x, y = _radii(x, y)
        nu = self.ell
        lo, hi = np.minimum(x, y), np.maximum(x, y)
        first = self.mass / (2 * math.pi) * lo ** nu / hi ** (nu + 1)
        second = (2 * nu + 1) * self._q(x, y) / (4 * math.pi ** 2 * x * y)
        return _out(first + second)

    def coefficient_a_hypergeometric(self, x, y):
        """a_nu through F(nu+1, nu+1; 2nu+2; z); a cross-check of ``coefficient_a``."""
        x, y = _radii(x, y)
        nu = self.ell
        lo, hi = np.minimum(x, y), np.maximum(x, y)
        first = self.mass / (2 * math.pi) * lo ** nu / hi ** (nu + 1)
        z = 4 * x * y / (x + y) ** 2
        one_minus_z = ((x - y) / (x + y)) ** 2
        z = np.minimum(z, np.nextafter(1.0, 0.0))
        logpref = math.lgamma(nu + 1) - math.lgamma(nu + 0.5) - math.log(2 * math.pi ** 1.5)
        second = (np.exp(logpref + nu * np.log(x * y) - 2 * (nu + 1) * np.log(x + y))
                  * hyp2f1_equal_params(nu + 1, z, one_minus_z))
        return _out(first + second)

    def partial_wave_a(self, x, y):
        """A_nu = (4 pi / (2nu+1)) x y a_nu / alpha = [Q_nu / pi + S_nu] / alpha."""
        x, y = _radii(x, y)
        q = self._q(x, y)
        s = np.asarray(self.kernel_s(x, y))
        return _out((q / math.pi + s) / self.alpha)


def _positive(value, name):
    arr = np.asarray(value, dtype=float)
    if np.any(~(arr > 0)):
        raise DomainError(f"{name} must be > 0")
    return arr


def _radii(r, rp):
    r = np.asarray(r, dtype=float)
    rp = np.asarray(rp, dtype=float)
    if np.any(~(r > 0)) or np.any(~(rp > 0)):
        raise DomainError("radii must be > 0")
    return np.broadcast_arrays(r, rp)


def _out(arr):
    arr = np.asarray(arr)
    return float(arr) if arr.ndim == 0 else arr


# module-level forms of the context methods

def green(ctx: KernelContext, delta):
    return ctx.green(delta)


def green_g1(ctx: KernelContext, delta):
    return ctx.green_g1(delta)


def green_g2(ctx: KernelContext, delta):
    return ctx.green_g2(delta)


def kernel_s(ctx: KernelContext, r, rp):
    return ctx.kernel_s(r, rp)


def kernel_gcal(ctx: KernelContext, r, rp):
    return ctx.kernel_gcal(r, rp)


def kernel_t(ctx: KernelContext, r, rp):
    return ctx.kernel_t(r, rp)


def partial_wave_a(ctx: KernelContext, x, y):
    return ctx.partial_wave_a(x, y)
