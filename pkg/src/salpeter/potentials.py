"""Central potentials, their attractive parts and radial moments.

Every potential is an immutable ``RadialPotential``.  The families used for
testing are ``V(r) = -g v(r/R) / R`` with ``v(x) = exp(-x)`` (exponential)
or ``v(x) = 1/cosh(x)^2`` (Poschl-Teller), a spherical shell well of depth
``V0`` between radii ``R1`` and ``R2``, the confining oscillator
``V = k^3 r^2`` and tabulated samples.  Units are natural (hbar = c = 1).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from functools import cached_property
from pathlib import Path
from typing import Callable

import numpy as np
from scipy.interpolate import PchipInterpolator
from scipy.optimize import brentq

from salpeter.errors import DivergenceError, DomainError, QuadratureError
from salpeter.numerics.optimize import golden_section_max
from salpeter.numerics.quadrature import quad


class PotentialForm(str, enum.Enum):
    EXPONENTIAL = "exponential"
    POSCHL_TELLER = "poschl_teller"
    SQUARE_WELL = "square_well"
    HARMONIC_OSCILLATOR = "harmonic_oscillator"
    TABULATED = "tabulated"


@dataclass(frozen=True)
class PotentialMoments:
    """``m_rmax`` = max r|V-|, ``vmax`` = max |V-|, ``i_rint`` = int r|V-| dr."""

    m_rmax: float
    vmax: float
    i_rint: float
    r_at_m: float = float("nan")


@dataclass(frozen=True)
class RadialPotential:
    form: PotentialForm
    g: float = 1.0
    R: float = 1.0
    v0: float = 0.0
    r1: float = 0.0
    r2: float = 0.0
    k: float = 0.0
    samples_r: tuple = ()
    samples_v: tuple = ()
    # energy offset: the attractive part is min(V - shift, 0)
    shift: float = 0.0
    _interp: object = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        form = PotentialForm(self.form)
        object.__setattr__(self, "form", form)
        if not (self.g >= 0 and math.isfinite(self.g)):
            raise DomainError("strength g must be finite and >= 0")
        if not (self.R > 0 and math.isfinite(self.R)):
            raise DomainError("range R must be > 0")
        if form is PotentialForm.SQUARE_WELL:
            if not self.v0 > 0:
                raise DomainError("square well needs V0 > 0")
            if not 0 <= self.r1 <= self.r2 or self.r2 <= 0:
                raise DomainError("square well needs 0 <= R1 <= R2, R2 > 0")
        if form is PotentialForm.HARMONIC_OSCILLATOR and not self.k > 0:
            raise DomainError("oscillator needs k > 0")
        if form is PotentialForm.TABULATED:
            r = np.asarray(self.samples_r, dtype=float)
            v = np.asarray(self.samples_v, dtype=float)
            if r.ndim != 1 or r.shape != v.shape or len(r) < 4:
                raise DomainError("tabulated potential needs at least 4 (r, V) samples")
            if r[0] < 0 or np.any(np.diff(r) <= 0):
                raise DomainError("tabulated r must be >= 0 and strictly increasing")
            if not np.all(np.isfinite(v)):
                raise DomainError("tabulated V must be finite")
            object.__setattr__(self, "_interp", PchipInterpolator(r, v, extrapolate=False))

    # -- evaluation -------------------------------------------------------

    @property
    def confining(self) -> bool:
        return self.form is PotentialForm.HARMONIC_OSCILLATOR

    def eval(self, r):
        """V(r) of the underlying (untruncated) potential."""
        r = np.asarray(r, dtype=float)
        if np.any(r < 0):
            raise DomainError("r must be >= 0")
        form = self.form
        if form is PotentialForm.EXPONENTIAL:
            out = -self.g / self.R * np.exp(-r / self.R)
        elif form is PotentialForm.POSCHL_TELLER:
            out = -self.g / self.R / np.cosh(np.minimum(r / self.R, 350.0)) ** 2
        elif form is PotentialForm.SQUARE_WELL:
            out = np.where((r >= self.r1) & (r <= self.r2), -self.v0, 0.0)
        elif form is PotentialForm.HARMONIC_OSCILLATOR:
            out = self.k ** 3 * r * r
        else:
            rs = self.samples_r
            inside = self._interp(np.clip(r, rs[0], rs[-1]))
            out = np.where(r > rs[-1], 0.0, inside)
        return out + 0.0 if out.ndim else float(out)

    __call__ = eval

    def negative_part(self, r):
        """|V-(r)| = max(0, shift - V(r)): the attractive part, as a positive number."""
        out = np.maximum(self.shift - np.asarray(self.eval(r)), 0.0)
        return out if np.ndim(out) else float(out)

    def truncate_at_energy(self, kappa2: float) -> "RadialPotential":
        """Potential whose attractive part is cut at the energy -kappa2.

        For confining (positive) potentials the energy is taken at +kappa2,
        so the attractive part becomes max(0, kappa2 - V).
        """
        if not kappa2 >= 0:
            raise DomainError("kappa2 must be >= 0")
        shift = kappa2 if self.confining else -kappa2
        return replace(self, shift=shift, _interp=None)

    # -- geometry ---------------------------------------------------------

    @cached_property
    def length_scale(self) -> float:
        form = self.form
        if form is PotentialForm.SQUARE_WELL:
            return self.r2
        if form is PotentialForm.HARMONIC_OSCILLATOR:
            return max(math.sqrt(max(self.shift, 0.0) / self.k ** 3), 1.0 / self.k)
        if form is PotentialForm.TABULATED:
            return float(self.samples_r[-1])
        return self.R

    @cached_property
    def support(self) -> tuple[float, float]:
        """(lower, upper) radii outside which |V-| vanishes; upper may be inf."""
        form, s = self.form, self.shift
        if form is PotentialForm.HARMONIC_OSCILLATOR:
            return (0.0, math.sqrt(s / self.k ** 3)) if s > 0 else (0.0, 0.0)
        if form is PotentialForm.SQUARE_WELL:
            return (self.r1, self.r2) if self.v0 > -s else (0.0, 0.0)
        if form is PotentialForm.TABULATED:
            return self._tabulated_support()
        depth = self.g / self.R
        if depth <= -s or depth == 0:
            return (0.0, 0.0)
        if s == 0:
            return (0.0, math.inf)
        ratio = depth / -s
        if form is PotentialForm.EXPONENTIAL:
            return (0.0, self.R * math.log(ratio))
        return (0.0, self.R * math.acosh(math.sqrt(ratio)))

    def _tabulated_support(self):
        rs = np.asarray(self.samples_r)
        grid = np.unique(np.concatenate([rs, np.linspace(rs[0], rs[-1], 4001)]))
        neg = self.negative_part(grid) > 0
        if not np.any(neg):
            return (0.0, 0.0)
        idx = np.nonzero(neg)[0]
        lo, hi = 0.0, float(rs[-1])
        f = lambda x: float(self.shift - self.eval(x))  # noqa: E731
        if idx[0] > 0:
            lo = brentq(f, grid[idx[0] - 1], grid[idx[0]], xtol=1e-14)
        if idx[-1] < len(grid) - 1:
            hi = brentq(f, grid[idx[-1]], grid[idx[-1] + 1], xtol=1e-14)
        return (float(lo), float(hi))

    @cached_property
    def breakpoints(self) -> tuple[float, ...]:
        """Radii where |V-| has kinks or jumps (support edges and well walls).

        Tabulated samples are not included: the PCHIP interpolant is C1 there.
        """
        lo, hi = self.support
        pts = {lo, hi}
        return tuple(sorted(p for p in pts if math.isfinite(p) and lo <= p <= hi))

    @property
    def is_zero(self) -> bool:
        lo, hi = self.support
        return not hi > lo

    # -- integrals and moments -------------------------------------------

    def radial_integral(self, h: Callable, rel_tol: float = 1e-10) -> float:
        """int_0^inf h(r, |V-(r)|) dr over the support of |V-|.

        ``h`` receives radii and the matching |V-| values as arrays and must
        vanish where |V-| does.
        """
        if self.is_zero:
            return 0.0
        lo, hi = self.support
        scale = self.length_scale
        pts = [p / scale for p in self.breakpoints if lo < p < hi]

        def f(u):
            r = u * scale
            w = self.negative_part(r)
            return np.where(w > 0, h(r, w), 0.0) * scale

        if math.isfinite(hi):
            return quad(f, lo / scale, hi / scale, singular_points=pts, rel_tol=rel_tol, abs_tol=1e-300)
        total = quad(f, lo / scale, math.inf, singular_points=pts, rel_tol=rel_tol, abs_tol=1e-300)
        # the far tail must be negligible and shrinking
        t1 = quad(f, 50.0, math.inf, rel_tol=1e-6, abs_tol=1e-300) if lo / scale < 50 else total
        t2 = quad(f, 100.0, math.inf, rel_tol=1e-6, abs_tol=1e-300) if lo / scale < 100 else total
        if t1 > 1e-6 * abs(total) and t2 > 0.5 * t1:
            raise DivergenceError("radial moment tail does not decay")
        return total

    def moments(self) -> PotentialMoments:
        return moments(self)


def _scan_max(func, lo, hi, scale, extra):
    """Maximum of ``func`` on [lo, hi]: log-grid scan, then golden-section."""
    upper = min(hi, 50.0 * scale)
    lower = max(lo, 1e-4 * scale)
    grid = np.geomspace(lower, upper, 64) if upper > lower else np.array([upper])
    grid = np.unique(np.concatenate([grid, [p for p in extra if lo <= p <= upper]]))
    vals = np.asarray(func(grid), dtype=float)
    i = int(np.argmax(vals))
    best_x, best = float(grid[i]), float(vals[i])
    a = grid[max(i - 1, 0)]
    b = grid[min(i + 1, len(grid) - 1)]
    if b > a:
        x, v = golden_section_max(lambda x: float(func(np.array([x]))[0]), a, b, xtol=1e-10 * scale)
        if v > best:
            best_x, best = x, v
    return best_x, best


def moments(V: RadialPotential) -> PotentialMoments:
    """max r|V-|, max |V-| and int r|V-| dr, each >= 0."""
    if V.is_zero:
        return PotentialMoments(0.0, 0.0, 0.0)
    lo, hi = V.support
    scale = V.length_scale
    extra = list(V.breakpoints)
    edge = [p * (1 - 1e-12) for p in extra if p > 0]
    r_m, m_rmax = _scan_max(lambda r: r * V.negative_part(r), lo, hi, scale, extra + edge)
    _, vmax = _scan_max(V.negative_part, lo, hi, scale, extra + edge)
    vmax = max(vmax, float(V.negative_part(lo)))
    try:
        i_rint = V.radial_integral(lambda r, w: r * w)
    except QuadratureError as exc:
        raise DivergenceError(f"moment integral failed: {exc}") from exc
    return PotentialMoments(float(m_rmax), float(vmax), float(i_rint), float(r_m))


# -- factories ------------------------------------------------------------

def exponential(g: float, R: float = 1.0) -> RadialPotential:
    return RadialPotential(PotentialForm.EXPONENTIAL, g=g, R=R)


def poschl_teller(g: float, R: float = 1.0) -> RadialPotential:
    return RadialPotential(PotentialForm.POSCHL_TELLER, g=g, R=R)


def square_well(v0: float, r1: float, r2: float) -> RadialPotential:
    return RadialPotential(PotentialForm.SQUARE_WELL, v0=v0, r1=r1, r2=r2)


def harmonic_oscillator(k: float) -> RadialPotential:
    return RadialPotential(PotentialForm.HARMONIC_OSCILLATOR, k=k)


def tabulated(r, v) -> RadialPotential:
    return RadialPotential(PotentialForm.TABULATED,
                           samples_r=tuple(float(x) for x in r),
                           samples_v=tuple(float(x) for x in v))


def from_file(path) -> RadialPotential:
    """Read a two-column ``r V(r)`` text file; '#' starts a comment line."""
    rows = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DomainError(f"{path}:{lineno}: expected two columns")
        try:
            rows.append((float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise DomainError(f"{path}:{lineno}: {exc}") from None
    if not rows:
        raise DomainError(f"{path}: no samples")
    r, v = zip(*rows)
    return tabulated(r, v)


def from_family(form: str, g: float, R: float = 1.0) -> RadialPotential:
    """The -g v(r/R)/R family by short name ('exp' or 'pt')."""
    name = form.lower()
    if name in ("exp", "exponential"):
        return exponential(g, R)
    if name in ("pt", "poschl_teller", "poschl-teller"):
        return poschl_teller(g, R)
    raise DomainError(f"unknown potential family {form!r}")


# Module-level aliases mirroring the method names.

def evaluate(V: RadialPotential, r):
    return V.eval(r)


def negative_part(V: RadialPotential, r):
    return V.negative_part(r)


def truncate_at_energy(V: RadialPotential, kappa2: float) -> RadialPotential:
    return V.truncate_at_energy(kappa2)
