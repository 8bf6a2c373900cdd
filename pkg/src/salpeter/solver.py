"""Rayleigh-Ritz solver for the radial spinless Salpeter equation.

The Hamiltonian is ``alpha (sqrt(p^2 + m^2) - m) + V(r)`` in a single
partial wave.  The basis is a geometric family of Gaussians
``u_i(r) = N_i r^(l+1) exp(-a_i r^2)`` whose momentum-space partners are
again Gaussians, so the kinetic matrix is a one-dimensional momentum
integral and the potential matrix a one-dimensional radial integral.  Both
are evaluated with Gauss-Legendre panels on a logarithmic grid.

At zero energy the Schrodinger-like problem ``T x = g W x`` with
``W = -V(g=1)`` gives the critical coupling directly as ``1 / mu_max`` of
the generalized eigenproblem ``W x = mu T x``; by the variational principle
this value approaches the exact one from above as the basis grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh
from scipy.special import roots_legendre

from salpeter.errors import BracketError, ConvergenceError, DomainError
from salpeter.potentials import RadialPotential, from_family

_GL_X, _GL_W = roots_legendre(16)
_PANEL = 0.5
_OVERLAP_CUT = 1e-11
_KINETIC_CUT = 1e-13
G_MAX = 1e4


@dataclass(frozen=True)
class VariationalBasis:
    """``size`` Gaussians with widths r_i log-spaced over ``scale * [lo, hi]``."""

    ell: int
    size: int = 48
    scale: float = 1.0
    lo: float = 1e-3
    hi: float = 1e4

    def __post_init__(self):
        if int(self.ell) != self.ell or self.ell < 0:
            raise DomainError("ell must be an integer >= 0")
        if not 8 <= self.size <= 400:
            raise DomainError("basis size must lie in [8, 400]")
        if not (self.scale > 0 and 0 < self.lo < self.hi):
            raise DomainError("basis scale and span must be positive")

    @property
    def widths(self) -> np.ndarray:
        return self.scale * np.geomspace(self.lo, self.hi, self.size)

    @property
    def exponents(self) -> np.ndarray:
        return 1.0 / self.widths ** 2

    def doubled(self) -> "VariationalBasis":
        """Nested refinement: every old width kept, one new width between neighbours."""
        return replace(self, size=min(2 * self.size - 1, 400))

    def extended(self, decades: float = 1.0) -> "VariationalBasis":
        """Same spacing, span pushed outwards by ``decades``."""
        step = math.log10(self.hi / self.lo) / (self.size - 1)
        extra = int(round(decades / step))
        return replace(self, size=min(self.size + extra, 400), hi=self.hi * 10 ** (extra * step))


@dataclass(frozen=True)
class SpectrumResult:
    binding_energies: tuple
    basis: VariationalBasis
    convergence_delta: float


@dataclass(frozen=True)
class CriticalCouplingResult:
    g_c_exact: float
    bracket: tuple
    ell: int
    beta: float
    rel_tol: float


def _gl_grid(x_lo, x_hi, breaks=()):
    edges = [x_lo]
    for b in sorted(b for b in breaks if x_lo < b < x_hi):
        edges.append(b)
    edges.append(x_hi)
    nodes, weights = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        k = max(1, int(math.ceil((b - a) / _PANEL)))
        cuts = np.linspace(a, b, k + 1)
        half = 0.5 * np.diff(cuts)
        mid = 0.5 * (cuts[:-1] + cuts[1:])
        nodes.append((mid[:, None] + half[:, None] * _GL_X[None, :]).ravel())
        weights.append((half[:, None] * _GL_W[None, :]).ravel())
    return np.concatenate(nodes), np.concatenate(weights)


def _log_norm(ell, a):
    # ln N with N^2 = 2 (2a)^(l+3/2) / Gamma(l+3/2)
    return 0.5 * (math.log(2.0) + (ell + 1.5) * np.log(2.0 * a) - math.lgamma(ell + 1.5))


def overlap_matrix(basis: VariationalBasis) -> np.ndarray:
    a = basis.exponents
    gm = np.sqrt(np.outer(a, a))
    return (2.0 * gm / (a[:, None] + a[None, :])) ** (basis.ell + 1.5)


def _radial_values(basis, r):
    a = basis.exponents
    ell = basis.ell
    ln = _log_norm(ell, a)[:, None] + (ell + 1) * np.log(r)[None, :] - a[:, None] * r[None, :] ** 2
    return np.exp(ln)


def potential_matrix(basis: VariationalBasis, V: RadialPotential) -> np.ndarray:
    """<u_i | V | u_j> of the untruncated potential."""
    w = basis.widths
    breaks = [math.log(p) for p in _potential_breaks(V)]
    x, wx = _gl_grid(math.log(w[0]) - 12.0, math.log(w[-1]) + 3.5, breaks)
    r = np.exp(x)
    phi = _radial_values(basis, r)
    vals = np.asarray(V.eval(r), dtype=float)
    return (phi * (wx * r * vals)[None, :]) @ phi.T


def _potential_breaks(V):
    if V.form.value == "square_well":
        return [p for p in (V.r1, V.r2) if p > 0]
    if V.form.value == "tabulated":
        return [p for p in V.samples_r if p > 0]
    return []


def kinetic_matrix(basis: VariationalBasis, mass: float, alpha: int) -> np.ndarray:
    """<u_i | alpha (sqrt(p^2 + m^2) - m) | u_j> by momentum-space quadrature."""
    a = basis.exponents
    ell = basis.ell
    x, wx = _gl_grid(math.log(2.0 * math.sqrt(a[-1])) - 12.0, math.log(2.0 * math.sqrt(a[0])) + 3.5)
    p = np.exp(x)
    # momentum partner: M_i p^(l+1) exp(-p^2 / (4 a_i)), M_i^2 = 2 / (Gamma(l+3/2) (2a)^(l+3/2))
    ln_m = 0.5 * (math.log(2.0) - math.lgamma(ell + 1.5) - (ell + 1.5) * np.log(2.0 * a))
    chi = np.exp(ln_m[:, None] + (ell + 1) * x[None, :] - p[None, :] ** 2 / (4.0 * a[:, None]))
    kin = p * p / (np.sqrt(p * p + mass * mass) + mass)
    return alpha * (chi * (wx * p * kin)[None, :]) @ chi.T


def _orthonormalizer(s: np.ndarray) -> np.ndarray:
    vals, vecs = np.linalg.eigh(s)
    keep = vals > _OVERLAP_CUT * vals[-1]
    return vecs[:, keep] / np.sqrt(vals[keep])[None, :]


def _eigenvalues(h, s):
    x = _orthonormalizer(s)
    hp = x.T @ h @ x
    return np.linalg.eigvalsh(0.5 * (hp + hp.T))


def _spectrum(V, ell, beta, alpha, basis):
    h = kinetic_matrix(basis, beta, alpha) + potential_matrix(basis, V)
    return _eigenvalues(h, overlap_matrix(basis))


def solve_spectrum(V: RadialPotential, ell: int, beta: float, alpha: int,
                   basis: VariationalBasis | None = None, tol: float | None = None) -> SpectrumResult:
    """Variational binding energies (ascending) of one partial wave.

    ``convergence_delta`` is the drop of the lowest eigenvalue when the basis
    is refined; ``tol`` turns a larger drop into a ``ConvergenceError``.
    """
    _check(ell, beta, alpha)
    if basis is None:
        basis = default_basis(V, ell)
    elif basis.ell != ell:
        basis = replace(basis, ell=ell)
    e = _spectrum(V, ell, beta, alpha, basis)
    e_fine = _spectrum(V, ell, beta, alpha, basis.doubled())
    delta = max(float(e[0] - e_fine[0]), 0.0)
    if tol is not None and delta > tol:
        raise ConvergenceError(f"lowest eigenvalue changed by {delta:.3g} under basis refinement")
    return SpectrumResult(tuple(float(v) for v in e), basis, delta)


def default_basis(V: RadialPotential, ell: int) -> VariationalBasis:
    if V.confining:
        return VariationalBasis(ell, 40, 1.0 / V.k, 1e-3, 30.0)
    return VariationalBasis(ell, 48, V.length_scale, 1e-3, 1e4)


def _check(ell, beta, alpha):
    if alpha not in (1, 2):
        raise DomainError("alpha must be 1 or 2")
    if not beta >= 0:
        raise DomainError("beta must be >= 0")
    if int(ell) != ell or ell < 0:
        raise DomainError("ell must be an integer >= 0")


def _critical_g(V1, ell, beta, alpha, basis):
    """1 / mu_max of W x = mu T x, with W = -V at unit strength."""
    x = _orthonormalizer(overlap_matrix(basis))
    t = x.T @ kinetic_matrix(basis, beta, alpha) @ x
    w = -(x.T @ potential_matrix(basis, V1) @ x)
    tv, tvec = np.linalg.eigh(0.5 * (t + t.T))
    keep = tv > _KINETIC_CUT * tv[-1]
    y = tvec[:, keep] / np.sqrt(tv[keep])[None, :]
    mu = np.linalg.eigvalsh(y.T @ w @ y)
    if not mu[-1] > 0:
        return math.inf
    return 1.0 / float(mu[-1])


def critical_coupling_exact(V_form, ell: int, beta: float, alpha: int, rel_tol: float = 1e-3,
                            basis: VariationalBasis | None = None) -> CriticalCouplingResult:
    """Strength at which the first l-wave bound state appears (R = 1).

    ``V_form`` is a family name ('exp', 'pt') or a potential whose strength
    is scaled.  The value is the variational (upper) estimate; the bracket's
    lower end subtracts the change observed under basis refinement, both in
    density and in radial extent.
    """
    _check(ell, beta, alpha)
    if rel_tol < 1e-4:
        raise DomainError("rel_tol must be >= 1e-4")
    V1 = from_family(V_form, 1.0) if isinstance(V_form, str) else V_form
    if basis is None:
        basis = default_basis(V1, ell)
    basis = replace(basis, ell=ell)
    g = _critical_g(V1, ell, beta, alpha, basis)
    for _ in range(4):
        g_dense = _critical_g(V1, ell, beta, alpha, basis.doubled())
        g_wide = _critical_g(V1, ell, beta, alpha, basis.extended(1.0))
        g_ref = min(g, g_dense, g_wide)
        delta = max(g - g_dense, g - g_wide, 0.0)
        if delta <= 0.25 * rel_tol * g_ref:
            break
        basis = basis.doubled().extended(1.0) if basis.size < 200 else basis.extended(1.0)
        g = g_ref
    else:
        raise ConvergenceError(f"critical coupling not converged (change {delta:.3g})")
    if not math.isfinite(g_ref) or g_ref * V1.g > G_MAX:
        raise BracketError(f"no bound state below g = {G_MAX:g}")
    g_ref *= V1.g
    low = g_ref * (1.0 - max(4.0 * delta / g_ref if g_ref else 0.0, 1e-12))
    return CriticalCouplingResult(g_ref, (low, g_ref), ell, beta, rel_tol)


@lru_cache(maxsize=4096)
def _critical_cached(form: str, ell: int, beta: float, alpha: int) -> float:
    return critical_coupling_exact(form, ell, beta, alpha).g_c_exact


def l_exact(V_form: str, g: float, beta: float, alpha: int, ell_max: int = 400) -> int:
    """Largest l that binds at strength ``g``; -1 when not even l = 0 binds."""
    if not g > 0:
        raise DomainError("g must be > 0")
    form = from_family(V_form, 1.0).form.value
    ell = -1
    while ell < ell_max:
        if _critical_cached(form, ell + 1, float(beta), alpha) >= g:
            return ell
        ell += 1
    raise ConvergenceError(f"angular momentum scan exceeded l = {ell_max}")


def count_states_below(V: RadialPotential, ell: int, beta: float, alpha: int, energy: float,
                       basis: VariationalBasis | None = None) -> int:
    """Number of variational eigenvalues strictly below ``energy``.

    The count is repeated with a refined basis; a count that keeps changing
    raises ``ConvergenceError``.
    """
    _check(ell, beta, alpha)
    if not V.confining and energy > 0:
        raise DomainError("energy must be <= 0 for potentials with a continuum")
    if basis is None:
        basis = default_basis(V, ell)
    basis = replace(basis, ell=ell)
    counts = []
    for _ in range(3):
        e = _spectrum(V, ell, beta, alpha, basis)
        counts.append(int(np.sum(e < energy)))
        if len(counts) >= 2 and counts[-1] == counts[-2]:
            return counts[-1]
        basis = basis.doubled()
    raise ConvergenceError(f"state count not stable under basis refinement: {counts}")
