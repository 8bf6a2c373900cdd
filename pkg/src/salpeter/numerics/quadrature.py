"""Adaptive Gauss-Kronrod quadrature and randomised quasi-Monte Carlo."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.stats import qmc

from salpeter.errors import DomainError, QuadratureError

# Kronrod 15-point abscissae / weights and the embedded 7-point Gauss weights
_XGK = np.array([
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0,
])
_WGK = np.array([
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
])

NODES = np.concatenate([-_XGK[:-1], [0.0], _XGK[-2::-1]])
K_WEIGHTS = np.concatenate([_WGK[:-1], [_WGK[-1]], _WGK[-2::-1]])
G_WEIGHTS = np.zeros(15)
G_WEIGHTS[1:7:2] = _WG[:3]
G_WEIGHTS[7] = _WG[3]
G_WEIGHTS[9:14:2] = _WG[2::-1]

_EPMACH = np.finfo(float).eps
_UFLOW = np.finfo(float).tiny


@dataclass(frozen=True)
class QuadratureSpec:
    lower: float
    upper: float
    singular_points: Sequence[float] = ()
    rel_tol: float = 1e-9
    abs_tol: float = 0.0
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not math.isfinite(self.lower):
            raise DomainError("lower limit must be finite")
        if not self.lower < self.upper:
            raise DomainError("need lower < upper")
        if not self.rel_tol > 0 or self.abs_tol < 0:
            raise DomainError("rel_tol must be > 0 and abs_tol >= 0")
        for p in self.singular_points:
            if not self.lower <= p <= self.upper:
                raise DomainError(f"singular point {p} outside [{self.lower}, {self.upper}]")


@dataclass(frozen=True)
class MCEstimate:
    value: float
    std_error: float
    samples: int
    seed: int
    batch_means: tuple = field(default=(), repr=False, compare=False)


def _gk15(f, a, b):
    """Vectorised G7/K15 rule on intervals [a_i, b_i]; QUADPACK error heuristic."""
    centre = 0.5 * (a + b)
    half = 0.5 * (b - a)
    x = centre[:, None] + half[:, None] * NODES[None, :]
    fx = np.asarray(f(x.ravel()), dtype=float).reshape(x.shape)
    if not np.all(np.isfinite(fx)):
        bad = x[~np.isfinite(fx)][:3]
        raise QuadratureError(f"integrand is not finite at {bad}")
    resk = fx @ K_WEIGHTS
    resg = fx @ G_WEIGHTS
    reskh = 0.5 * resk
    resabs = np.abs(fx) @ K_WEIGHTS * np.abs(half)
    resasc = np.abs(fx - reskh[:, None]) @ K_WEIGHTS * np.abs(half)
    value = resk * half
    err = np.abs((resk - resg) * half)
    with np.errstate(divide="ignore", invalid="ignore"):
        scaled = resasc * np.minimum(1.0, (200.0 * err / resasc) ** 1.5)
    err = np.where((resasc != 0) & (err != 0), scaled, err)
    err = np.where(resabs > _UFLOW / (50 * _EPMACH), np.maximum(50 * _EPMACH * resabs, err), err)
    return value, err


def integrate(f: Callable, spec: QuadratureSpec, *, return_error: bool = False, initial_splits: int = 2):
    """Adaptive quadrature of a vectorised integrand ``f`` over ``spec``.

    Declared singular points become fixed breakpoints.  A semi-infinite
    range is mapped onto [0, 1) with x = lower + t / (1 - t).  Raises
    ``QuadratureError`` (with the best estimate attached) when the tolerance
    cannot be met within ``max_subdivisions`` intervals.
    """
    lo = float(spec.lower)
    infinite = math.isinf(spec.upper)
    points = sorted({float(p) for p in spec.singular_points if lo < p < spec.upper})
    if infinite:
        g = lambda t: f(lo + t / (1.0 - t)) / (1.0 - t) ** 2  # noqa: E731
        edges = [0.0] + [(p - lo) / (1.0 + p - lo) for p in points] + [1.0]
    else:
        g = f
        edges = [lo] + points + [float(spec.upper)]

    a_list, b_list = [], []
    for left, right in zip(edges[:-1], edges[1:]):
        cuts = np.linspace(left, right, initial_splits + 1)
        a_list.extend(cuts[:-1])
        b_list.extend(cuts[1:])
    a = np.array(a_list)
    b = np.array(b_list)
    val, err = _gk15(g, a, b)
    done_val = 0.0
    done_err = 0.0

    while True:
        total = done_val + val.sum()
        total_err = done_err + err.sum()
        target = max(spec.abs_tol, spec.rel_tol * abs(total))
        if total_err <= target:
            break
        if len(a) >= spec.max_subdivisions:
            raise QuadratureError("maximum number of subdivisions reached", total, total_err)
        # intervals that can no longer be split are frozen
        tiny = (b - a) <= 64 * _EPMACH * np.maximum(np.abs(a), np.abs(b))
        if np.any(tiny):
            done_val += val[tiny].sum()
            done_err += err[tiny].sum()
            a, b, val, err = a[~tiny], b[~tiny], val[~tiny], err[~tiny]
            if len(a) == 0:
                raise QuadratureError("roundoff limits the attainable accuracy", total, total_err)
            continue
        order = np.argsort(err)[::-1]
        cum = np.cumsum(err[order])
        remaining = err.sum() + done_err - cum
        n_split = int(np.searchsorted(-remaining, -0.5 * target)) + 1
        n_split = min(max(n_split, 1), len(a), spec.max_subdivisions - len(a) + 1)
        pick = order[:n_split]
        keep = np.ones(len(a), dtype=bool)
        keep[pick] = False
        mid = 0.5 * (a[pick] + b[pick])
        na = np.concatenate([a[pick], mid])
        nb = np.concatenate([mid, b[pick]])
        nval, nerr = _gk15(g, na, nb)
        a = np.concatenate([a[keep], na])
        b = np.concatenate([b[keep], nb])
        val = np.concatenate([val[keep], nval])
        err = np.concatenate([err[keep], nerr])

    if return_error:
        return float(total), float(total_err)
    return float(total)


def quad(f: Callable, lower: float, upper: float, *, singular_points=(), rel_tol=1e-9,
         abs_tol=0.0, max_subdivisions=2000, return_error=False):
    """Shorthand for ``integrate(f, QuadratureSpec(...))``."""
    spec = QuadratureSpec(lower, upper, tuple(singular_points), rel_tol, abs_tol, max_subdivisions)
    return integrate(f, spec, return_error=return_error)


def qmc_batches(f: Callable, dims: int, box, samples: int, seed: int, batches: int = 16):
    """Batch means of ``f`` over independently scrambled Sobol' point sets.

    ``f`` maps an (k, dims) array of points to (k,) or (k, c) values.  Every
    batch draws its scrambling from its own child of ``SeedSequence(seed)``,
    so the result does not depend on evaluation order.
    """
    if len(box) != dims:
        raise DomainError("box must give (lower, upper) for every dimension")
    per_batch = max(1, samples // batches)
    lows = np.array([float(lo) for lo, _ in box])
    highs = np.array([float(hi) for _, hi in box])
    if not np.all(np.isfinite(lows)) or np.any(highs <= lows):
        raise DomainError("invalid integration box")
    infinite = np.isinf(highs)
    children = np.random.SeedSequence(seed).spawn(batches)
    means = []
    m = int(math.log2(per_batch)) if per_batch & (per_batch - 1) == 0 else None
    for child in children:
        engine = qmc.Sobol(d=dims, scramble=True, seed=np.random.default_rng(child))
        u = engine.random_base2(m) if m is not None else engine.random(per_batch)
        x = np.empty_like(u)
        jac = np.ones(per_batch)
        fin = ~infinite
        x[:, fin] = lows[fin] + u[:, fin] * (highs[fin] - lows[fin])
        jac *= np.prod(highs[fin] - lows[fin])
        if np.any(infinite):
            t = u[:, infinite]
            x[:, infinite] = lows[infinite] + t / (1.0 - t)
            jac = jac * np.prod(1.0 / (1.0 - t) ** 2, axis=1)
        vals = np.asarray(f(x), dtype=float)
        vals = vals * (jac if vals.ndim == 1 else jac[:, None])
        means.append(vals.mean(axis=0))
    return np.array(means), per_batch * batches


def integrate_nd(f: Callable, dims: int, box, samples: int, seed: int, batches: int = 16) -> MCEstimate:
    """Randomised QMC estimate of a ``dims``-dimensional integral (3 <= dims <= 8).

    ``std_error`` is the standard error of the mean over the scrambled
    batches.  Identical ``seed`` and ``samples`` give bit-identical values.
    """
    if not 3 <= dims <= 8:
        raise DomainError("integrate_nd supports 3 <= dims <= 8")
    if samples < 2 * batches:
        raise DomainError(f"need at least {2 * batches} samples")
    means, used = qmc_batches(f, dims, box, samples, seed, batches)
    value = float(means.mean())
    std_error = float(means.std(ddof=1) / math.sqrt(len(means)))
    return MCEstimate(value, std_error, used, int(seed), tuple(float(v) for v in means))
