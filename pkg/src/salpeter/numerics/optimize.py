"""Small one-dimensional optimisation helpers."""

from __future__ import annotations

import math

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_max(f, a: float, b: float, xtol: float = 1e-10, max_iter: int = 200):
    """Maximise a unimodal ``f`` on [a, b]; returns ``(x, f(x))``."""
    if b < a:
        a, b = b, a
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if b - a <= xtol:
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    return (c, fc) if fc >= fd else (d, fd)


def golden_section_min(f, a: float, b: float, xtol: float = 1e-10, max_iter: int = 200):
    """Minimise a unimodal ``f`` on [a, b]; returns ``(x, f(x))``."""
    x, v = golden_section_max(lambda t: -f(t), a, b, xtol, max_iter)
    return x, -v
