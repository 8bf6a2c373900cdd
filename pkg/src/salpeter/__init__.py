"""Bound-state counting for the spinless Salpeter equation.

Upper limits on the number of (l-wave) bound states of
``[alpha (sqrt(p^2 + m^2) - m) + V(r)] psi = E psi`` for central potentials,
together with a variational eigensolver that provides the exact counts and
critical couplings the limits are checked against.
"""

__version__ = "0.1.0"
