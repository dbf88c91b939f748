"""
Pre-Schwarzian and Schwarzian derivatives.

Two routes are provided and cross-checked in the tests:

* series route: ``P_f = f''/f'`` and ``S_f = P_f' - P_f^2 / 2`` computed on
  truncated Taylor series of ``f``;
* pointwise route: for ``f`` in the class, ``1 + z f''/f' = (1 + A w)/(1 - w)``
  with a Schwarz function ``w``, and ``S_f(z)`` depends only on ``z``,
  ``w(z)`` and ``w'(z)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InadmissibleOmegaValue, NotLocallyUnivalentAtOrigin, OmegaHitsOne
from .grid import MEMBERSHIP_GRID
from .series import ComplexSeries, derivative, div, eval_series, mul

ADMISSIBILITY_SLACK = 1e-12
MEMBERSHIP_FLOOR = -1e-9


def _check_univalent_at_origin(f):
    if f.order < 3:
        raise ValueError("need order >= 3 to form a Schwarzian")
    if f.coeffs[1] == 0:
        raise NotLocallyUnivalentAtOrigin("f'(0) = 0")


def preschwarzian_series(f):
    """Series of ``f''/f'``; its order is ``f.order - 2``."""
    _check_univalent_at_origin(f)
    d1 = derivative(f)
    d2 = derivative(d1)
    # normalize by f'(0) so that scaling f leaves the quotient unchanged
    c1 = d1.coeffs[0]
    return div(d2 / c1, d1 / c1)


def schwarzian_from_pre(pre):
    """``P' - P^2 / 2`` for a pre-Schwarzian series ``P``."""
    dp = derivative(pre)
    return dp - 0.5 * mul(pre, pre)


def schwarzian_series(f):
    """Series of the Schwarzian derivative of ``f``; order ``f.order - 3``."""
    return schwarzian_from_pre(preschwarzian_series(f))


@dataclass(frozen=True)
class OmegaPointData:
    """Values ``w = omega(z)`` and ``wprime = omega'(z)`` of a Schwarz function at ``z``.

    Validated on construction against Schwarz's lemma and Dieudonne's disk.
    """

    z: complex
    w: complex
    wprime: complex

    def __post_init__(self):
        z, w, wp = complex(self.z), complex(self.w), complex(self.wprime)
        r = abs(z)
        if not 0.0 < r < 1.0:
            raise InadmissibleOmegaValue(f"need 0 < |z| < 1, got |z|={r}")
        if abs(w) > r + ADMISSIBILITY_SLACK:
            raise InadmissibleOmegaValue(f"|w|={abs(w)} exceeds |z|={r}")
        radius = max(r * r - abs(w) ** 2, 0.0) / (r * (1.0 - r * r))
        if abs(wp - w / z) > radius + ADMISSIBILITY_SLACK:
            raise InadmissibleOmegaValue(
                f"w'={wp} lies outside the Dieudonne disk about {w / z} of radius {radius}"
            )


def schwarzian_omega_values(z, w, wprime, A):
    """Vectorized ``S_f`` in terms of ``(z, w, w')``.

    ``(A+1) [ (w' - w/z) / (z (1-w)^2) - (A-1) w^2 / (2 z^2 (1-w)^2) ]``
    """
    z = np.asarray(z, dtype=np.complex128)
    w = np.asarray(w, dtype=np.complex128)
    wprime = np.asarray(wprime, dtype=np.complex128)
    one_w2 = (1.0 - w) ** 2
    return (A + 1.0) * (
        (wprime - w / z) / (z * one_w2) - (A - 1.0) * w * w / (2.0 * z * z * one_w2)
    )


def schwarzian_from_omega(pt, p):
    if abs(1.0 - complex(pt.w)) < 1e-14:
        raise OmegaHitsOne(f"omega(z) = 1 at z={pt.z}")
    return complex(schwarzian_omega_values(pt.z, pt.w, pt.wprime, p.A))


def preschwarzian_omega_values(z, w, A):
    """``(A + 1) w / (z (1 - w))``."""
    z = np.asarray(z, dtype=np.complex128)
    w = np.asarray(w, dtype=np.complex128)
    return (A + 1.0) * w / (z * (1.0 - w))


def membership_margin(f, p, grid=MEMBERSHIP_GRID):
    """Minimum of ``Re{e^{i alpha}(1 + z P_f(z))} - beta cos(alpha)`` over ``grid``.

    A nonnegative result (or one above :data:`MEMBERSHIP_FLOOR`) is numerical
    evidence of membership, never a proof.
    """
    pre = preschwarzian_series(f)
    z = grid.points()
    pz = eval_series(pre, z)
    rot = complex(math.cos(p.alpha), math.sin(p.alpha))
    expr = (rot * (1.0 + z * pz)).real - p.beta * math.cos(p.alpha)
    return float(np.min(expr))


def is_member(f, p, grid=MEMBERSHIP_GRID, floor=MEMBERSHIP_FLOOR):
    return membership_margin(f, p, grid) >= floor


def mobius_series(a, b, c, d, order):
    """Taylor series of ``(a z + b)/(c z + d)``; requires ``d != 0``."""
    num = ComplexSeries.polynomial([b, a], order)
    den = ComplexSeries.polynomial([d, c], order)
    return div(num, den)
