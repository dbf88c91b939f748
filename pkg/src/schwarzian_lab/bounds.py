"""
Parameter algebra of the class ``S_alpha(beta)`` and its closed-form bounds.

For ``|alpha| < pi/2`` and ``0 <= beta < 1`` a normalized ``f`` belongs to the
class when ``Re{e^{i alpha} (1 + z f''/f')} > beta cos(alpha)`` on the disk,
equivalently ``1 + z f''/f'`` is subordinate to ``(1 + A z)/(1 - z)`` with
``A = e^{-i alpha} (e^{-i alpha} - 2 beta cos alpha)``.

Everything here is closed-form arithmetic in ``alpha`` and ``beta``. The key
derived quantity is the discriminant ``d = sin^2(alpha) + beta^2 cos^2(alpha)``:
``|A - 1| = 2 sqrt(d)`` and ``|A + 1| = 2 (1 - beta) cos(alpha)``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CriticalPointOutsideRange, ParamOutOfRange

REGIME_THRESHOLD = 0.25


class Regime(str, enum.Enum):
    SMALL_D = "SmallD"
    LARGE_D = "LargeD"


class Branch(str, enum.Enum):
    INTERIOR = "Interior"
    BOUNDARY = "Boundary"


@dataclass(frozen=True)
class ClassParams:
    """``(alpha, beta)`` together with every derived constant.

    Build with :func:`make_params`; the constructor does not validate.
    """

    alpha: float
    beta: float
    A: complex = field(init=False)
    sqrt_d: float = field(init=False)
    d: float = field(init=False)
    lam: float | None = field(init=False)
    regime: Regime = field(init=False)

    def __post_init__(self):
        a, b = self.alpha, self.beta
        ea = complex(math.cos(a), -math.sin(a))
        A = ea * (ea - 2.0 * b * math.cos(a))
        # hypot avoids cancellation when d is tiny
        sd = math.hypot(math.sin(a), b * math.cos(a))
        d = sd * sd
        regime = Regime.LARGE_D if d > REGIME_THRESHOLD else Regime.SMALL_D
        lam = (1.0 - sd) / sd if sd > 0 else None
        if regime is Regime.SMALL_D:
            lam = None
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "sqrt_d", sd)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "regime", regime)

    @property
    def abs_a_plus_1(self):
        """``|A + 1| = 2 (1 - beta) cos(alpha)``."""
        return 2.0 * (1.0 - self.beta) * math.cos(self.alpha)

    @property
    def abs_a_minus_1(self):
        """``|A - 1| = 2 sqrt(d)``."""
        return 2.0 * self.sqrt_d

    @property
    def scale(self):
        """``2 (1 - beta) cos(alpha)``, the common prefactor of every bound."""
        return self.abs_a_plus_1

    def as_dict(self):
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "A_re": self.A.real,
            "A_im": self.A.imag,
            "d": self.d,
            "regime": self.regime.value,
            "lambda": self.lam,
        }


def make_params(alpha, beta):
    alpha = float(alpha)
    beta = float(beta)
    if not (math.isfinite(alpha) and abs(alpha) < math.pi / 2):
        raise ParamOutOfRange(f"alpha={alpha!r} must satisfy |alpha| < pi/2")
    if not (math.isfinite(beta) and 0.0 <= beta < 1.0):
        raise ParamOutOfRange(f"beta={beta!r} must lie in [0, 1)")
    return ClassParams(alpha, beta)


def h_gate(p, t):
    """``2 - |A - 1| (1 + t)``; positive exactly when ``s0(t) < t``."""
    return 2.0 - p.abs_a_minus_1 * (1.0 + np.asarray(t, dtype=float))


def s0(p, r):
    """Critical point ``2 r^2 / (2 - |A-1| (1 - r^2))`` of the profile ``g``."""
    if not 0.0 < r < 1.0:
        raise CriticalPointOutsideRange(f"r={r!r} must lie in (0, 1)")
    if h_gate(p, r) <= 0:
        raise CriticalPointOutsideRange(
            f"h(r) <= 0 at r={r!r}: the critical point is not below r"
        )
    return 2.0 * r * r / (2.0 - p.abs_a_minus_1 * (1.0 - r * r))


def g_profile(p, r, s):
    """The one-variable majorant of ``|S_f(z)| / |A + 1|`` at ``|z| = r``, ``|omega(z)| = s``.

    Vectorized in ``s``. ``r = 0`` is not allowed (the expression is 0/0).
    """
    s = np.asarray(s, dtype=float)
    r2 = r * r
    num = 2.0 * r2 - s * s * (2.0 - p.abs_a_minus_1 * (1.0 - r2))
    return num / (2.0 * r2 * (1.0 - r2) * (1.0 - s) ** 2)


def interior_branch(p, r):
    """First-line bound, ``|A+1| g(s0)``; vectorized in ``r``."""
    r = np.asarray(r, dtype=float)
    q = 1.0 - r * r
    return p.scale * (1.0 - q * p.sqrt_d) / (q * q * (1.0 - p.sqrt_d))


def boundary_branch(p, r):
    """Second-line bound, ``|A+1| |A-1| / (2 (1-r)^2)``; vectorized in ``r``."""
    r = np.asarray(r, dtype=float)
    return p.scale * p.sqrt_d / (1.0 - r) ** 2


@dataclass(frozen=True)
class PointwiseBound:
    r: float
    value: float
    branch: Branch


def pointwise_bound(p, r):
    """Sharp upper bound on ``|S_f(z)|`` for ``|z| = r`` over the whole class."""
    r = float(r)
    if not 0.0 <= r < 1.0:
        raise ValueError(f"r={r!r} must lie in [0, 1)")
    if p.regime is Regime.LARGE_D and r >= p.lam:
        return PointwiseBound(r, float(boundary_branch(p, r)), Branch.BOUNDARY)
    return PointwiseBound(r, float(interior_branch(p, r)), Branch.INTERIOR)


def pointwise_bound_values(p, r):
    """Array version of :func:`pointwise_bound` returning only the values."""
    r = np.asarray(r, dtype=float)
    out = interior_branch(p, r)
    if p.regime is Regime.LARGE_D:
        out = np.where(r >= p.lam, boundary_branch(p, r), out)
    return out


def interior_supremum(p):
    """Supremum of ``(1-r^2)^2`` times the interior branch over its range of validity.

    Over ``[0, 1)`` for small ``d`` and over ``[0, lambda)`` otherwise.
    """
    if p.regime is Regime.SMALL_D:
        return p.scale / (1.0 - p.sqrt_d)
    q = 1.0 - p.lam**2
    return p.scale * (1.0 - q * p.sqrt_d) / (1.0 - p.sqrt_d)


def boundary_supremum(p):
    """``8 (1 - beta) cos(alpha) sqrt(d) = 2 |A^2 - 1|``."""
    return 4.0 * p.scale * p.sqrt_d


def schwarzian_norm_bound(p):
    if p.regime is Regime.SMALL_D:
        return p.scale / (1.0 - p.sqrt_d)
    return boundary_supremum(p)


def preschwarzian_norm_bound(p):
    return 2.0 * p.scale


def regime_boundary_beta(alpha):
    """``beta`` on the curve ``d = 1/4`` for ``|alpha| <= pi/6``, else ``None``."""
    s2 = math.sin(alpha) ** 2
    if s2 > REGIME_THRESHOLD:
        return None
    return math.sqrt(max(REGIME_THRESHOLD - s2, 0.0)) / math.cos(alpha)


def regime_curve(n=201):
    """Points ``(alpha, beta)`` tracing ``d = 1/4`` for ``alpha`` in ``[-pi/6, pi/6]``."""
    alphas = np.linspace(-math.pi / 6, math.pi / 6, n)
    betas = np.array([regime_boundary_beta(a) for a in alphas])
    return alphas, betas
