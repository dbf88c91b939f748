"""
Brute-force verification of the pointwise Schwarzian bound.

For a Schwarz function ``w`` and a fixed ``z0 != 0``, Dieudonne's lemma says
the attainable values of ``w'(z0)`` given ``w(z0)`` fill the closed disk with
center ``w(z0)/z0`` and radius ``(|z0|^2 - |w(z0)|^2) / (|z0| (1 - |z0|^2))``.
Sweeping ``w(z0)`` over ``|w| <= |z0|`` and ``w'(z0)`` over that disk therefore
covers every value ``S_f(z0)`` can take in the class. The sweep here is
independent of the closed-form bounds it is used to check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import g_profile, h_gate, s0
from .errors import InadmissibleOmegaValue
from .schwarzian import schwarzian_omega_values

DEFAULT_RESOLUTION = (256, 256, 256)


def dieudonne_disk(z0, w):
    """Center and radius of the disk of admissible ``w'(z0)``."""
    z0 = complex(z0)
    w = complex(w)
    r = abs(z0)
    if not 0.0 < r < 1.0:
        raise InadmissibleOmegaValue(f"need 0 < |z0| < 1, got {z0!r}")
    if abs(w) > r:
        raise InadmissibleOmegaValue(f"|w|={abs(w)!r} exceeds |z0|={r!r}")
    return w / z0, (r * r - abs(w) ** 2) / (r * (1.0 - r * r))


@dataclass(frozen=True)
class SweepResult:
    z0: complex
    value: float
    w: complex
    wprime: complex
    on_rim: bool
    resolution: tuple


def sweep_pointwise(z0, p, resolution=DEFAULT_RESOLUTION, allow_complex=False):
    """Maximize ``|S_f(z0)|`` over a grid of admissible ``(w(z0), w'(z0))``.

    ``S_f`` is affine in ``w'`` for fixed ``w``, so by the maximum modulus
    principle its largest modulus over the Dieudonne disk is on the boundary
    circle; only that circle is swept. ``resolution = (m, nw, nd)`` gives the
    number of moduli of ``w`` (endpoints ``0`` and ``|z0|`` included), phases of
    ``w`` and phases on the circle.
    """
    z0 = complex(z0)
    if not allow_complex and (z0.imag != 0.0 or z0.real <= 0.0):
        raise ValueError("only real z0 in (0, 1) unless allow_complex=True")
    r = abs(z0)
    if not 0.0 < r < 1.0:
        raise ValueError(f"need 0 < |z0| < 1, got {z0!r}")
    m, nw, nd = resolution
    moduli = np.linspace(0.0, r, m)
    wphase = np.exp(2j * math.pi * np.arange(nw) / nw)
    dphase = np.exp(2j * math.pi * np.arange(nd) / nd)
    best = (-1.0, 0j, 0j, False)
    A = p.A
    for s in moduli:
        w = s * wphase
        radius = max(r * r - s * s, 0.0) / (r * (1.0 - r * r))
        wp = (w / z0)[:, None] + radius * dphase[None, :]
        vals = np.abs(schwarzian_omega_values(z0, w[:, None], wp, A))
        k = int(np.argmax(vals))
        if vals.flat[k] > best[0]:
            a, c = divmod(k, nd)
            best = (float(vals.flat[k]), complex(w[a]), complex(wp[a, c]), radius > 0)
    value, w, wp, on_rim = best
    return SweepResult(z0, value, w, wp, on_rim, tuple(resolution))


def brute_force_pointwise_max(z0, p, resolution=DEFAULT_RESOLUTION, allow_complex=False):
    return sweep_pointwise(z0, p, resolution, allow_complex).value


@dataclass(frozen=True)
class InnerMaxReport:
    r: float
    classification: str  # "interior" or "endpoint"
    s_argmax: float
    s_expected: float
    g_max: float
    g_at_zero: float
    step: float
    consistent: bool
    unimodal: bool


def verify_inner_max(p, r, n=100_001):
    """Compare the grid argmax of the profile ``g`` on ``[0, r]`` with its analytic location.

    When ``h(r) > 0`` the maximum is at the critical point ``s0(r)`` and ``g``
    rises then falls. Otherwise ``g`` is nondecreasing and peaks at ``s = r``,
    with ``g(r) >= g(0)``.
    """
    if not 0.0 < r < 1.0:
        raise ValueError(f"r={r!r} must lie in (0, 1)")
    s = np.linspace(0.0, r, n)
    g = g_profile(p, r, s)
    k = int(np.argmax(g))
    step = r / (n - 1)
    diffs = np.diff(g)
    # discrete differences near a flat peak can have either sign at rounding level
    slack = 1e-12 * max(1.0, float(np.max(np.abs(g))))
    if h_gate(p, r) > 0:
        expected = s0(p, r)
        kind = "interior"
        consistent = abs(s[k] - expected) <= step
        kc = int(np.searchsorted(s, expected))
        unimodal = bool(np.all(diffs[: max(kc - 1, 0)] >= -slack) and np.all(diffs[kc + 1 :] <= slack))
    else:
        expected = r
        kind = "endpoint"
        consistent = abs(s[k] - r) <= step and g[-1] >= g[0]
        unimodal = bool(np.all(diffs >= -slack))
    return InnerMaxReport(
        r=r,
        classification=kind,
        s_argmax=float(s[k]),
        s_expected=float(expected),
        g_max=float(g[k]),
        g_at_zero=float(g[0]),
        step=step,
        consistent=bool(consistent),
        unimodal=unimodal,
    )
