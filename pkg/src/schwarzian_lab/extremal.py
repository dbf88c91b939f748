"""
Extremal functions attaining the Schwarzian bounds.

Two families are built, both normalized by ``f(0) = 0`` and ``f'(0) = 1``.

``BlaschkeZ0``
    ``1 + z f''/f' = (1 + A phi)/(1 - phi)`` where ``phi`` is a degree-2
    Blaschke product fixing the origin,
    ``phi(z) = -rho * z (z - b) / (1 - conj(b) z)`` with ``|rho| = 1`` and
    ``|b| < 1``. For a real point ``z0`` the product is chosen so that
    ``phi(z0) = s0(|z0|)`` and ``phi'(z0) - phi(z0)/z0`` sits on the rim of
    Dieudonne's disk. Those two facts make ``|S_f(z0)|`` equal the pointwise
    bound.

``HalfPlane``
    ``phi(z) = z``, i.e. ``f' = (1 - z)^{-(A+1)}``.

On the rim, the phase of ``phi'(z0) - phi(z0)/z0`` must line up with
``1 - A``. The real-``b`` choice (``rho = 1``) lines it up only when
``A = 1``. For other parameters it is still a class member but stops short of
the bound; it is available as ``phase="real"`` for comparison.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace

import numpy as np

from .bounds import h_gate, s0
from .errors import BlaschkeParamOutOfDisk, ExtremalNotDefined
from .schwarzian import preschwarzian_omega_values, schwarzian_omega_values
from .series import DEFAULT_ORDER, ComplexSeries, div, exp_series, integrate, power


class ExtremalKind(str, enum.Enum):
    BLASCHKE_Z0 = "BlaschkeZ0"
    HALF_PLANE = "HalfPlane"


@dataclass(frozen=True)
class ExtremalSpec:
    kind: ExtremalKind
    params: object
    z0: float | None = None
    b: complex | None = None
    rho: complex = 1.0
    phase: str = "aligned"

    def perturbed(self, delta):
        """Copy with the Blaschke zero shifted by ``delta`` (fault injection)."""
        if self.kind is not ExtremalKind.BLASCHKE_Z0:
            raise ValueError("only Blaschke extremals carry a zero to perturb")
        return replace(self, b=self.b + delta)


def _check_z0(z0, p):
    if not -1.0 < z0 < 1.0:
        raise ExtremalNotDefined(f"z0={z0!r} must lie in (-1, 1)")
    if h_gate(p, abs(z0)) <= 0:
        raise ExtremalNotDefined(
            f"h(|z0|) <= 0 at z0={z0!r}: use the half-plane extremal beyond lambda"
        )


def blaschke_b(z0, p):
    """Real Blaschke zero placing ``-z(z-b)/(1-bz)`` at ``s0(|z0|)`` when ``z = z0``."""
    z0 = float(z0)
    _check_z0(z0, p)
    q = p.abs_a_minus_1 * (1.0 - z0 * z0)
    b = z0 * (4.0 - q) / (2.0 * (1.0 + z0 * z0) - q)
    if abs(b) >= 1.0:
        raise BlaschkeParamOutOfDisk(f"b={b!r} for z0={z0!r}")
    return b


def _alignment(p):
    """Unit complex number along ``1 - A`` (``-1`` when ``A = 1``)."""
    am1 = p.A - 1.0
    if abs(am1) == 0.0:
        return -1.0 + 0j
    return -am1 / abs(am1)


def blaschke_extremal(z0, p, phase="aligned"):
    """Spec of the Blaschke-driven extremal for the real point ``z0``.

    ``phase="aligned"`` attains the pointwise bound at ``z0``; ``phase="real"``
    uses the real zero from :func:`blaschke_b`.
    """
    z0 = float(z0)
    _check_z0(z0, p)
    if phase == "real":
        b = complex(blaschke_b(z0, p))
        return ExtremalSpec(ExtremalKind.BLASCHKE_Z0, p, z0, b, 1.0 + 0j, "real")
    if phase != "aligned":
        raise ValueError(f"unknown phase {phase!r}")
    e = _alignment(p)
    mu = 0.0 if z0 == 0.0 else s0(p, abs(z0)) / z0
    # m = phi/z is the disk automorphism with m(z0) = mu and m'(z0) along e
    a = (e * z0 - mu) / (e - mu * z0)
    eta = (e - mu * z0) / (1.0 - mu * e * z0)
    if abs(a) >= 1.0:
        raise BlaschkeParamOutOfDisk(f"zero {a!r} for z0={z0!r}")
    return ExtremalSpec(ExtremalKind.BLASCHKE_Z0, p, z0, complex(a), complex(-eta), "aligned")


def half_plane_extremal(p):
    return ExtremalSpec(ExtremalKind.HALF_PLANE, p)


def sharpness_witness(z0, p):
    """The extremal whose Schwarzian attains the pointwise bound at ``|z0|``."""
    if h_gate(p, abs(z0)) > 0:
        return blaschke_extremal(z0, p)
    return half_plane_extremal(p)


def _require_blaschke(spec):
    if spec.kind is not ExtremalKind.BLASCHKE_Z0:
        raise ValueError("phi is only defined for Blaschke extremals")


def phi_eval(spec, z):
    _require_blaschke(spec)
    z = np.asarray(z, dtype=np.complex128)
    b = spec.b
    return -spec.rho * z * (z - b) / (1.0 - np.conj(b) * z)


def phi_prime_eval(spec, z):
    _require_blaschke(spec)
    z = np.asarray(z, dtype=np.complex128)
    b = spec.b
    den = 1.0 - np.conj(b) * z
    m = -spec.rho * (z - b) / den
    dm = -spec.rho * (1.0 - abs(b) ** 2) / den**2
    return m + z * dm


def _phi_over_z_series(spec, order):
    b = spec.b
    num = ComplexSeries.polynomial([spec.rho * b, -spec.rho], order)
    den = ComplexSeries.polynomial([1.0, -np.conj(b)], order)
    return div(num, den)


def phi_series(spec, order=DEFAULT_ORDER):
    m = _phi_over_z_series(spec, order - 1)
    return ComplexSeries(np.concatenate([[0.0], m.coeffs]))


def extremal_preschwarzian_series(spec, order=DEFAULT_ORDER):
    """Series of ``f''/f'`` for the extremal, built directly from ``phi``."""
    A = spec.params.A
    if spec.kind is ExtremalKind.HALF_PLANE:
        return ComplexSeries.geometric(1.0, order) * (A + 1.0)
    m = _phi_over_z_series(spec, order)
    phi = ComplexSeries(np.concatenate([[0.0], m.coeffs[:-1]]))
    return div(m, 1.0 - phi) * (A + 1.0)


def extremal_series(spec, order=DEFAULT_ORDER):
    """Taylor series of the normalized extremal ``f`` to the given order."""
    if order < 3:
        raise ValueError("order must be at least 3")
    A = spec.params.A
    if spec.kind is ExtremalKind.HALF_PLANE:
        one_minus_z = ComplexSeries.polynomial([1.0, -1.0], order - 1)
        fprime = power(one_minus_z, -(A + 1.0))
    else:
        pre = extremal_preschwarzian_series(spec, order - 2)
        fprime = exp_series(integrate(pre))
    return integrate(fprime)


def closed_form_S_fz0_at_z0(spec):
    """``|S_f(z0)|`` for the aligned Blaschke extremal, in closed form."""
    _require_blaschke(spec)
    p = spec.params
    q = 1.0 - spec.z0**2
    return p.abs_a_plus_1 * (2.0 - p.abs_a_minus_1 * q) / (q * q * (2.0 - p.abs_a_minus_1))


def closed_form_S_f0(z, p):
    """``S`` of the half-plane extremal: ``(1 - A^2) / (2 (1 - z)^2)``."""
    z = np.asarray(z, dtype=np.complex128)
    out = (1.0 - p.A**2) / (2.0 * (1.0 - z) ** 2)
    return out if out.ndim else complex(out)


def closed_form_P_f0(z, p):
    """``P`` of the half-plane extremal: ``(A + 1) / (1 - z)``."""
    z = np.asarray(z, dtype=np.complex128)
    out = (p.A + 1.0) / (1.0 - z)
    return out if out.ndim else complex(out)


def extremal_schwarzian(spec, z):
    """``S_f(z)`` of any extremal from the closed form of its Schwarz function."""
    A = spec.params.A
    if spec.kind is ExtremalKind.HALF_PLANE:
        return closed_form_S_f0(z, spec.params)
    z = np.asarray(z, dtype=np.complex128)
    with np.errstate(invalid="ignore", divide="ignore"):
        out = schwarzian_omega_values(z, phi_eval(spec, z), phi_prime_eval(spec, z), A)
    # removable singularity at the origin
    zero = z == 0
    if np.any(zero):
        out = np.where(zero, _schwarzian_at_origin(spec), out)
    return out if out.ndim else complex(out)


def _schwarzian_at_origin(spec):
    # phi/z = m0 + m1 z + ... with m0 = rho b, m1 = -rho (1 - |b|^2)
    A = spec.params.A
    m0 = spec.rho * spec.b
    m1 = -spec.rho * (1.0 - abs(spec.b) ** 2)
    return (A + 1.0) * (m1 - 0.5 * (A - 1.0) * m0 * m0)


def extremal_preschwarzian(spec, z):
    A = spec.params.A
    if spec.kind is ExtremalKind.HALF_PLANE:
        return closed_form_P_f0(z, spec.params)
    z = np.asarray(z, dtype=np.complex128)
    with np.errstate(invalid="ignore", divide="ignore"):
        out = preschwarzian_omega_values(z, phi_eval(spec, z), A)
    zero = z == 0
    if np.any(zero):
        out = np.where(zero, (A + 1.0) * spec.rho * spec.b, out)
    return out if out.ndim else complex(out)


__all__ = [
    "ExtremalKind",
    "ExtremalSpec",
    "blaschke_b",
    "blaschke_extremal",
    "half_plane_extremal",
    "sharpness_witness",
    "phi_eval",
    "phi_prime_eval",
    "phi_series",
    "extremal_series",
    "extremal_preschwarzian_series",
    "closed_form_S_fz0_at_z0",
    "closed_form_S_f0",
    "closed_form_P_f0",
    "extremal_schwarzian",
    "extremal_preschwarzian",
]

