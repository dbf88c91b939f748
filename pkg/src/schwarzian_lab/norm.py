"""
Hyperbolic sup-norm estimation on the unit disk.

``||P_f|| = sup (1-|z|^2) |P_f(z)|`` and ``||S_f|| = sup (1-|z|^2)^2 |S_f(z)|``
are estimated by a coarse polar grid search followed by local refinement.
Grid search can only certify lower bounds, so :attr:`NormEstimate.value` is
always a value actually attained at :attr:`NormEstimate.argmax`.

Evaluators come in two flavours:

* a :class:`~schwarzian_lab.series.ComplexSeries` is evaluated by Horner's
  rule up to ``R_MAX``; the tail heuristic at the argmax is reported as
  ``truncation_note``;
* any vectorized callable ``F(z)`` is treated as a closed form and may be
  sampled up to ``1 - 1e-6``. When the maximum sits on that cap, a
  first-order one-sided Richardson step in ``h = 1 - r`` (``2 F(1-h) - F(1-2h)``)
  is reported as ``limit``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EvalRadiusExceeded, EvaluatorFailure
from .grid import CLOSED_FORM_RCAP, GridSpec
from .series import R_MAX, ComplexSeries, eval_series, truncation_error

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_GOLDEN_STEPS = 48


@dataclass(frozen=True)
class NormEstimate:
    value: float
    argmax: complex
    weight_power: int
    grid: GridSpec
    refined: bool
    truncation_note: float | None = None
    limit: float | None = None

    @property
    def best(self):
        """Extrapolated limit when available, else the attained value."""
        return self.limit if self.limit is not None else self.value


def default_grid(evaluator):
    if isinstance(evaluator, ComplexSeries):
        return GridSpec(n_angles=256, n_radii=129, r_cap=R_MAX, refinement_iters=3)
    return GridSpec(n_angles=256, n_radii=129, r_cap=CLOSED_FORM_RCAP, refinement_iters=3)


class _Weighted:
    """``(1 - |z|^2)^k |F(z)|`` with failure reporting."""

    def __init__(self, evaluator, weight_power):
        if weight_power not in (1, 2):
            raise ValueError("weight_power must be 1 or 2")
        self.k = weight_power
        if isinstance(evaluator, ComplexSeries):
            self.series = evaluator
            self.fn = lambda z: eval_series(evaluator, z)
        else:
            self.series = None
            self.fn = evaluator

    def raw(self, z):
        z = np.asarray(z, dtype=np.complex128)
        try:
            with np.errstate(all="ignore"):
                v = np.asarray(self.fn(z), dtype=np.complex128)
        except EvalRadiusExceeded:
            raise
        except Exception as exc:  # locate the offending point
            for zi in np.ravel(z):
                try:
                    self.fn(zi)
                except Exception as inner:
                    raise EvaluatorFailure(complex(zi), inner) from inner
            raise EvaluatorFailure(complex(np.ravel(z)[0]), exc) from exc
        v = np.broadcast_to(v, z.shape)
        bad = ~np.isfinite(v)
        if np.any(bad):
            raise EvaluatorFailure(complex(z[bad].ravel()[0]), "non-finite value")
        return v

    def __call__(self, z):
        z = np.asarray(z, dtype=np.complex128)
        return (1.0 - np.abs(z) ** 2) ** self.k * np.abs(self.raw(z))


def _golden_max(fun, lo, hi, steps=_GOLDEN_STEPS):
    """Golden-section search for a max on ``[lo, hi]``; returns all probes."""
    xs, ys = [], []
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = fun(c), fun(d)
    xs += [c, d]
    ys += [fc, fd]
    for _ in range(steps):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = fun(c)
            xs.append(c)
            ys.append(fc)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = fun(d)
            xs.append(d)
            ys.append(fd)
    return xs, ys


def estimate_norm(evaluator, weight_power, grid=None, *, extrapolate=True):
    """Lower estimate of ``sup (1-|z|^2)^weight_power |F(z)|`` over ``|z| <= grid.r_cap``.

    Ties on the coarse grid go to the smallest radius, then the smallest
    nonnegative angle. Refinement only ever replaces the incumbent with a
    strictly larger value.
    """
    grid = grid or default_grid(evaluator)
    w = _Weighted(evaluator, weight_power)
    if w.series is not None and grid.r_cap > R_MAX:
        raise EvalRadiusExceeded(f"series evaluators are capped at {R_MAX}")

    radii = grid.radii()
    angles = grid.angles()
    vals = w(radii[:, None] * np.exp(1j * angles)[None, :])
    flat = int(np.argmax(vals))
    i, j = divmod(flat, angles.size)
    best_r, best_t, best_v = float(radii[i]), float(angles[j]), float(vals[i, j])

    def at(r, t):
        return float(w(np.array([r * np.exp(1j * t)]))[0])

    r_half = max(radii[min(i + 1, radii.size - 1)] - radii[i], radii[i] - radii[max(i - 1, 0)])
    t_step = 2.0 * math.pi / angles.size
    for _ in range(grid.refinement_iters):
        lo = max(0.0, best_r - r_half)
        hi = min(grid.r_cap, best_r + r_half)
        if hi > lo:
            t_fix = best_t
            xs, ys = _golden_max(lambda r: at(r, t_fix), lo, hi)
            k = int(np.argmax(ys))
            if ys[k] > best_v:
                best_r, best_v = float(xs[k]), float(ys[k])
        for t in (best_t - 0.5 * t_step, best_t + 0.5 * t_step):
            v = at(best_r, t)
            if v > best_v:
                best_t, best_v = t % (2.0 * math.pi), v
        t_step *= 0.5
        r_half *= 0.5

    argmax = complex(best_r * np.exp(1j * best_t))
    note = None
    limit = None
    if w.series is not None:
        tail = float(truncation_error(w.series, best_r))
        note = (1.0 - best_r**2) ** weight_power * tail
    elif extrapolate and best_r >= grid.r_cap * (1.0 - 1e-15):
        h = 1.0 - grid.r_cap
        limit = 2.0 * at(1.0 - h, best_t) - at(1.0 - 2.0 * h, best_t)
    return NormEstimate(
        value=best_v,
        argmax=argmax,
        weight_power=weight_power,
        grid=grid,
        refined=grid.refinement_iters > 0,
        truncation_note=note,
        limit=limit,
    )


def radial_profile(evaluator, weight_power, axis_angle=0.0, n=200, r_cap=None):
    """Weighted modulus sampled at ``n`` equispaced radii on one ray."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if r_cap is None:
        r_cap = R_MAX if isinstance(evaluator, ComplexSeries) else CLOSED_FORM_RCAP
    w = _Weighted(evaluator, weight_power)
    r = np.linspace(0.0, r_cap, n)
    vals = w(r * np.exp(1j * axis_angle))
    return list(zip(r.tolist(), vals.tolist()))
