"""
Invariant suites aggregated by ``schwarzian-lab verify``.

Each suite sweeps a list of :class:`~schwarzian_lab.bounds.ClassParams` and
reports its worst observed deviation against a fixed tolerance. Suites with
nothing to check (for example, branch continuity when every parameter pair has
small ``d``) are left out of the report rather than counted as passes.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import bounds as B
from .dieudonne import sweep_pointwise, verify_inner_max
from .extremal import (
    blaschke_extremal,
    closed_form_S_fz0_at_z0,
    extremal_series,
    half_plane_extremal,
)
from .grid import MEMBERSHIP_GRID
from .schwarzian import membership_margin, schwarzian_series
from .series import eval_series

THREADS_ENV = "SCHWARZIAN_LAB_THREADS"
FAULTS = ("perturb-b",)


def worker_count():
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return min(8, os.cpu_count() or 1)


def ordered_map(fn, items):
    """Map concurrently; results come back in input order."""
    items = list(items)
    n = worker_count()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    worst: float
    tolerance: float
    n_checked: int
    detail: str = ""

    def as_row(self):
        return {
            "suite": self.name,
            "passed": self.passed,
            "worst": self.worst,
            "tolerance": self.tolerance,
            "n_checked": self.n_checked,
            "detail": self.detail,
        }


def default_params():
    alphas = [-math.pi / 4, -math.pi / 12, 0.0, math.pi / 12, math.pi / 4, math.pi / 3]
    betas = [0.0, 0.25, 0.5, 0.75]
    return [B.make_params(a, b) for a in alphas for b in betas]


def _result(name, devs, tol, detail="", lower_is_better=True):
    if not devs:
        return None
    worst = float(max(devs)) if lower_is_better else float(min(devs))
    passed = worst <= tol if lower_is_better else worst >= tol
    return SuiteResult(name, bool(passed), worst, tol, len(devs), detail)


def suite_identities(params):
    devs = []
    for p in params:
        devs.append(abs(abs(p.A + 1) - 2 * (1 - p.beta) * math.cos(p.alpha)))
        devs.append(abs(abs(p.A - 1) - 2 * p.sqrt_d))
    return _result("identities", devs, 1e-12, "|A+1| and |A-1| closed forms")


def suite_branch_continuity(params):
    devs = []
    for p in params:
        if p.regime is B.Regime.LARGE_D:
            i = float(B.interior_branch(p, p.lam))
            o = float(B.boundary_branch(p, p.lam))
            devs.append(abs(i - o) / abs(o))
    return _result("branch_continuity", devs, 1e-10, "relative gap at r = lambda")


def suite_monotonicity(params, n=1000):
    devs = []
    r = np.linspace(0.0, 0.999, n)
    for p in params:
        v = B.pointwise_bound_values(p, r)
        drops = -np.diff(v) / v[1:]
        devs.append(float(max(np.max(drops), 0.0)))
    return _result("pointwise_monotone", devs, 1e-12, "largest relative drop along r")


def suite_m1_below_m2(params):
    margins = [
        B.boundary_supremum(p) - B.interior_supremum(p)
        for p in params
        if p.regime is B.Regime.LARGE_D
    ]
    if not margins:
        return None
    worst = min(margins)
    return SuiteResult("m1_below_m2", worst > 0.0, worst, 0.0, len(margins), "M2 - M1, must be > 0")


def suite_g_profile(params, radii=(0.1, 0.5, 0.9), n=20_001):
    bad = []
    for p in params:
        for r in radii:
            rep = verify_inner_max(p, r, n)
            bad.append(0.0 if (rep.consistent and rep.unimodal) else 1.0)
    return _result("g_profile_argmax", bad, 0.0, "count of radii with argmax/shape mismatch")


def _z0_samples(p, z0s):
    return [z0 for z0 in z0s if B.h_gate(p, abs(z0)) > 0]


def suite_membership(params, z0s=(0.3, 0.6), order=512, floor=-1e-6, grid=MEMBERSHIP_GRID):
    def one(p):
        out = [membership_margin(extremal_series(half_plane_extremal(p), order), p, grid)]
        for z0 in _z0_samples(p, z0s):
            out.append(membership_margin(extremal_series(blaschke_extremal(z0, p), order), p, grid))
        return out

    margins = [m for ms in ordered_map(one, params) for m in ms]
    return _result("extremal_membership", margins, floor, "minimum margin", lower_is_better=False)


def suite_sharpness(params, z0s=(0.3, 0.6, 0.9), order=512, fault=None):
    def one(p):
        out = []
        for z0 in _z0_samples(p, z0s):
            spec = blaschke_extremal(z0, p)
            target = (1 - z0 * z0) ** 2 * closed_form_S_fz0_at_z0(spec)
            if fault == "perturb-b":
                spec = spec.perturbed(1e-3)
            S = schwarzian_series(extremal_series(spec, order))
            got = (1 - z0 * z0) ** 2 * abs(eval_series(S, z0))
            out.append(abs(got - target))
        return out

    devs = [d for ds in ordered_map(one, params) for d in ds]
    return _result("sharpness_identity", devs, 1e-6, "weighted |S(z0)| series vs closed form")


def suite_dieudonne(params, z0s=(0.3, 0.7), resolution=(64, 64, 64)):
    def one(p):
        out = []
        for z0 in z0s:
            bound = B.pointwise_bound(p, z0).value
            got = sweep_pointwise(z0, p, resolution).value
            out.append((got - bound, 1.0 - got / bound))
        return out

    pairs = [x for xs in ordered_map(one, params) for x in xs]
    if not pairs:
        return []
    over = [a for a, _ in pairs]
    gap = [b for _, b in pairs]
    return [
        _result("dieudonne_soundness", over, 1e-9, "brute-force max minus bound"),
        _result("dieudonne_sharpness", gap, 0.01, f"relative gap at {resolution}"),
    ]


def suite_reductions(params):
    devs = []
    for p in params:
        nb = B.schwarzian_norm_bound(p)
        if p.beta == 0.0:
            a = abs(p.alpha)
            ref = 2 * math.cos(a) / (1 - math.sin(a)) if a <= math.pi / 6 else 8 * math.cos(a) * math.sin(a)
            devs.append(abs(nb - ref))
        if p.alpha == 0.0:
            b = p.beta
            ref = 2.0 if b <= 0.5 else 8 * b * (1 - b)
            devs.append(abs(nb - ref))
    return _result("special_case_reductions", devs, 1e-12, "beta=0 and alpha=0 special cases")


def run_suites(params=None, fault=None, sweep=None, grid=None):
    """Run every suite; returns a list of :class:`SuiteResult`.

    ``sweep`` overrides the Dieudonne resolution and ``grid`` the membership grid.
    """
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}")
    params = default_params() if params is None else list(params)
    out = [
        suite_identities(params),
        suite_branch_continuity(params),
        suite_monotonicity(params),
        suite_m1_below_m2(params),
        suite_reductions(params),
        suite_g_profile(params),
        suite_membership(params, grid=grid or MEMBERSHIP_GRID),
        suite_sharpness(params, fault=fault),
    ]
    out.extend(suite_dieudonne(params, resolution=tuple(sweep) if sweep else (64, 64, 64)))
    return [r for r in out if r is not None]
