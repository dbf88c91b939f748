"""
Exit criteria. Each test records one PASS/FAIL line, printed together at the
end of the pytest run; the assertion uses the same tolerance as the line.
"""
import math
import time

import numpy as np
import pytest

from conftest import record_acceptance, random_series
from schwarzian_lab import bounds as B
from schwarzian_lab.dieudonne import brute_force_pointwise_max
from schwarzian_lab.extremal import (
    blaschke_extremal,
    closed_form_P_f0,
    closed_form_S_f0,
    closed_form_S_fz0_at_z0,
    extremal_series,
    half_plane_extremal,
    sharpness_witness,
)
from schwarzian_lab.norm import estimate_norm
from schwarzian_lab.schwarzian import membership_margin, mobius_series, preschwarzian_series, schwarzian_series
from schwarzian_lab.series import ComplexSeries, compose, div, eval_series, exp_series, integrate, log_series, mul

pytestmark = pytest.mark.acceptance

SEED = 12345


def finish(number, ok, detail):
    line = record_acceptance(number, ok, detail)
    assert ok, line


def test_criterion_1_schwarzian_norm_reproduction():
    worst, worst_raw, slowest = 0.0, 0.0, 0.0
    for a, b in [(math.pi / 4, 0.0), (0.0, 0.75), (math.pi / 3, 0.25)]:
        p = B.make_params(a, b)
        ref = 8 * (1 - b) * math.cos(a) * p.sqrt_d
        t = time.perf_counter()
        est = estimate_norm(lambda z: closed_form_S_f0(z, p), 2)
        slowest = max(slowest, time.perf_counter() - t)
        worst = max(worst, abs(est.best - ref) / ref)
        worst_raw = max(worst_raw, abs(est.value - ref) / ref)
    ok = worst <= 1e-6 and slowest < 5.0
    finish(1, ok, f"max rel err {worst:.3g} (attained value {worst_raw:.3g}) <= 1e-6; slowest {slowest:.3f}s < 5s")


def test_criterion_2_preschwarzian_norm():
    t = time.perf_counter()
    worst = 0.0
    origin = None
    for a in np.linspace(-1.2, 1.2, 5):
        for b in np.linspace(0.0, 0.8, 5):
            p = B.make_params(a, b)
            est = estimate_norm(lambda z: closed_form_P_f0(z, p), 1)
            worst = max(worst, abs(est.best - 4 * (1 - b) * math.cos(a)))
            if a == 0 and b == 0:
                origin = est.best
    elapsed = time.perf_counter() - t
    ok = worst <= 1e-6 and abs(origin - 4.0) <= 1e-6 and elapsed < 10.0
    finish(2, ok, f"max abs err {worst:.3g} <= 1e-6 on 5x5; (0,0) -> {origin:.10g}; {elapsed:.3f}s < 10s")


def test_criterion_3_case_one_sharpness():
    t = time.perf_counter()
    problems = []
    worst = 0.0
    for a, b in [(0.0, 0.0), (math.pi / 12, 0.1)]:
        p = B.make_params(a, b)
        norm = B.schwarzian_norm_bound(p)
        for z0 in (0.5, 0.9, 0.99):
            spec = blaschke_extremal(z0, p)
            S = schwarzian_series(extremal_series(spec, 512))
            w = (1 - z0 * z0) ** 2
            got = w * abs(eval_series(S, z0))
            ref = w * closed_form_S_fz0_at_z0(spec)
            err = abs(got - ref)
            worst = max(worst, err)
            if err > 1e-4:
                problems.append(f"({a:.4g},{b:g}) z0={z0}: |series-closed|={err:.3g}")
            if z0 == 0.99 and abs(got - norm) > 0.02 * norm:
                problems.append(f"({a:.4g},{b:g}) z0=0.99: {got:.6g} vs norm bound {norm:.6g}")
    elapsed = time.perf_counter() - t
    ok = not problems and elapsed < 30.0
    detail = f"order 512, worst |series-closed| {worst:.3g} (tol 1e-4); {elapsed:.2f}s < 30s"
    if problems:
        detail += "; " + "; ".join(problems)
    finish(3, ok, detail)


def test_criterion_4_pointwise_soundness_and_sharpness():
    rng = np.random.default_rng(SEED)
    t = time.perf_counter()
    worst_over, worst_gap = -np.inf, 0.0
    for _ in range(20):
        p = B.make_params(rng.uniform(-1.4, 1.4), rng.uniform(0.0, 0.95))
        z0 = rng.uniform(0.05, 0.95)
        bound = B.pointwise_bound(p, z0).value
        got = brute_force_pointwise_max(z0, p, (256, 256, 256))
        worst_over = max(worst_over, got - bound)
        worst_gap = max(worst_gap, 1 - got / bound)
    elapsed = time.perf_counter() - t
    ok = worst_over <= 1e-9 and worst_gap <= 0.005 and elapsed < 300
    finish(4, ok, f"max(brute - bound) {worst_over:.3g} <= 1e-9; max rel gap {worst_gap:.3g} <= 0.005 at 256^3; {elapsed:.1f}s < 300s")


def test_criterion_5_branches_and_regime_geometry():
    t = time.perf_counter()
    worst, n = 0.0, 0
    for a in np.linspace(-1.5, 1.5, 101):
        for b in np.linspace(0.0, 0.99, 101):
            p = B.make_params(a, b)
            if p.regime is B.Regime.LARGE_D:
                o = float(B.boundary_branch(p, p.lam))
                worst = max(worst, abs(float(B.interior_branch(p, p.lam)) - o) / o)
                n += 1
    beta_axis = B.regime_boundary_beta(0.0)
    # alpha crossing: d = sin^2 alpha at beta = 0
    alpha_axis = math.asin(math.sqrt(B.REGIME_THRESHOLD))
    beta_zero_case = B.schwarzian_norm_bound(B.make_params(math.pi / 6, 0.0))
    convex = B.schwarzian_norm_bound(B.make_params(0.0, 0.5))
    elapsed = time.perf_counter() - t
    ok = (
        worst <= 1e-10
        and abs(beta_axis - 0.5) < 1e-15
        and abs(alpha_axis - math.pi / 6) < 1e-15
        and B.make_params(math.pi / 6, 0).d == pytest.approx(0.25, abs=1e-15)
        and abs(beta_zero_case - 2 * math.cos(math.pi / 6) / (1 - 0.5)) < 1e-12
        and abs(beta_zero_case - 8 * math.cos(math.pi / 6) * 0.5) < 1e-12
        and abs(convex - 2.0) < 1e-12
        and abs(convex - 8 * 0.5 * 0.5) < 1e-12
        and elapsed < 5.0
    )
    finish(5, ok, f"branch gap {worst:.3g} <= 1e-10 over {n} LargeD points; crossings alpha={alpha_axis:.15g}, beta={beta_axis:g}; {elapsed:.2f}s < 5s")


def test_criterion_6_membership():
    t = time.perf_counter()
    worst = np.inf
    for a in (-math.pi / 4, 0.0, math.pi / 3):
        for b in (0.0, 0.4, 0.8):
            p = B.make_params(a, b)
            worst = min(worst, membership_margin(extremal_series(half_plane_extremal(p)), p))
            for z0 in (0.2, 0.5, 0.8):
                worst = min(worst, membership_margin(extremal_series(sharpness_witness(z0, p)), p))
    elapsed = time.perf_counter() - t
    ok = worst >= -1e-6 and elapsed < 60
    finish(6, ok, f"min margin {worst:.3g} >= -1e-6 over 3x3x3; {elapsed:.2f}s < 60s")


def _schwarz_function(rng, order):
    a = 0.7 * rng.uniform() * np.exp(2j * math.pi * rng.uniform())
    z = ComplexSeries.variable(order)
    return div(z * (a + z), 1 + np.conj(a) * z)


def _from_omega(omega, A):
    m = ComplexSeries(omega.coeffs[1:])
    pre = div(m, 1 - omega.truncate(m.order)) * (A + 1)
    return integrate(exp_series(integrate(pre)))


def test_criterion_7_structural_properties():
    rng = np.random.default_rng(SEED)
    t = time.perf_counter()
    mob = rt_exp = rt_div = fd = 0.0
    argmax_bad = 0
    for _ in range(25):
        p = B.make_params(rng.uniform(-1.2, 1.2), rng.uniform(0, 0.9))
        f = _from_omega(_schwarz_function(rng, 64), p.A)
        c = 0.5 * rng.uniform() * np.exp(2j * math.pi * rng.uniform())
        T = mobius_series(2 + complex(*rng.standard_normal(2)) * 0.3, complex(*rng.standard_normal(2)) * 0.3, c, 1.0, 64)
        S1 = schwarzian_series(f).coeffs[:30]
        S2 = schwarzian_series(compose(T, f) - T.coeffs[0]).coeffs[:30]
        mob = max(mob, float(np.max(np.abs(S1 - S2))))

        s = ComplexSeries(random_series(rng, 32, c0=rng.uniform(0.5, 2.0), scale=0.2, decay=0.5))
        rt_exp = max(rt_exp, float(np.max(np.abs(exp_series(log_series(s)).coeffs - s.coeffs))))
        a_ = ComplexSeries(random_series(rng, 32))
        b_ = ComplexSeries(random_series(rng, 32, c0=rng.uniform(0.1, 2.0), decay=0.05))
        rt_div = max(rt_div, float(np.max(np.abs(mul(div(a_, b_), b_).coeffs - a_.coeffs))))

        g = _from_omega(_schwarz_function(rng, 256), p.A)
        P, S = preschwarzian_series(g), schwarzian_series(g)
        z = rng.uniform(0, 0.5) * np.exp(2j * math.pi * rng.uniform())
        h = 1e-4
        dP = (eval_series(P, z + h) - eval_series(P, z - h)) / (2 * h)
        fd = max(fd, abs(eval_series(S, z) - (dP - 0.5 * eval_series(P, z) ** 2)))

        r = rng.uniform(0.01, 0.99)
        grid = np.linspace(0, r, 100_001)
        k = int(np.argmax(B.g_profile(p, r, grid)))
        target = B.s0(p, r) if B.h_gate(p, r) > 0 else r
        argmax_bad += abs(grid[k] - target) > r / 100_000
    elapsed = time.perf_counter() - t
    ok = mob <= 1e-8 and rt_exp <= 1e-10 and rt_div <= 1e-10 and fd <= 1e-6 and argmax_bad == 0 and elapsed < 60
    finish(
        7,
        ok,
        f"mobius {mob:.3g}<=1e-8, exp/log {rt_exp:.3g}<=1e-10, div/mul {rt_div:.3g}<=1e-10, "
        f"finite-diff {fd:.3g}<=1e-6, g-argmax misses {argmax_bad}; seed {SEED}; {elapsed:.2f}s < 60s",
    )


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
