import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from schwarzian_lab import bounds as B
from schwarzian_lab.dieudonne import (
    brute_force_pointwise_max,
    dieudonne_disk,
    sweep_pointwise,
    verify_inner_max,
)
from schwarzian_lab.errors import InadmissibleOmegaValue
from schwarzian_lab.schwarzian import schwarzian_omega_values


def test_disk_degenerates_on_rim():
    c, r = dieudonne_disk(0.5, 0.5j)
    assert r == 0 and c == pytest.approx(1j)


def test_disk_at_zero_w():
    c, r = dieudonne_disk(0.5, 0)
    assert c == 0 and r == pytest.approx(2 / 3, abs=1e-15)


def test_disk_example():
    c, r = dieudonne_disk(0.5, 0.25)
    assert c == pytest.approx(0.5, abs=1e-15) and r == pytest.approx(0.5, abs=1e-15)


def test_disk_rejects_inadmissible():
    with pytest.raises(InadmissibleOmegaValue):
        dieudonne_disk(0.5, 0.6)
    with pytest.raises(InadmissibleOmegaValue):
        dieudonne_disk(0.0, 0.0)


def test_brute_force_zero_params_fine(p00):
    v = brute_force_pointwise_max(0.5, p00, (512, 512, 512))
    bound = 32 / 9
    assert v <= bound + 1e-9
    assert v >= 0.995 * bound


def test_brute_force_boundary_branch(p_quarter):
    v = brute_force_pointwise_max(0.9, p_quarter, (256, 256, 256))
    assert v <= 100 + 1e-9
    assert v >= 0.995 * 100


def test_single_point_sweep(p_34):
    v = brute_force_pointwise_max(0.5, p_34, (1, 1, 1))
    assert 0 <= v <= B.pointwise_bound(p_34, 0.5).value
    assert abs(schwarzian_omega_values(0.5, 0, 0, p_34.A)) == 0


def test_sweep_rejects_complex_unless_flagged(p00):
    with pytest.raises(ValueError):
        sweep_pointwise(0.5j, p00, (8, 8, 8))
    res = sweep_pointwise(0.5j, p00, (32, 32, 32), allow_complex=True)
    assert res.value <= B.pointwise_bound(p00, 0.5).value + 1e-9


def test_maximizer_location():
    for a, b in [(0.0, 0.0), (math.pi / 12, 0.1), (0.0, 0.75)]:
        p = B.make_params(a, b)
        z0 = 0.3
        res = sweep_pointwise(z0, p, (257, 256, 256))
        assert res.on_rim
        assert abs(abs(res.w) - B.s0(p, z0)) <= z0 / 256 + 1e-12
        c, r = dieudonne_disk(z0, res.w)
        assert abs(abs(res.wprime - c) - r) < 1e-12


def test_inner_max_zero_params(p00):
    rep = verify_inner_max(p00, 0.5)
    assert rep.classification == "interior"
    assert abs(rep.s_argmax - 0.25) <= rep.step and rep.consistent and rep.unimodal


def test_inner_max_endpoint(p_quarter):
    rep = verify_inner_max(p_quarter, 0.9)
    assert rep.classification == "endpoint" and rep.consistent and rep.unimodal
    s = np.linspace(0, 0.9, 10_001)
    assert np.all(B.g_profile(p_quarter, 0.9, 0.9) >= B.g_profile(p_quarter, 0.9, s) - 1e-12)


def test_inner_max_small_r(p_34):
    rep = verify_inner_max(p_34, 1e-4, 1001)
    assert rep.s_argmax < 1e-6


@given(st.floats(-1.4, 1.4), st.floats(0, 0.95), st.floats(0.05, 0.95))
def test_soundness_property(a, b, z0):
    p = B.make_params(a, b)
    assert brute_force_pointwise_max(z0, p, (32, 32, 32)) <= B.pointwise_bound(p, z0).value + 1e-9
