"""
Brute force over Dieudonne's disk
=================================

Sweep every admissible pair ``(w(z0), w'(z0))`` and compare the largest
``|S_f(z0)|`` with the closed-form bound. The sweep never exceeds it and
closes to within a fraction of a percent.
"""
import math

from schwarzian_lab import make_params, pointwise_bound, sweep_pointwise
from schwarzian_lab.bounds import s0

for (alpha, beta), z0 in [((0.0, 0.0), 0.5), ((math.pi / 4, 0.0), 0.9), ((0.0, 0.75), 0.2)]:
    p = make_params(alpha, beta)
    pb = pointwise_bound(p, z0)
    res = sweep_pointwise(z0, p, (128, 128, 128))
    print(f"({alpha:.3f},{beta}) z0={z0}: brute={res.value:.8f} bound={pb.value:.8f} "
          f"[{pb.branch.value}] gap={1 - res.value / pb.value:.2e} |w|={abs(res.w):.5f}")
    if pb.branch.value == "Interior":
        print("   critical point s0 =", s0(p, z0))
