"""
Norm bounds across the parameter square
=======================================

The Schwarzian bound switches formula on the curve ``d = 1/4``. Below it the
supremum is reached in the interior, above it on the boundary.
"""
import math

import numpy as np

from schwarzian_lab import make_params, preschwarzian_norm_bound, schwarzian_norm_bound
from schwarzian_lab.bounds import regime_boundary_beta

###############################################################################
# A few named points: the convex class, the beta = 0 threshold and a
# boundary-regime case.
for alpha, beta in [(0.0, 0.0), (math.pi / 6, 0.0), (0.0, 0.75), (math.pi / 4, 0.0)]:
    p = make_params(alpha, beta)
    print(f"alpha={alpha:.4f} beta={beta:.2f}  d={p.d:.4f} {p.regime.value:6s} "
          f"lambda={p.lam}  ||S||<={schwarzian_norm_bound(p):.6f}  ||P||<={preschwarzian_norm_bound(p):.6f}")

###############################################################################
# Along alpha = 0 the bound is flat at 2 up to beta = 1/2, then follows
# 8 beta (1 - beta).
betas = np.linspace(0, 0.95, 20)
vals = [schwarzian_norm_bound(make_params(0.0, b)) for b in betas]
for b, v in zip(betas, vals):
    print(f"  beta={b:.3f}  bound={v:.6f}")

###############################################################################
# The regime curve meets the axes at alpha = pi/6 and beta = 1/2.
print("curve at alpha=0:", regime_boundary_beta(0.0))
print("curve at alpha=pi/6:", regime_boundary_beta(math.pi / 6))
