"""
Extremal functions attain the bound
===================================

For each real ``z0`` a Blaschke-driven extremal reaches the pointwise bound
exactly. Pushing ``z0`` toward the rim drives the weighted value up to the
norm bound.
"""
import math

from schwarzian_lab import blaschke_extremal, extremal_schwarzian, make_params, pointwise_bound, schwarzian_norm_bound
from schwarzian_lab import extremal_series, schwarzian_series, eval_series

p = make_params(math.pi / 12, 0.1)
print("norm bound", schwarzian_norm_bound(p))

###############################################################################
# Closed form and truncated series side by side. At ``z0 = 0.99`` the order-512
# series has a visible tail; order 2048 closes it.
for z0 in (0.0, 0.5, 0.9, 0.99):
    spec = blaschke_extremal(z0, p)
    w = (1 - z0 * z0) ** 2
    closed = w * abs(extremal_schwarzian(spec, z0))
    bound = w * pointwise_bound(p, z0).value
    line = f"z0={z0:<5} closed={closed:.10f} bound={bound:.10f}"
    for order in (512, 2048):
        val, tail = eval_series(schwarzian_series(extremal_series(spec, order)), z0, with_error=True)
        line += f"  N={order}: {w * abs(val):.6f} (tail {w * tail:.1e})"
    print(line)

###############################################################################
# The real-zero construction lines up with the bound only when ``A = 1``.
real = blaschke_extremal(0.9, p, phase="real")
print("real zero at z0=0.9:", 0.19**2 * abs(extremal_schwarzian(real, 0.9)))
