"""
Estimating hyperbolic sup-norms
===============================

Grid search plus refinement gives a lower estimate; for closed forms whose
supremum sits on the rim, a one-sided extrapolation recovers the limit.
"""
import numpy as np

from schwarzian_lab import ComplexSeries, estimate_norm, make_params, preschwarzian_series
from schwarzian_lab.extremal import closed_form_P_f0, closed_form_S_f0

p = make_params(0.0, 0.75)
est = estimate_norm(lambda z: closed_form_S_f0(z, p), 2)
print("||S|| of half-plane extremal:", est.value, "extrapolated", est.limit, "exact", 2 * abs(p.A**2 - 1))
print("argmax", est.argmax)

q = make_params(0.0, 0.0)
est = estimate_norm(lambda z: closed_form_P_f0(z, q), 1)
print("||P|| of z/(1-z):", est.value, "extrapolated", est.limit)

###############################################################################
# A truncated series is capped at r = 0.999; the estimate comes with a tail note.
f = ComplexSeries(np.r_[0.0, np.ones(1024)])
est = estimate_norm(preschwarzian_series(f), 1)
print("series backend:", est.value, "tail note", est.truncation_note)
