"""
Sharp pre-Schwarzian and Schwarzian norm bounds for the class ``S_alpha(beta)``
of normalized ``f`` with ``Re{e^{i alpha}(1 + z f''/f')} > beta cos(alpha)``: closed-form bounds, truncated power series, extremal
functions and brute-force checks.
"""
from .bounds import (
    Branch,
    ClassParams,
    PointwiseBound,
    Regime,
    make_params,
    pointwise_bound,
    preschwarzian_norm_bound,
    schwarzian_norm_bound,
)
from .dieudonne import brute_force_pointwise_max, dieudonne_disk, sweep_pointwise, verify_inner_max
from .errors import *  # noqa: F401,F403
from .extremal import (
    ExtremalKind,
    ExtremalSpec,
    blaschke_b,
    blaschke_extremal,
    extremal_schwarzian,
    extremal_series,
    half_plane_extremal,
    sharpness_witness,
)
from .grid import GridSpec
from .norm import NormEstimate, estimate_norm, radial_profile
from .schwarzian import is_member, membership_margin, preschwarzian_series, schwarzian_series
from .series import ComplexSeries, eval_series
from .verify import run_suites

__version__ = "0.1.0"
