"""Codes C_(f,A): construction, weight distributions, duals and extensions."""

from .distribution import WeightDistribution, WeightEnumerator
from .linear_code import (
    ENUM_CAP,
    LinearCode,
    all_codewords,
    build_code,
    dual_code,
    dual_low_weight_counts,
    enumerate_weight_distribution,
    extend_code,
    min_distance,
)
from .macwilliams import dual_distribution, macwilliams_transform, pless_check, pless_moments, pless_solve, u_coefficient
from .tables import (
    ab_weights,
    dual_low_weights_ab,
    dual_low_weights_f1,
    dual_low_weights_p3,
    planar_dual_a2,
    planar_weights,
    pless_wd_planar,
    theoretical_wd_ab,
    theoretical_wd_ext_ab,
    theoretical_wd_ext_p3,
    theoretical_wd_planar_f1,
    theoretical_wd_planar_p3,
)
from .chain import CodeChain, derive_chain
