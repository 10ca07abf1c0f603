"""Linear codes from almost bent and planar functions.

Finite-field arithmetic, the nonlinear function catalog, the codes
C_(f,A) = {(Tr(a f(x) + b x))_{x != 0} : a in A, b in GF(p^m)}, their
dual/extension chains, the designs they hold and secret sharing summaries.
"""

from . import codes, designs, errors, functions, galois, sharing
from .codes import (
    LinearCode,
    WeightDistribution,
    build_code,
    derive_chain,
    dual_distribution,
    enumerate_weight_distribution,
)
from .functions import Kind, make_function
from .galois import canonical_subgroup, make_field, random_subgroup, subgroup_from_basis, trace

__version__ = "0.1.0"

__all__ = [
    "codes",
    "designs",
    "errors",
    "functions",
    "galois",
    "sharing",
    "LinearCode",
    "WeightDistribution",
    "build_code",
    "derive_chain",
    "dual_distribution",
    "enumerate_weight_distribution",
    "Kind",
    "make_function",
    "canonical_subgroup",
    "make_field",
    "random_subgroup",
    "subgroup_from_basis",
    "trace",
]
