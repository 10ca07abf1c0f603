"""The derivation chain C -> C^perp -> ext(C^perp) -> ext(C^perp)^perp."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .distribution import WeightDistribution
from .linear_code import LinearCode, dual_code, enumerate_weight_distribution, extend_code
from .macwilliams import dual_distribution

__all__ = ["CodeChain", "derive_chain"]


@dataclass(frozen=True, eq=False)
class CodeChain:
    """Codes of the chain and their weight distributions.

    The two small-dimension codes (``code`` and ``ext_dual_dual``) are
    enumerated; the large ones get their distributions by MacWilliams.
    """

    code: LinearCode
    dual: LinearCode
    ext_dual: LinearCode
    ext_dual_dual: LinearCode

    @cached_property
    def wd_code(self) -> WeightDistribution:
        return enumerate_weight_distribution(self.code)

    @cached_property
    def wd_dual(self) -> WeightDistribution:
        return dual_distribution(self.wd_code)

    @cached_property
    def wd_ext_dual_dual(self) -> WeightDistribution:
        return enumerate_weight_distribution(self.ext_dual_dual)

    @cached_property
    def wd_ext_dual(self) -> WeightDistribution:
        return dual_distribution(self.wd_ext_dual_dual)

    def params(self) -> dict[str, tuple[int, int, int | None]]:
        return {
            "code": (self.code.n, self.code.k, self.wd_code.min_weight),
            "dual": (self.dual.n, self.dual.k, self.wd_dual.min_weight),
            "ext_dual": (self.ext_dual.n, self.ext_dual.k, self.wd_ext_dual.min_weight),
            "ext_dual_dual": (self.ext_dual_dual.n, self.ext_dual_dual.k, self.wd_ext_dual_dual.min_weight),
        }


def derive_chain(code: LinearCode) -> CodeChain:
    d = dual_code(code)
    e = extend_code(d)
    return CodeChain(code, d, e, dual_code(e))
