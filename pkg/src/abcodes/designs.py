"""t-designs held by the codewords of the extended-dual-dual codes."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .codes import LinearCode, WeightDistribution, all_codewords, theoretical_wd_ext_ab
from .errors import InvalidParameters, NonIntegralLambda, NotADesign, TooLarge, WeightNotRealized

__all__ = [
    "DesignParams",
    "BlockSet",
    "divisibility_holds",
    "design_params_ab",
    "example_lambdas_ab",
    "extract_blocks",
    "verify_design",
    "assmus_mattson_s",
    "assmus_mattson_applicable",
]

VERIFY_CAP = 10**9


@dataclass(frozen=True)
class DesignParams:
    t: int
    n: int
    k: int
    lam: int

    def __str__(self) -> str:
        return f"{self.t}-({self.n}, {self.k}, {self.lam})"


def divisibility_holds(d: DesignParams) -> bool:
    """C(k-i, t-i) | lambda * C(n-i, t-i) for every 0 <= i <= t."""
    return all(
        (d.lam * comb(d.n - i, d.t - i)) % comb(d.k - i, d.t - i) == 0 for i in range(d.t + 1)
    )


def design_params_ab(m: int, r: int, k: int) -> DesignParams:
    """Parameters of the design held by weight-k words of the binary
    dual-of-extended-dual code: a 3-design when r = m, otherwise a 1-design.
    """
    wd = theoretical_wd_ext_ab(m, r)
    n = 2**m
    if k in (0, n) or wd[k] == 0:
        raise WeightNotRealized(f"weight {k} is not a block size of the [{n}, {m + r + 1}] code")
    a_k = wd[k]
    if r == m:
        t = 3
        lam = Fraction(k * (k - 1) * (k - 2) * a_k, n * (n - 1) * (n - 2))
    else:
        t = 1
        lam = Fraction(k * a_k, n)
    if k < t:
        raise InvalidParameters(f"block size {k} is below the strength {t}")
    if lam.denominator != 1:
        raise NonIntegralLambda(f"lambda = {lam}")
    return DesignParams(t, n, k, int(lam))


def example_lambdas_ab(m: int, r: int) -> dict[int, int]:
    """Block size -> lambda from the explicit per-weight expressions
    (independent of the A_k-based formula)."""
    h1, h3 = 2 ** ((m - 1) // 2), 2 ** ((m - 3) // 2)
    w1, w2, w3 = 2 ** (m - 1) - h1, 2 ** (m - 1), 2 ** (m - 1) + h1
    if r == m:
        vals = {
            w1: Fraction((2 ** (m - 2) - h3) * (2 ** (m - 1) - h1 - 1) * (2 ** (m - 2) - h3 - 1), 2 ** (m - 1) - 1),
            w2: Fraction((2 ** (2 * m - 1) + 2 ** (m - 1) - 1) * (2 ** (m - 2) - 1), 2**m - 1),
            w3: Fraction((2 ** (m - 2) + h3) * (2 ** (m - 1) + h1 - 1) * (2 ** (m - 2) + h3 - 1), 2 ** (m - 1) - 1),
        }
    else:
        vals = {
            w1: Fraction((2**r - 1) * (2 ** (m - 2) - h3)),
            w2: Fraction(2 ** (m + r - 1) + 2 ** (m - 1) - 1),
            w3: Fraction((2**r - 1) * (2 ** (m - 2) + h3)),
        }
    for w, v in vals.items():
        if v.denominator != 1:
            raise NonIntegralLambda(f"lambda for k={w} is {v}")
    return {w: int(v) for w, v in vals.items()}


@dataclass(frozen=True)
class BlockSet:
    n: int
    k: int
    blocks: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "k": self.k, "blocks": [list(b) for b in self.blocks]}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "BlockSet":
        d = json.loads(text)
        return cls(d["n"], d["k"], tuple(sorted(tuple(b) for b in d["blocks"])))


def extract_blocks(code: LinearCode, k: int, cap: int = 2**16) -> BlockSet:
    """Distinct supports of the weight-k codewords, sorted lexicographically.

    Nonzero scalar multiples share a support, so for odd p the number of
    blocks is A_k / (p - 1).
    """
    if k < 1:
        raise ValueError("block size must be >= 1")
    words = all_codewords(code, cap=cap)
    nz = words != 0
    sel = nz[nz.sum(axis=1) == k]
    if code.p > 2 and sel.shape[0] % (code.p - 1):
        raise AssertionError("weight class size not divisible by p - 1")  # pragma: no cover
    supports = {tuple(np.nonzero(row)[0].tolist()) for row in sel}
    if len(supports) * (code.p - 1) != sel.shape[0]:
        raise AssertionError("distinct supports do not match A_k / (p-1)")  # pragma: no cover
    return BlockSet(code.n, k, tuple(sorted(supports)))


def verify_design(blocks: BlockSet, t: int, cap: int = VERIFY_CAP) -> int:
    """Return lambda if every t-subset lies in the same number of blocks.

    t-subsets are visited in lexicographic order; the first one whose count
    differs from the first subset's raises NotADesign with both subsets.
    """
    n = blocks.n
    if comb(n, t) * max(len(blocks), 1) > cap:
        raise TooLarge(f"C({n},{t}) x {len(blocks)} blocks exceeds {cap}")
    if t == 0:
        return len(blocks)
    inc = np.zeros((len(blocks), n), dtype=bool)
    for i, b in enumerate(blocks.blocks):
        inc[i, list(b)] = True
    first_set = None
    lam = None
    # group by the first t-1 points so each step is one vectorized product
    for prefix in itertools.combinations(range(n), t - 1):
        start = prefix[-1] + 1 if prefix else 0
        if start >= n:
            continue
        rows = inc[:, list(prefix)].all(axis=1) if prefix else np.ones(len(blocks), dtype=bool)
        counts = inc[rows][:, start:].sum(axis=0)
        if lam is None:
            lam, first_set = int(counts[0]), prefix + (start,)
        bad = np.nonzero(counts != lam)[0]
        if bad.size:
            other = prefix + (start + int(bad[0]),)
            raise NotADesign(
                f"{first_set} lies in {lam} blocks but {other} in {int(counts[bad[0]])}",
                witness=(first_set, other),
            )
    return int(lam) if lam is not None else 0


def assmus_mattson_s(dual_wd: WeightDistribution, t: int) -> int:
    """Number of nonzero weights i <= n - t occurring in the dual."""
    return sum(1 for i, c in dual_wd.counts.items() if c and 0 < i <= dual_wd.n - t)


def assmus_mattson_applicable(wd: WeightDistribution, dual_wd: WeightDistribution, t: int) -> bool:
    """Check t < d and s <= d - t for the pair (C, C^perp).

    ``wd`` is C (d is its minimum distance), ``dual_wd`` is C^perp (s counts
    its nonzero weights up to n - t). For the designs of the extended chain
    pass the extended dual as ``wd`` and the dual-of-extended-dual as
    ``dual_wd``: the blocks live in C^perp.
    """
    d = wd.min_weight
    if d is None or t < 1 or t >= d:
        return False
    return assmus_mattson_s(dual_wd, t) <= d - t
