"""Minimal codes and the access structure of secret sharing from their duals.

Access sets follow Massey's convention: coordinate 0 carries the secret and
coordinates 1..n-1 are the participants. The minimal access sets of the
scheme built on C are the supports (minus coordinate 0) of the minimal
codewords of C^perp whose coordinate 0 equals 1.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .codes import (
    LinearCode,
    WeightDistribution,
    all_codewords,
    dual_code,
    dual_distribution,
    enumerate_weight_distribution,
)
from .errors import CodeTooLarge, DualNotMinimal, ZeroCode

__all__ = [
    "AccessStructureSummary",
    "minimality_ratio",
    "is_minimal_bruteforce",
    "minimal_codewords",
    "access_structure",
    "minimal_access_sets",
    "membership_counts",
]

PAIR_SCAN_CAP = 2**14


def minimality_ratio(wd: WeightDistribution, q: int) -> bool:
    """Sufficient condition for minimality: w_min / w_max > (q-1) / q."""
    if wd.min_weight is None:
        raise ZeroCode("the zero code has no nonzero weights")
    return wd.min_weight * q > wd.max_weight * (q - 1)


def _cover_matrix(S: np.ndarray, rows: slice) -> np.ndarray:
    """cover[i, j] is True iff supp(j) is contained in supp(rows[i])."""
    outside = (~S[rows]).astype(np.float32) @ S.T.astype(np.float32)
    return outside == 0


def _proportional(a: np.ndarray, b: np.ndarray, p: int) -> bool:
    i = int(np.nonzero(a)[0][0])
    lam = (int(b[i]) * pow(int(a[i]), -1, p)) % p
    return bool(np.array_equal((a * lam) % p, b))


def is_minimal_bruteforce(code: LinearCode, cap: int = PAIR_SCAN_CAP):
    """Exhaustive cover check over all ordered pairs of nonzero codewords.

    Returns ``(True, None)`` or ``(False, (c, c_covered))``.
    """
    if code.size > cap:
        raise CodeTooLarge(f"{code.size} codewords exceeds the pair-scan cap {cap}")
    words = all_codewords(code, cap=cap)[1:]  # drop the zero word (index 0)
    if words.shape[0] == 0:
        return True, None
    S = words != 0
    weight = S.sum(axis=1)
    chunk = 512
    for lo in range(0, S.shape[0], chunk):
        cov = _cover_matrix(S, slice(lo, lo + chunk))
        for i_local, j in zip(*np.nonzero(cov)):
            i = lo + int(i_local)
            j = int(j)
            if i == j:
                continue
            if weight[j] < weight[i] or not _proportional(words[i], words[j], code.p):
                return False, (words[i].copy(), words[j].copy())
    return True, None


def minimal_codewords(code: LinearCode, cap: int = PAIR_SCAN_CAP) -> np.ndarray:
    """All nonzero codewords that cover only their own scalar multiples."""
    if code.size > cap:
        raise CodeTooLarge(f"{code.size} codewords exceeds cap {cap}")
    words = all_codewords(code, cap=cap)[1:]
    S = words != 0
    weight = S.sum(axis=1)
    keep = np.ones(words.shape[0], dtype=bool)
    chunk = 512
    for lo in range(0, S.shape[0], chunk):
        cov = _cover_matrix(S, slice(lo, lo + chunk))
        for i_local in range(cov.shape[0]):
            i = lo + i_local
            js = np.nonzero(cov[i_local])[0]
            for j in js:
                if j != i and (weight[j] < weight[i] or not _proportional(words[i], words[j], code.p)):
                    keep[i] = False
                    break
    return words[keep]


@dataclass(frozen=True)
class AccessStructureSummary:
    n: int
    k: int
    q: int
    d: int
    participants: int
    minimal_access_sets: int
    coverage: dict[int, int] = field(default_factory=dict)
    democratic: bool = True
    dictators: tuple[int, ...] = ()
    non_dictator_count: int | None = None

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "q": self.q,
            "d": self.d,
            "participants": self.participants,
            "minimal_access_sets": str(self.minimal_access_sets),
            "coverage": {str(t): str(c) for t, c in sorted(self.coverage.items())},
            "democratic": self.democratic,
        }
        if self.d == 2:
            out["dictators"] = list(self.dictators)
            out["non_dictator_count"] = str(self.non_dictator_count)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _min_distance_any(code: LinearCode) -> int | None:
    try:
        return enumerate_weight_distribution(code).min_weight
    except CodeTooLarge:
        small = enumerate_weight_distribution(dual_code(code))
        return dual_distribution(small).min_weight


def access_structure(base: LinearCode, dual_minimal: bool, d: int | None = None) -> AccessStructureSummary:
    """Counts for the scheme based on ``base`` (requires base^perp minimal).

    ``dual_minimal`` is the caller's evidence (ratio test or brute force);
    ``d`` is the minimum distance of ``base``, computed when omitted.
    """
    if not dual_minimal:
        raise DualNotMinimal("minimality of the dual code was not established")
    n, k, q = base.n, base.k, base.p
    if d is None:
        d = _min_distance_any(base)
    total = q ** (n - k - 1)
    coverage: dict[int, int] = {}
    dictators: tuple[int, ...] = ()
    non_dict = None
    democratic = True
    if d is not None and d >= 3:
        for t in range(1, min(n - k - 1, d - 2) + 1):
            coverage[t] = (q - 1) ** t * q ** (n - k - (t + 1))
    elif d == 2:
        H = dual_code(base).basis  # parity-check matrix of base
        h0 = H[:, 0]
        dictators = tuple(
            i for i in range(1, n)
            if H[:, i].any() and h0.any() and _proportional(h0, H[:, i], q)
        )
        non_dict = (q - 1) * q ** (n - k - 2)
        democratic = not dictators
    return AccessStructureSummary(n, k, q, d, n - 1, total, coverage, democratic, dictators, non_dict)


def minimal_access_sets(base: LinearCode, cap: int = PAIR_SCAN_CAP) -> list[frozenset[int]]:
    """Enumerate minimal access sets from the minimal codewords of base^perp
    with coordinate 0 equal to 1."""
    mins = minimal_codewords(dual_code(base), cap=cap)
    sets = [frozenset(int(i) for i in np.nonzero(c)[0] if i != 0) for c in mins if c[0] == 1]
    return sorted(sets, key=sorted)


def membership_counts(sets, participants: int, t: int) -> Counter:
    """How many access sets contain each t-subset of participants 1..participants."""
    counts: Counter = Counter()
    for s in sets:
        for group in itertools.combinations(sorted(s), t):
            counts[group] += 1
    for group in itertools.combinations(range(1, participants + 1), t):
        counts.setdefault(group, 0)
    return counts
