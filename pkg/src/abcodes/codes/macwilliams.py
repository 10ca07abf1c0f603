"""MacWilliams transform and Pless power moments."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..errors import NonIntegralResult
from .distribution import WeightDistribution, WeightEnumerator

__all__ = [
    "u_coefficient",
    "macwilliams_transform",
    "dual_distribution",
    "pless_check",
    "pless_moments",
    "pless_solve",
]


def u_coefficient(w: int, n: int, k: int, p: int) -> int:
    """Coefficient of z^k in (1 - z)^w (1 + (p-1) z)^(n-w)."""
    total = 0
    for i in range(max(0, k - (n - w)), min(w, k) + 1):
        term = comb(w, i) * comb(n - w, k - i) * (p - 1) ** (k - i)
        total += -term if i & 1 else term
    return total


def macwilliams_transform(
    A: WeightEnumerator | WeightDistribution,
    n: int,
    k: int,
    p: int,
    max_weight: int | None = None,
) -> WeightEnumerator:
    """Weight enumerator of the dual code.

    A_j^perp = p^-k * sum_w A_w * U_w(j). Only coefficients up to
    ``max_weight`` are produced when it is given (the rest are zero-filled
    and must not be read).
    """
    if isinstance(A, WeightDistribution):
        A = A.enumerator()
    if A.n != n:
        raise ValueError(f"enumerator length {A.n} != n = {n}")
    scale = p**k
    if sum(A.coeffs) != scale:
        raise NonIntegralResult(f"coefficients sum to {sum(A.coeffs)}, expected {p}^{k}")
    top = n if max_weight is None else min(n, max_weight)
    support = [(w, c) for w, c in enumerate(A.coeffs) if c]
    out = []
    for j in range(top + 1):
        num = sum(c * u_coefficient(w, n, j, p) for w, c in support)
        q, rem = divmod(num, scale)
        if rem:
            raise NonIntegralResult(f"A_{j}^perp = {num}/{scale} is not an integer")
        if q < 0:
            raise NonIntegralResult(f"A_{j}^perp = {q} is negative")
        out.append(q)
    out += [0] * (n - top)
    return WeightEnumerator(tuple(out))


def dual_distribution(wd: WeightDistribution, k: int | None = None, p: int | None = None,
                      max_weight: int | None = None) -> WeightDistribution:
    """Dual weight distribution via MacWilliams (k, p default to wd's own)."""
    k = wd.k if k is None else k
    p = wd.p if p is None else p
    if k is None or p is None:
        raise ValueError("dimension and characteristic are required")
    en = macwilliams_transform(wd, wd.n, k, p, max_weight=max_weight)
    return WeightDistribution(wd.n, dict(enumerate(en.coeffs)), k=wd.n - k, p=p)


def pless_moments(n: int, k: int, p: int, b1: int = 0, b2: int = 0) -> tuple[int, int, int]:
    """Right-hand sides of the first three power moments sum w^e A_w, e = 0, 1, 2.

    ``b1``, ``b2`` are the dual's A_1, A_2. The e = 2 value is returned
    multiplied by p^2 and e = 1 by p so that everything stays integral for
    small k.
    """
    m0 = p**k
    m1 = p**k * ((p - 1) * n - b1)  # = p * sum w A_w
    m2 = p**k * ((p - 1) * n * ((p - 1) * n + 1) - (2 * p * n - p - 2 * n + 2) * b1 + 2 * b2)
    return m0, m1, m2


def pless_check(wd: WeightDistribution, n: int, k: int, p: int, b1: int = 0, b2: int = 0) -> bool:
    """True iff wd satisfies the first three Pless power moments.

    With b1 = b2 = 0 these reduce to
    sum A_w = p^k, sum w A_w = p^(k-1) (p-1) n and
    sum w^2 A_w = p^(k-2) (p-1) n ((p-1) n + 1).
    """
    m0, m1, m2 = pless_moments(n, k, p, b1, b2)
    s0 = sum(wd.counts.values())
    s1 = sum(w * c for w, c in wd.counts.items())
    s2 = sum(w * w * c for w, c in wd.counts.items())
    return s0 == m0 and p * s1 == m1 and p * p * s2 == m2


def pless_solve(weights, n: int, k: int, p: int, b1: int = 0, b2: int = 0,
                fixed: dict[int, int] | None = None) -> WeightDistribution:
    """Solve the first three power moments for the multiplicities of exactly
    three unknown weights, given the dual's A_1, A_2 and any known counts.
    """
    ws = list(weights)
    if len(ws) != 3 or len(set(ws)) != 3:
        raise ValueError("exactly three distinct unknown weights are needed")
    fixed = {0: 1} if fixed is None else dict(fixed)
    m0, m1, m2 = pless_moments(n, k, p, b1, b2)
    rhs = [
        Fraction(m0) - sum(fixed.values()),
        Fraction(m1, p) - sum(w * c for w, c in fixed.items()),
        Fraction(m2, p * p) - sum(w * w * c for w, c in fixed.items()),
    ]
    mat = [[Fraction(w) ** e for w in ws] for e in range(3)]
    # Gaussian elimination on the 3x3 Vandermonde system
    for c in range(3):
        piv = next(r for r in range(c, 3) if mat[r][c] != 0)
        mat[c], mat[piv] = mat[piv], mat[c]
        rhs[c], rhs[piv] = rhs[piv], rhs[c]
        for r in range(3):
            if r != c and mat[r][c]:
                f = mat[r][c] / mat[c][c]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[c])]
                rhs[r] -= f * rhs[c]
    sol = [rhs[i] / mat[i][i] for i in range(3)]
    counts = dict(fixed)
    for w, s in zip(ws, sol):
        if s.denominator != 1:
            raise NonIntegralResult(f"A_{w} = {s} is not an integer")
        counts[w] = counts.get(w, 0) + int(s)
    return WeightDistribution(n, counts, k=k, p=p)
