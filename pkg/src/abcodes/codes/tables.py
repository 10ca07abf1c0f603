"""Closed-form weight distributions and low-weight dual coefficients.

Formulas are evaluated with exact rationals; any non-integral result is a
hard error because it means the formula is being used outside its range.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import EvenCharacteristic, EvenM, NonIntegralResult, RankOutOfRange
from .distribution import WeightDistribution

__all__ = [
    "ab_weights",
    "planar_weights",
    "theoretical_wd_ab",
    "theoretical_wd_planar_f1",
    "theoretical_wd_planar_p3",
    "theoretical_wd_ext_ab",
    "theoretical_wd_ext_p3",
    "dual_low_weights_ab",
    "dual_low_weights_f1",
    "dual_low_weights_p3",
    "planar_dual_a2",
    "pless_wd_planar",
]


def _int(x, what: str) -> int:
    x = Fraction(x)
    if x.denominator != 1:
        raise NonIntegralResult(f"{what} evaluates to {x}")
    return int(x)


def _odd_m(m: int) -> None:
    if m % 2 == 0 or m < 3:
        raise EvenM(f"m must be odd and >= 3, got {m}")


def _rank(m: int, r: int, lo: int = 0) -> None:
    if not lo <= r <= m:
        raise RankOutOfRange(f"r = {r} outside {lo}..{m}")


def ab_weights(m: int) -> tuple[int, int, int]:
    h = 2 ** ((m - 1) // 2)
    return 2 ** (m - 1) - h, 2 ** (m - 1), 2 ** (m - 1) + h


def planar_weights(p: int, m: int) -> tuple[int, int, int]:
    h = p ** ((m - 1) // 2)
    base = (p - 1) * p ** (m - 1)
    return base - h, base, base + h


def theoretical_wd_ab(m: int, r: int) -> WeightDistribution:
    """Three-weight distribution of the binary code from an AB function."""
    _odd_m(m)
    _rank(m, r)
    w1, w2, w3 = ab_weights(m)
    e = 2 ** ((m - 3) // 2)
    counts = {
        0: 1,
        w1: (2**r - 1) * (2 ** (m - 2) + e),
        w2: 2 ** (m - 1) * (2**r + 1) - 1,
        w3: (2**r - 1) * (2 ** (m - 2) - e),
    }
    return WeightDistribution(2**m - 1, counts, k=m + r, p=2)


def _simplex_like(p: int, m: int) -> WeightDistribution:
    # r = 0: only Tr(bx), every nonzero codeword has weight (p-1)p^(m-1)
    return WeightDistribution(p**m - 1, {0: 1, (p - 1) * p ** (m - 1): p**m - 1}, k=m, p=p)


def theoretical_wd_planar_f1(p: int, m: int, r: int) -> WeightDistribution:
    """Distribution for f(x) = x^(p^t + 1), odd p, odd m.

    The three-weight formula needs r >= 1; at r = 0 the code is the
    one-weight trace code and is returned as such.
    """
    if p % 2 == 0:
        raise EvenCharacteristic("planar codes need odd p")
    _odd_m(m)
    _rank(m, r)
    if r == 0:
        return _simplex_like(p, m)
    P = Fraction(p)
    h = (m - 1) // 2
    a1 = Fraction(p - 1, 2) * (P ** (h + r) + P ** (r - 1) * (-2 + p + P**m) - P**h - (p - 1) * P ** (m - 1))
    a2 = (P ** (m + r - 1) + P ** (m + 1) - 2 * P**m + P ** (m - 1)
          - P ** (r + 1) + 3 * P**r - 2 * P ** (r - 1) - 1)
    a3 = Fraction(p - 1, 2) * (P ** (r - 1) * (P**m + p - 2) - P ** (h + r) + P**h - (p - 1) * P ** (m - 1))
    w1, w2, w3 = planar_weights(p, m)
    counts = {0: 1, w1: _int(a1, "A_w1"), w2: _int(a2, "A_w2"), w3: _int(a3, "A_w3")}
    return WeightDistribution(p**m - 1, counts, k=m + r, p=p)


def theoretical_wd_planar_p3(m: int, r: int) -> WeightDistribution:
    """Ternary distribution shared by all three planar families (r >= 1 formula)."""
    _odd_m(m)
    _rank(m, r)
    if r == 0:
        return _simplex_like(3, m)
    T = Fraction(3)
    h = (m - 1) // 2
    a1 = -T**h - 2 * T ** (m - 1) + T ** (r - 1) + T ** (h + r) + T ** (m + r - 1)
    a2 = T ** (m + r - 1) - 2 * T ** (r - 1) + 4 * T ** (m - 1) - 1
    a3 = T**h - 2 * T ** (m - 1) + T ** (r - 1) - T ** (h + r) + T ** (m + r - 1)
    w1, w2, w3 = planar_weights(3, m)
    counts = {0: 1, w1: _int(a1, "A_w1"), w2: _int(a2, "A_w2"), w3: _int(a3, "A_w3")}
    return WeightDistribution(3**m - 1, counts, k=m + r, p=3)


def theoretical_wd_ext_ab(m: int, r: int) -> WeightDistribution:
    """Distribution of the dual of the extended dual (binary, 1 <= r <= m)."""
    _odd_m(m)
    _rank(m, r, lo=1)
    w1, w2, w3 = ab_weights(m)
    side = 2 ** (m - 1) * (2**r - 1)
    counts = {0: 1, w1: side, w2: 2 ** (m + r) + 2**m - 2, w3: side, 2**m: 1}
    return WeightDistribution(2**m, counts, k=m + r + 1, p=2)


def theoretical_wd_ext_p3(m: int, r: int) -> WeightDistribution:
    """Distribution of the dual of the extended dual (ternary, 1 <= r <= m)."""
    _odd_m(m)
    _rank(m, r, lo=1)
    w1, w2, w3 = planar_weights(3, m)
    side = 3**m * (3**r - 1)
    counts = {0: 1, w1: side, w2: 3 ** (m + r) + 2 * 3**m - 3, w3: side, 3**m: 2}
    return WeightDistribution(3**m, counts, k=m + r + 1, p=3)


# ---------------------------------------------------------------------------
# low-weight dual coefficients, scaled by the size of the primal code

def dual_low_weights_ab(m: int, r: int) -> tuple[int, int]:
    """(2^(m+r) A_3^perp, 2^(m+r) A_4^perp) for the binary AB code."""
    _odd_m(m)
    _rank(m, r)
    a3 = Fraction(1, 3) * 2 ** (m - 1) * (2**m - 2**r) * (2**m - 2)
    a4 = Fraction(1, 3) * Fraction(2) ** (m - 3) * (2**m - 2**r) * (8 - 3 * 2 ** (m + 1) + 4**m)
    return _int(a3, "A3"), _int(a4, "A4")


def dual_low_weights_f1(p: int, m: int, r: int) -> tuple[int, int | None]:
    """(p^(m+r) A_3^perp, p^(m+r) A_4^perp) for the code from x^(p^t+1), odd p.

    A_4 is only available in closed form for p = 3, r = m; the general-p
    expression is not integral there and is not used.
    """
    if p % 2 == 0:
        raise EvenCharacteristic("planar codes need odd p")
    _odd_m(m)
    _rank(m, r)
    P = Fraction(p)
    pm, pr = P**m, P**r
    a3 = Fraction(1, 6) * (p - 1) * pm * ((p - 1) ** 2 * pm**2 - pr * (6 + (p - 6) * p) - pm * (p + pr * (3 * p - 5)))
    a4 = None
    if p == 3 and r == m:
        a4 = _int(Fraction(5, 4) * 3 ** (2 * m - 1) * (9**m - 4 * 3**m + 3), "A4")
    return _int(a3, "A3"), a4


def dual_low_weights_p3(m: int, r: int, variant: str = "code") -> tuple[int, ...]:
    """Scaled low-weight coefficients for the ternary planar codes.

    ``variant="code"``: (3^(m+r) A_3^perp, 3^(m+r) A_4^perp) of the dual.
    ``variant="extended"``: (A_3, A_4, A_5) of the extended dual, each scaled
    by 3^(m+r+1), the size of its dual.
    """
    _odd_m(m)
    _rank(m, r)
    if variant == "code":
        a3 = 3 ** (m - 1) * (4 * 3**m - 3) * (3**m - 3**r)
        a4 = Fraction(1, 4) * 3 ** (m - 1) * (
            14 * 3 ** (m + 1) - 3 ** (3 + r) + 14 * 3 ** (m + r + 1)
            - 3 ** (2 * m + r + 1) - 62 * 9**m + 8 * 27**m
        )
        return a3, _int(a4, "A4")
    if variant == "extended":
        a3 = 9**m * (3**m - 3**r)
        a4 = Fraction(1, 4) * 3 ** (2 * m + 1) * (3**m - 3) * (3**m - 3**r)
        a5 = Fraction(1, 4) * 9**m * (3**m - 3) * (-7 * 3**m + 2 * 3 ** (r + 1) + 9**m)
        return a3, _int(a4, "A4"), _int(a5, "A5")
    raise ValueError(f"unknown variant {variant!r}")


def planar_dual_a2(p: int, m: int, r: int) -> int:
    """Number of weight-2 dual codewords of a planar code C_(f,A), odd p.

    For the catalog functions f(-x) = f(x), so columns x and -x are negatives
    of each other whenever Tr(a f(x)) = 0 for all a in A. f is 2-to-1 onto
    the nonzero squares, and exactly half of the nonzero elements of the
    trace-dual of A (order p^(m-r)) are squares, giving p^(m-r) - 1 such x.
    Each GF(p)-line {c x} of them contributes (p-1) * C(p-1, 2) words.
    """
    if p % 2 == 0:
        raise EvenCharacteristic("planar codes need odd p")
    _rank(m, r)
    return (p ** (m - r) - 1) * (p - 1) * (p - 2) // 2


def pless_wd_planar(p: int, m: int, r: int) -> WeightDistribution:
    """Three-weight distribution solved from the power moments with the true
    dual A_2 (planar_dual_a2) instead of assuming it vanishes."""
    from .macwilliams import pless_solve

    if r == 0:
        return _simplex_like(p, m)
    return pless_solve(planar_weights(p, m), p**m - 1, m + r, p, b2=planar_dual_a2(p, m, r))
