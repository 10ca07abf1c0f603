"""Arithmetic in GF(p) and GF(p^m) over a polynomial basis.

Elements are stored as coefficient tuples (coefficient of x^i at index i).
The integer encoding ``enc(x) = sum(c_i * p**i)`` is used everywhere an
element has to be serialized or ordered.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DependentBasis,
    DivisionByZero,
    MixedFields,
    NonPrime,
    RankOutOfRange,
    ReducibleModulus,
)

__all__ = [
    "FieldParams",
    "FieldElement",
    "AdditiveSubgroup",
    "make_field",
    "is_prime",
    "trace",
    "subgroup_from_basis",
    "canonical_subgroup",
    "random_subgroup",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# polynomials over GF(p), little-endian coefficient tuples

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``mod``."""
    a = _trim(list(a))
    dm = len(mod) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        shift = len(a) - 1 - dm
        for i, c in enumerate(mod):
            a[shift + i] = (a[shift + i] - lead * c) % p
        _trim(a)
    return a


def _is_irreducible(mod: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(mod) - 1
    if deg == 1:
        return True
    if mod[0] == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(mod, list(low) + [1], p):
                return False
    return True


def _encode(coeffs: Iterable[int], p: int) -> int:
    v = 0
    for c in reversed(tuple(coeffs)):
        v = v * p + c
    return v


def _decode(v: int, p: int, m: int) -> tuple[int, ...]:
    out = []
    for _ in range(m):
        v, c = divmod(v, p)
        out.append(c)
    return tuple(out)


@lru_cache(maxsize=None)
def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    # monic degree-m polynomials in increasing integer encoding
    for v in range(p**m, 2 * p**m):
        cand = _decode(v, p, m + 1)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldParams:
    """GF(p^m) with a fixed monic irreducible modulus."""

    p: int
    m: int
    modulus: tuple[int, ...]

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m}, modulus={self.modulus_str()})"

    @property
    def order(self) -> int:
        return self.p**self.m

    def modulus_str(self) -> str:
        terms = []
        for i in range(self.m, -1, -1):
            c = self.modulus[i]
            if not c:
                continue
            mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(mono if c == 1 and i else f"{c}*{mono}" if i else str(c))
        return "+".join(terms)

    # element constructors -------------------------------------------------

    def __call__(self, value: int | Sequence[int]) -> "FieldElement":
        if isinstance(value, (int, np.integer)):
            v = int(value)
            if not 0 <= v < self.order:
                raise ValueError(f"encoding {v} out of range for {self!r}")
            return FieldElement(_decode(v, self.p, self.m), self)
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.m:
            coeffs = _poly_mod(coeffs, self.modulus, self.p)
        coeffs += [0] * (self.m - len(coeffs))
        return FieldElement(tuple(coeffs), self)

    @property
    def zero(self) -> "FieldElement":
        return self(0)

    @property
    def one(self) -> "FieldElement":
        return self(1)

    @property
    def alpha(self) -> "FieldElement":
        """The class of x (a root of the modulus)."""
        return self([0, 1])

    def scalar(self, c: int) -> "FieldElement":
        """Embed c in GF(p) into the field."""
        return self([c % self.p])

    def elements(self) -> list["FieldElement"]:
        return [self(v) for v in range(self.order)]

    # bulk helpers used by the vectorized code paths -----------------------

    @cached_property
    def digits(self) -> np.ndarray:
        """``order x m`` array; row v holds the coefficients of enc v."""
        v = np.arange(self.order, dtype=np.int64)
        return np.stack([(v // self.p**i) % self.p for i in range(self.m)], axis=1)

    @cached_property
    def _weights(self) -> np.ndarray:
        return np.array([self.p**i for i in range(self.m)], dtype=np.int64)

    def encode_digits(self, digits: np.ndarray) -> np.ndarray:
        return (np.asarray(digits) % self.p) @ self._weights

    @cached_property
    def trace_form(self) -> np.ndarray:
        """``T[i, j] = Tr(alpha^(i+j))``, so Tr(a*y) = a_digits @ T @ y_digits."""
        basis_traces = [trace(self.alpha ** k) for k in range(2 * self.m - 1)]
        return np.array(
            [[basis_traces[i + j] for j in range(self.m)] for i in range(self.m)],
            dtype=np.int64,
        )


def make_field(p: int, m: int, modulus: Sequence[int] | None = None) -> FieldParams:
    """Build GF(p^m).

    Without an explicit modulus the lexicographically smallest monic
    irreducible polynomial (by integer encoding of its coefficients) is used.
    """
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if modulus is None:
        return FieldParams(p, m, _smallest_irreducible(p, m))
    mod = tuple(int(c) % p for c in modulus)
    if len(mod) != m + 1 or mod[-1] != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {m}: {tuple(modulus)}")
    if not _is_irreducible(mod, p):
        raise ReducibleModulus(f"modulus {mod} is reducible over GF({p})")
    return FieldParams(p, m, mod)


@dataclass(frozen=True)
class FieldElement:
    coeffs: tuple[int, ...]
    params: FieldParams = field(repr=False)

    # ordering and serialization follow the integer encoding
    def __int__(self) -> int:
        return _encode(self.coeffs, self.params.p)

    __index__ = __int__

    @property
    def enc(self) -> int:
        return int(self)

    def __repr__(self) -> str:
        return f"<{int(self)} in GF({self.params.p}^{self.params.m})>"

    def __lt__(self, other: "FieldElement") -> bool:
        return int(self) < int(other)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def _check(self, other) -> "FieldElement":
        if isinstance(other, int):
            return self.params.scalar(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.params != self.params:
            raise MixedFields(f"{self.params!r} vs {other.params!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.params.p
        return FieldElement(
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)), self.params
        )

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        p = self.params.p
        return FieldElement(tuple((-a) % p for a in self.coeffs), self.params)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p, m = self.params.p, self.params.m
        prod = [0] * (2 * m - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] = (prod[i + j] + a * b) % p
        red = _poly_mod(prod, self.params.modulus, p)
        return FieldElement(tuple(red + [0] * (m - len(red))), self.params)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "FieldElement":
        e = int(e)
        if e < 0:
            return self.inv() ** (-e)
        result = self.params.one
        base = self
        # exponent applied as written (big ints are fine)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self) -> "FieldElement":
        if not self:
            raise DivisionByZero("zero has no multiplicative inverse")
        return self ** (self.params.order - 2)

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def frobenius(self) -> "FieldElement":
        return self**self.params.p


def trace(x: FieldElement) -> int:
    """Absolute trace ``x + x^p + ... + x^(p^(m-1))`` as an integer in [0, p)."""
    acc = x
    y = x
    for _ in range(x.params.m - 1):
        y = y.frobenius()
        acc = acc + y
    if any(acc.coeffs[1:]):
        raise AssertionError(f"trace of {x!r} left GF(p): {acc.coeffs}")  # pragma: no cover
    return acc.coeffs[0]


# ---------------------------------------------------------------------------
# additive subgroups

def _rank_mod_p(rows: np.ndarray, p: int) -> int:
    from .linalg import rank

    return rank(rows, p)


@dataclass(frozen=True)
class AdditiveSubgroup:
    params: FieldParams
    basis: tuple[FieldElement, ...]
    elements: tuple[FieldElement, ...] = field(repr=False)

    @property
    def r(self) -> int:
        return len(self.basis)

    @property
    def order(self) -> int:
        return len(self.elements)

    def encodings(self) -> list[int]:
        return [int(e) for e in self.elements]

    def __contains__(self, x: FieldElement) -> bool:
        return x in self._members

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.elements)


def subgroup_from_basis(params: FieldParams, basis: Sequence[FieldElement]) -> AdditiveSubgroup:
    """Span of ``basis`` over GF(p); raises DependentBasis on dependent input."""
    basis = tuple(basis)
    for b in basis:
        if b.params != params:
            raise MixedFields(f"basis element {b!r} not in {params!r}")
    if basis:
        mat = np.array([b.coeffs for b in basis], dtype=np.int64)
        if _rank_mod_p(mat, params.p) < len(basis):
            raise DependentBasis(f"basis {[int(b) for b in basis]} is linearly dependent")
    p = params.p
    span = []
    for combo in itertools.product(range(p), repeat=len(basis)):
        v = params.zero
        for c, b in zip(combo, basis):
            if c:
                v = v + b * c
        span.append(v)
    span.sort(key=int)
    return AdditiveSubgroup(params, basis, tuple(span))


def canonical_subgroup(params: FieldParams, r: int) -> AdditiveSubgroup:
    """Subgroup spanned by 1, alpha, ..., alpha^(r-1)."""
    if not 0 <= r <= params.m:
        raise RankOutOfRange(f"rank {r} outside 0..{params.m}")
    return subgroup_from_basis(params, [params(params.p**i) for i in range(r)])


def random_subgroup(params: FieldParams, r: int, rng) -> AdditiveSubgroup:
    """Uniformly random rank-r subgroup (rejection sampling on bases)."""
    if not 0 <= r <= params.m:
        raise RankOutOfRange(f"rank {r} outside 0..{params.m}")
    while True:
        basis = [params(int(rng.integers(1, params.order))) for _ in range(r)]
        try:
            return subgroup_from_basis(params, basis)
        except DependentBasis:
            continue
