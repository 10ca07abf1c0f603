"""Linear codes over GF(p): construction, enumeration, dual and extension."""

from __future__ import annotations

import logging
import os
import warnings
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from ..errors import CodeTooLarge, MixedFields, NonzeroAtZero
from ..functions import Kind, NonlinearFunction
from ..galois import AdditiveSubgroup
from ..linalg import nullspace, rank, rref
from .distribution import WeightDistribution

__all__ = [
    "LinearCode",
    "build_code",
    "enumerate_weight_distribution",
    "all_codewords",
    "dual_code",
    "extend_code",
    "min_distance",
    "dual_low_weight_counts",
    "ENUM_CAP",
]

log = logging.getLogger(__name__)

ENUM_CAP = 2**24
# rows of the inner block materialized at once during enumeration
_INNER = 2**13


@dataclass(frozen=True, eq=False)
class LinearCode:
    p: int
    n: int
    generators: np.ndarray = field(repr=False)
    provenance: tuple = ()
    flags: tuple = ()

    @cached_property
    def basis(self) -> np.ndarray:
        """RREF basis rows (k x n)."""
        g = np.asarray(self.generators, dtype=np.int64)
        if g.size == 0:
            return np.zeros((0, self.n), dtype=np.int64)
        return rref(g, self.p)[0]

    @property
    def k(self) -> int:
        return self.basis.shape[0]

    @property
    def size(self) -> int:
        return self.p**self.k

    def __repr__(self) -> str:
        chain = " <- ".join(reversed(self.provenance)) if self.provenance else "?"
        return f"LinearCode[{self.n}, {self.k}] over GF({self.p}) ({chain})"

    def derived(self, gens, step: str, n: int | None = None) -> "LinearCode":
        return LinearCode(self.p, self.n if n is None else n, gens, self.provenance + (step,))

    # generator matrix text format --------------------------------------------
    def to_text(self) -> str:
        lines = [f"{self.p} {self.n} {self.k}"]
        lines += [" ".join(str(int(v)) for v in row) for row in self.basis]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "LinearCode":
        lines = [ln.split() for ln in text.strip().splitlines()]
        p, n, k = map(int, lines[0])
        rows = np.array([[int(v) for v in ln] for ln in lines[1 : 1 + k]], dtype=np.int64)
        if k and rows.shape != (k, n):
            raise ValueError(f"expected {k} rows of length {n}")
        return cls(p, n, rows.reshape(k, n), ("loaded",))


def build_code(f: NonlinearFunction, A: AdditiveSubgroup) -> LinearCode:
    """The code {(Tr(a f(x) + b x))_{x != 0} : a in A, b in GF(p^m)}.

    Rows are c_{a,0} for the basis elements a of A followed by c_{0,alpha^j}.
    """
    F = f.field
    if A.params != F:
        raise MixedFields("subgroup and function live in different fields")
    if f.table[0] != 0:
        raise NonzeroAtZero(f"{f!r} does not vanish at 0")
    p = F.p
    xs = F.digits[1:]  # coordinates: x != 0 in enc order
    fx = F.digits[f.table[1:]]
    T = F.trace_form
    a_rows = np.array([a.coeffs for a in A.basis], dtype=np.int64).reshape(len(A.basis), F.m)
    top = (a_rows @ T @ fx.T) % p
    bottom = (T @ xs.T) % p  # row j is Tr(alpha^j x)
    gens = np.vstack([top, bottom]).astype(np.int64)
    prov = (f"{f!r}", f"A=span{[int(a) for a in A.basis]}")
    code = LinearCode(p, F.order - 1, gens, prov)
    flags: tuple = ()
    expected = F.m + A.r
    if code.k != expected:
        flags = ("rank_deficient",)
        msg = f"{f!r}: rank {code.k} != m + r = {expected}"
        if f.kind.is_ab or f.kind.is_planar:
            warnings.warn(msg, RuntimeWarning, stacklevel=2)
        log.info(msg)
    return LinearCode(p, code.n, gens, prov, flags)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("ABCODES_THREADS", "1")))
    except ValueError:
        return 1


def _combos(rows: np.ndarray, p: int, start: int, stop: int) -> np.ndarray:
    """Linear combinations for message indices in [start, stop) (base-p digits)."""
    k = rows.shape[0]
    idx = np.arange(start, stop, dtype=np.int64)
    digits = np.stack([(idx // p**j) % p for j in range(k)], axis=1) if k else np.zeros((idx.size, 0), np.int64)
    return (digits @ rows) % p


def enumerate_weight_distribution(code: LinearCode, cap: int = ENUM_CAP) -> WeightDistribution:
    """Exact weight distribution by visiting all p^k codewords."""
    p, n, k = code.p, code.n, code.k
    if p**k > cap:
        raise CodeTooLarge(f"{p}^{k} codewords exceeds the enumeration cap {cap}")
    G = code.basis
    k1 = 0
    while k1 < k and p ** (k1 + 1) <= _INNER:
        k1 += 1
    inner = _combos(G[:k1], p, 0, p**k1)
    outer_rows = G[k1:]
    n_outer = p ** (k - k1)

    def work(lo: int, hi: int) -> np.ndarray:
        hist = np.zeros(n + 1, dtype=np.int64)
        for v in _combos(outer_rows, p, lo, hi):
            w = np.count_nonzero((inner + v) % p, axis=1)
            hist += np.bincount(w, minlength=n + 1)
        return hist

    threads = _threads()
    if threads == 1 or n_outer < 2 * threads:
        hist = work(0, n_outer)
    else:
        bounds = np.linspace(0, n_outer, threads + 1, dtype=np.int64)
        with ThreadPoolExecutor(threads) as ex:
            parts = list(ex.map(work, bounds[:-1], bounds[1:]))
        hist = np.sum(parts, axis=0)
    counts = {w: int(c) for w, c in enumerate(hist) if c}
    return WeightDistribution(n, counts, k=k, p=p)


def all_codewords(code: LinearCode, cap: int = 2**16) -> np.ndarray:
    """Every codeword as a row (p^k x n)."""
    if code.size > cap:
        raise CodeTooLarge(f"{code.size} codewords exceeds cap {cap}")
    return _combos(code.basis, code.p, 0, code.size)


def dual_code(code: LinearCode) -> LinearCode:
    g = code.basis
    if g.shape[0] == 0:
        gens = np.eye(code.n, dtype=np.int64)
    else:
        gens = nullspace(g, code.p)
    return code.derived(gens.reshape(-1, code.n), "dual")


def extend_code(code: LinearCode) -> LinearCode:
    """Append a coordinate making every codeword sum to zero mod p."""
    g = np.asarray(code.generators, dtype=np.int64).reshape(-1, code.n)
    extra = (-g.sum(axis=1)) % code.p
    return code.derived(np.hstack([g, extra[:, None]]), "extended", n=code.n + 1)


def min_distance(code_or_wd, cap: int = ENUM_CAP) -> int | None:
    """Smallest nonzero weight; ``None`` for the zero code."""
    if isinstance(code_or_wd, WeightDistribution):
        return code_or_wd.min_weight
    return enumerate_weight_distribution(code_or_wd, cap=cap).min_weight


def dual_low_weight_counts(code: LinearCode) -> tuple[int, int]:
    """(A_1, A_2) of the dual, read off the columns of the generator matrix.

    A weight-1 dual word is a zero column; a weight-2 dual word is a pair of
    proportional columns.
    """
    p = code.p
    cols = code.basis.T
    zero = [i for i in range(code.n) if not cols[i].any()]
    classes: Counter = Counter()
    for i in range(code.n):
        c = cols[i]
        if not c.any():
            continue
        lead = int(c[np.nonzero(c)[0][0]])
        classes[tuple(((c * pow(lead, -1, p)) % p).tolist())] += 1
    z = len(zero)
    b1 = (p - 1) * z
    b2 = (p - 1) ** 2 * (z * (z - 1) // 2) + (p - 1) * sum(s * (s - 1) // 2 for s in classes.values())
    return b1, b2
