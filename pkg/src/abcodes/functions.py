"""Almost bent and planar function catalog with exhaustive property checks."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Any, Mapping

import numpy as np

from .errors import (
    EvenCharacteristic,
    EvenDegree,
    FieldTooLarge,
    InvalidParameters,
    MixedFields,
    OddCharacteristic,
)
from .galois import FieldElement, FieldParams, make_field, trace

__all__ = [
    "Kind",
    "Classification",
    "NonlinearFunction",
    "SpectrumReport",
    "CATALOG_IDS",
    "make_function",
    "power_function",
    "evaluate",
    "value_table",
    "lambda_value",
    "is_almost_bent",
    "is_planar",
    "walsh_value",
    "walsh_spectrum",
    "is_semi_bent",
    "component_table",
]

AB_MAX_M = 9
PLANAR_MAX_ORDER = 3**7


class Kind(enum.Enum):
    AB_GOLD = "ab:gold"
    AB_KASAMI = "ab:kasami"
    AB_WELCH = "ab:welch"
    AB_NIHO1 = "ab:niho1"
    AB_NIHO2 = "ab:niho2"
    AB_TRACE_VARIANT = "ab:trace"
    P_DEMBOWSKI_OSTROM = "planar:do"
    P_COULTER_MATTHEWS = "planar:cm"
    P_DING_YUAN = "planar:dy"
    # not part of the catalog; lets callers probe arbitrary monomials
    MONOMIAL = "raw:power"

    @property
    def is_ab(self) -> bool:
        return self.value.startswith("ab:")

    @property
    def is_planar(self) -> bool:
        return self.value.startswith("planar:")


CATALOG_IDS = {k.value: k for k in Kind if k is not Kind.MONOMIAL}


class Classification(enum.Enum):
    ALMOST_BENT = "ALMOST_BENT"
    NOT_ALMOST_BENT = "NOT_ALMOST_BENT"
    PLANAR = "PLANAR"
    NOT_PLANAR = "NOT_PLANAR"
    SEMI_BENT = "SEMI_BENT"
    NOT_SEMI_BENT = "NOT_SEMI_BENT"


@dataclass(frozen=True)
class SpectrumReport:
    classification: Classification
    values: Counter = field(default_factory=Counter, compare=False)
    witness: Any = None

    def __bool__(self) -> bool:
        return not self.classification.name.startswith("NOT_")


@dataclass(frozen=True, eq=False)
class NonlinearFunction:
    kind: Kind
    field: FieldParams
    params: Mapping[str, Any]

    def __repr__(self) -> str:
        args = ", ".join(f"{k}={int(v) if isinstance(v, FieldElement) else v}"
                         for k, v in sorted(self.params.items()))
        return f"{self.kind.value}({args}) on GF({self.field.p}^{self.field.m})"

    @property
    def id(self) -> str:
        return self.kind.value

    @cached_property
    def exponent(self) -> int | None:
        """Monomial exponent for power-type entries, as an exact integer."""
        m, pr = self.field.m, self.params
        k = self.kind
        if k is Kind.AB_GOLD:
            return 2 ** pr["i"] + 1
        if k is Kind.AB_KASAMI:
            return 2 ** (2 * pr["i"]) - 2 ** pr["i"] + 1
        if k is Kind.AB_WELCH:
            return 2 ** ((m - 1) // 2) + 3
        if k is Kind.AB_NIHO1:
            return 2 ** ((m - 1) // 2) + 2 ** ((m - 1) // 4) - 1
        if k is Kind.AB_NIHO2:
            return 2 ** ((m - 1) // 2) + 2 ** ((3 * m - 1) // 4) - 1
        if k is Kind.P_DEMBOWSKI_OSTROM:
            return self.field.p ** pr["t"] + 1
        if k is Kind.P_COULTER_MATTHEWS:
            return (3 ** pr["k"] + 1) // 2
        if k is Kind.MONOMIAL:
            return pr["e"]
        return None

    def __call__(self, x: FieldElement) -> FieldElement:
        return evaluate(self, x)

    @cached_property
    def table(self) -> np.ndarray:
        return value_table(self)


def _validate(kind: Kind, F: FieldParams, pr: dict) -> None:
    p, m = F.p, F.m

    def need(cond: bool, why: str) -> None:
        if not cond:
            raise InvalidParameters(f"{kind.value}: {why} (p={p}, m={m}, {pr})")

    if kind.is_ab:
        need(p == 2, "almost bent catalog is defined over GF(2^m)")
        need(m % 2 == 1 and m >= 3, "m must be odd and >= 3")
    if kind in (Kind.AB_GOLD, Kind.AB_KASAMI, Kind.AB_TRACE_VARIANT):
        need(pr.get("i", 0) >= 1 and gcd(pr["i"], m) == 1, "need i >= 1 with gcd(i, m) = 1")
    if kind is Kind.AB_NIHO1:
        need(m % 4 == 1, "requires m = 1 mod 4")
    if kind is Kind.AB_NIHO2:
        need(m % 4 == 3, "requires m = 3 mod 4")
    if kind is Kind.AB_TRACE_VARIANT:
        need(m > 3, "requires m > 3")
        need(pr.get("form") in ("corrected", "printed"), "form must be 'corrected' or 'printed'")
    if kind.is_planar:
        need(p % 2 == 1, "planar functions need odd characteristic")
    if kind is Kind.P_DEMBOWSKI_OSTROM:
        t = pr.get("t", 0)
        need(t >= 0 and (m // gcd(m, t)) % 2 == 1, "need t >= 0 with m/gcd(m, t) odd")
    if kind is Kind.P_COULTER_MATTHEWS:
        k = pr.get("k", 1)
        need(p == 3, "requires p = 3")
        need(k >= 1 and k % 2 == 1 and gcd(m, k) == 1, "need odd k with gcd(m, k) = 1")
    if kind is Kind.P_DING_YUAN:
        need(p == 3, "requires p = 3")
        need(m % 2 == 1, "requires odd m")
        u = pr.get("u")
        need(isinstance(u, FieldElement) and u.params == F and bool(u), "u must be nonzero in the field")
    if kind is Kind.MONOMIAL:
        need(pr.get("e", 0) >= 1, "exponent must be >= 1")


def make_function(kind: Kind | str, F: FieldParams, **params) -> NonlinearFunction:
    """Catalog entry ``kind`` over F; ``u`` may be given as an integer encoding."""
    if isinstance(kind, str):
        try:
            kind = CATALOG_IDS[kind] if kind in CATALOG_IDS else Kind(kind)
        except ValueError:
            raise InvalidParameters(f"unknown function id {kind!r}") from None
    if "u" in params and not isinstance(params["u"], FieldElement):
        u = int(params["u"])
        if not 0 <= u < F.order:
            raise InvalidParameters(f"u={u} is not an element of GF({F.p}^{F.m})")
        params["u"] = F(u)
    defaults = {
        Kind.AB_GOLD: {"i": 1},
        Kind.AB_KASAMI: {"i": 1},
        Kind.AB_TRACE_VARIANT: {"i": 1, "form": "corrected"},
        Kind.P_DEMBOWSKI_OSTROM: {"t": 0},
        Kind.P_COULTER_MATTHEWS: {"k": 1},
    }.get(kind, {})
    merged = {**defaults, **params}
    _validate(kind, F, merged)
    return NonlinearFunction(kind, F, merged)


def power_function(F: FieldParams, e: int) -> NonlinearFunction:
    """x -> x^e, outside the catalog (used to probe non-AB / non-planar maps)."""
    return make_function(Kind.MONOMIAL, F, e=e)


def evaluate(f: NonlinearFunction, x: FieldElement) -> FieldElement:
    if x.params != f.field:
        raise MixedFields(f"{x!r} is not in the field of {f!r}")
    if f.exponent is not None:
        return x**f.exponent
    if f.kind is Kind.AB_TRACE_VARIANT:
        xi = x ** (2 ** f.params["i"])
        y = xi * x
        # the "printed" form multiplies by x^(2^i+1)+x, which is not almost bent
        lead = y if f.params.get("form") == "printed" else xi
        return y + (lead + x) * trace(y + x)
    if f.kind is Kind.P_DING_YUAN:
        u = f.params["u"]
        x2 = x * x
        return x2**5 - u * x2**3 - u * u * x2
    raise AssertionError(f"unhandled kind {f.kind}")  # pragma: no cover


def value_table(f: NonlinearFunction) -> np.ndarray:
    """Encodings of f(x) for every x in enc order."""
    F = f.field
    return np.array([int(evaluate(f, F(v))) for v in range(F.order)], dtype=np.int64)


# ---------------------------------------------------------------------------
# spectra

def _trace_products(F: FieldParams, a_digits: np.ndarray, y_digits: np.ndarray) -> np.ndarray:
    """Matrix of Tr(a*y) mod p for every row a of a_digits and row y of y_digits."""
    return (a_digits @ F.trace_form @ y_digits.T) % F.p


def lambda_value(g: NonlinearFunction, a: FieldElement, b: FieldElement) -> int:
    """sum over x of (-1)^Tr(a g(x) + b x), computed term by term."""
    F = g.field
    if F.p != 2:
        raise OddCharacteristic("lambda_g is defined for p = 2")
    for e in (a, b):
        if e.params != F:
            raise MixedFields(f"{e!r} not in {F!r}")
    total = 0
    for x in F.elements():
        total += -1 if trace(a * g(x) + b * x) else 1
    return total


def _fwht(vals: np.ndarray) -> np.ndarray:
    """Fast Walsh-Hadamard transform along the last axis (length 2^m)."""
    h = np.array(vals, dtype=np.int64, copy=True)
    n = h.shape[-1]
    step = 1
    while step < n:
        h = h.reshape(*h.shape[:-1], n // (2 * step), 2, step)
        lo = h[..., 0, :].copy()
        hi = h[..., 1, :]
        h[..., 0, :] = lo + hi
        h[..., 1, :] = lo - hi
        h = h.reshape(*h.shape[:-3], n)
        step *= 2
    return h


def _walsh_rows(F: FieldParams, tables: np.ndarray) -> np.ndarray:
    """Walsh values W[i, w] = sum_x (-1)^(tables[i, x] + Tr(w x)) for all w (enc order).

    Tr(w x) = u(w) . x for the coordinate vector u(w) = trace_form @ w_digits,
    so a plain Hadamard transform over coordinate vectors does the job.
    """
    signs = 1 - 2 * (np.asarray(tables, dtype=np.int64) % 2)
    had = _fwht(signs)  # indexed by the enc of the coordinate vector u
    u_enc = F.encode_digits(F.digits @ F.trace_form.T)
    return had[..., u_enc]


def is_almost_bent(g: NonlinearFunction) -> SpectrumReport:
    F = g.field
    if F.p != 2:
        raise OddCharacteristic("almost bentness is defined for p = 2")
    if F.m > AB_MAX_M:
        raise FieldTooLarge(f"exhaustive scan capped at m <= {AB_MAX_M}")
    bound = 2 ** ((F.m + 1) // 2) if F.m % 2 else None
    gd = F.digits[g.table]
    values: Counter = Counter()
    witness = None
    for a in range(1, F.order):
        comp = _trace_products(F, F.digits[a : a + 1], gd)
        lam = _walsh_rows(F, comp)[0]
        values.update(lam.tolist())
        if witness is None:
            bad = [int(b) for b in np.nonzero(~np.isin(lam, [0, bound, -bound] if bound else []))[0]]
            if bad:
                witness = (a, bad[0], int(lam[bad[0]]))
    cls = Classification.ALMOST_BENT if witness is None else Classification.NOT_ALMOST_BENT
    return SpectrumReport(cls, values, witness)


def is_planar(f: NonlinearFunction) -> SpectrumReport:
    F = f.field
    if F.p == 2:
        raise EvenCharacteristic("planarity needs odd characteristic")
    if F.order > PLANAR_MAX_ORDER:
        raise FieldTooLarge(f"exhaustive scan capped at p^m <= {PLANAR_MAX_ORDER}")
    p = F.p
    dig = F.digits
    fd = dig[f.table]
    sizes: Counter = Counter()
    witness = None
    for a in range(1, F.order):
        shifted = F.encode_digits(dig + dig[a])  # enc(x + a)
        diff = F.encode_digits(fd[shifted] - fd)
        distinct = len(np.unique(diff))
        sizes[distinct] += 1
        if distinct != F.order and witness is None:
            witness = a
    cls = Classification.PLANAR if witness is None else Classification.NOT_PLANAR
    return SpectrumReport(cls, sizes, witness)


def component_table(g: NonlinearFunction, a: FieldElement) -> np.ndarray:
    """Boolean table x -> Tr(a g(x)) in enc order."""
    F = g.field
    return _trace_products(F, np.array([a.coeffs]), F.digits[g.table])[0]


def _check_table(F: FieldParams, fb) -> np.ndarray:
    if F.p != 2:
        raise OddCharacteristic("Walsh transform is defined for p = 2")
    fb = np.asarray(fb, dtype=np.int64)
    if fb.shape != (F.order,):
        raise ValueError(f"table must have length {F.order}")
    return fb


def walsh_value(F: FieldParams, fb, w: FieldElement) -> int:
    """sum over x of (-1)^(fb(x) + Tr(w x)), computed term by term."""
    fb = _check_table(F, fb)
    total = 0
    for v in range(F.order):
        total += -1 if (int(fb[v]) + trace(w * F(v))) % 2 else 1
    return total


def walsh_spectrum(F: FieldParams, fb) -> np.ndarray:
    """All Walsh values, indexed by enc(w)."""
    return _walsh_rows(F, _check_table(F, fb))


def is_semi_bent(F: FieldParams, fb) -> SpectrumReport:
    fb = _check_table(F, fb)
    if F.m % 2 == 0:
        raise EvenDegree("semi-bentness is considered for odd m only")
    spec = walsh_spectrum(F, fb)
    bound = 2 ** ((F.m + 1) // 2)
    ok = np.isin(spec, [0, bound, -bound])
    witness = None if ok.all() else int(np.nonzero(~ok)[0][0])
    cls = Classification.SEMI_BENT if witness is None else Classification.NOT_SEMI_BENT
    return SpectrumReport(cls, Counter(spec.tolist()), witness)

