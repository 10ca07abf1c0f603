"""Machine-readable verification suite behind ``abcodes verify-all``.

Each check compares an exact computed value with its closed-form or claimed
counterpart and records the outcome; failures are report entries, never
exceptions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from math import gcd
from typing import Any

from .codes import (
    CodeChain,
    LinearCode,
    WeightDistribution,
    build_code,
    derive_chain,
    dual_low_weights_ab,
    dual_low_weights_p3,
    enumerate_weight_distribution,
    theoretical_wd_ab,
    theoretical_wd_ext_ab,
    theoretical_wd_ext_p3,
    theoretical_wd_planar_f1,
    theoretical_wd_planar_p3,
)
from .designs import design_params_ab, extract_blocks, verify_design
from .functions import Kind, NonlinearFunction, make_function
from .galois import canonical_subgroup, make_field
from .sharing import access_structure, is_minimal_bruteforce, minimality_ratio

__all__ = [
    "Check",
    "Report",
    "DEFAULT_RANGES",
    "parse_ranges",
    "catalog_functions",
    "closed_form",
    "chain_claims",
    "load_fixtures",
    "run_suite",
]

DEFAULT_RANGES: tuple[tuple[int, int], ...] = ((2, 3), (2, 5), (3, 3), (3, 5), (5, 3))


@dataclass
class Check:
    id: str
    anchor: str
    expected: Any
    computed: Any
    passed: bool
    label: str | None = None

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "anchor": self.anchor,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "pass": self.passed,
        }
        if self.label:
            out["label"] = self.label
        return out


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def add(self, *args, **kw) -> Check:
        c = Check(*args, **kw)
        self.checks.append(c)
        return c

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        out = {
            "total": len(self.checks),
            "passed": len(self.checks) - len(self.failures),
            "failed": len(self.failures),
            "checks": [c.to_dict() for c in self.checks],
        }
        out.update(self.extra)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def _jsonable(v):
    if isinstance(v, WeightDistribution):
        return {str(w): str(c) for w, c in v.counts.items()}
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, int) and not isinstance(v, bool) and abs(v) >= 2**53:
        return str(v)
    return v


def parse_ranges(text: str) -> tuple[tuple[int, int], ...]:
    """``"2:3,5;3:3"`` -> ((2, 3), (2, 5), (3, 3)); empty string -> ()."""
    out = []
    for part in filter(None, (s.strip() for s in text.split(";"))):
        p, _, ms = part.partition(":")
        out += [(int(p), int(m)) for m in ms.split(",") if m.strip()]
    return tuple(out)


# -- catalog and claims -------------------------------------------------------

def catalog_functions(p: int, m: int) -> list[NonlinearFunction]:
    """Every catalog entry valid at (p, m) with the parameter sweeps used by
    the suite: all coprime i for Gold/Kasami, t in {0, 1}, odd k, and three
    nonzero u for the ternary trinomial."""
    F = make_field(p, m)
    fs: list[NonlinearFunction] = []
    if p == 2:
        if m % 2 == 0 or m < 3:
            return fs
        for i in range(1, m):
            if gcd(i, m) == 1:
                fs.append(make_function(Kind.AB_GOLD, F, i=i))
                fs.append(make_function(Kind.AB_KASAMI, F, i=i))
        fs.append(make_function(Kind.AB_WELCH, F))
        fs.append(make_function(Kind.AB_NIHO1 if m % 4 == 1 else Kind.AB_NIHO2, F))
        if m > 3:
            fs.append(make_function(Kind.AB_TRACE_VARIANT, F, i=1))
        return fs
    if m % 2 == 0:
        return fs
    for t in (0, 1):
        fs.append(make_function(Kind.P_DEMBOWSKI_OSTROM, F, t=t))
    if p == 3:
        for k in range(1, m, 2):
            if gcd(m, k) == 1:
                fs.append(make_function(Kind.P_COULTER_MATTHEWS, F, k=k))
        for u in (1, 2, F.order - 1):
            fs.append(make_function(Kind.P_DING_YUAN, F, u=u))
    return fs


def closed_form(f: NonlinearFunction, r: int) -> tuple[str, WeightDistribution] | None:
    """(anchor, distribution) predicted for C_(f,A) with |A| = p^r."""
    p, m = f.field.p, f.field.m
    if f.kind.is_ab:
        return "ab.code.weights", theoretical_wd_ab(m, r)
    if f.kind is Kind.P_DEMBOWSKI_OSTROM:
        return "planar.power.weights", theoretical_wd_planar_f1(p, m, r)
    if f.kind.is_planar and p == 3:
        return "planar.ternary.weights", theoretical_wd_planar_p3(m, r)
    return None


def chain_claims(f: NonlinearFunction, r: int) -> dict[str, tuple[str, str, int]]:
    """Claimed minimum distances per chain member: member -> (anchor, op, value)."""
    p, m = f.field.p, f.field.m
    out: dict[str, tuple[str, str, int]] = {}
    if f.kind.is_ab:
        out["dual"] = ("ab.dual.distance", "==", 5 if r == m else 3)
        out["ext_dual"] = ("ab.ext.distance", "==", 6 if r == m else 4)
        if r >= 1:
            out["ext_dual_dual"] = ("ab.extdual.params", "==", ab_min_weight(m))
    elif f.kind.is_planar:
        if p == 3 and (r == m or f.kind is not Kind.P_DEMBOWSKI_OSTROM):
            out["dual"] = ("planar.dual.distance", "==", 4 if r == m else 3)
        else:
            out["dual"] = ("planar.dual.distance", ">=", 3)
        if p == 3:
            out["ext_dual"] = ("ternary.ext.distance", "==", 5 if r == m else 3)
            if r >= 1:
                out["ext_dual_dual"] = ("ternary.extdual.params", "==", 2 * 3 ** (m - 1) - 3 ** ((m - 1) // 2))
    return out


def ab_min_weight(m: int) -> int:
    return 2 ** (m - 1) - 2 ** ((m - 1) // 2)


def _meets(op: str, got, want: int) -> bool:
    if got is None:
        return False
    return got == want if op == "==" else got >= want


@lru_cache(maxsize=None)
def load_fixtures() -> tuple[dict, ...]:
    text = resources.files("abcodes").joinpath("data/optimal_codes.json").read_text()
    return tuple(json.loads(text)["entries"])


def fixture_rank(e: dict) -> int:
    """Subgroup rank r that yields the fixture's (member, k)."""
    m, n, k = e["m"], e["n"], e["k"]
    return {
        "code": k - m,
        "dual": n - k - m,
        "ext_dual": n - 1 - k - m,
        "ext_dual_dual": k - m - 1,
    }[e["member"]]


def reference_function(p: int, m: int) -> NonlinearFunction:
    F = make_field(p, m)
    if p == 2:
        return make_function(Kind.AB_GOLD, F, i=1)
    return make_function(Kind.P_DEMBOWSKI_OSTROM, F, t=0)


@lru_cache(maxsize=64)
def _chain(p: int, m: int, r: int) -> CodeChain:
    f = reference_function(p, m)
    return derive_chain(build_code(f, canonical_subgroup(f.field, r)))


def member_params(ch: CodeChain, member: str) -> tuple[int, int, int | None]:
    return ch.params()[member]


# -- the suite ------------------------------------------------------------------

def _table_checks(report: Report, p: int, m: int, corrupt: str | None = None) -> None:
    for f in catalog_functions(p, m):
        for r in range(m + 1):
            cf = closed_form(f, r)
            if cf is None:
                continue
            anchor, want = cf
            cid = f"table/{f!r}/r={r}"
            if cid == corrupt:
                w = want.weights[0]
                want = want.with_count(w, want[w] + 1)
            got = enumerate_weight_distribution(build_code(f, canonical_subgroup(f.field, r)))
            report.add(cid, anchor, want, got, got == want)


def _chain_checks(report: Report, p: int, m: int) -> None:
    f = reference_function(p, m)
    for r in range(m + 1):
        ch = _chain(p, m, r)
        params = ch.params()
        for member, (anchor, op, val) in chain_claims(f, r).items():
            d = params[member][2]
            report.add(f"chain/{p}^{m}/r={r}/{member}/d", anchor, f"{op} {val}", d, _meets(op, d, val))
        if r >= 1 and p == 2:
            want = theoretical_wd_ext_ab(m, r)
            report.add(f"chain/{p}^{m}/r={r}/ext_dual_dual/wd", "ab.extdual.weights", want,
                       ch.wd_ext_dual_dual, ch.wd_ext_dual_dual == want)
            a3, a4 = dual_low_weights_ab(m, r)
            got = (ch.wd_dual[3] * 2 ** (m + r), ch.wd_dual[4] * 2 ** (m + r))
            report.add(f"chain/{p}^{m}/r={r}/dual/A3A4", "ab.dual.low", (a3, a4), got, got == (a3, a4))
        if r >= 1 and p == 3:
            want = theoretical_wd_ext_p3(m, r)
            report.add(f"chain/{p}^{m}/r={r}/ext_dual_dual/wd", "ternary.extdual.weights", want,
                       ch.wd_ext_dual_dual, ch.wd_ext_dual_dual == want)
            exp = dual_low_weights_p3(m, r, variant="extended")
            scale = 3 ** (m + r + 1)
            got = tuple(ch.wd_ext_dual[i] * scale for i in (3, 4, 5))
            report.add(f"chain/{p}^{m}/r={r}/ext_dual/A3A4A5", "ternary.ext.low", exp, got, got == exp)


def _fixture_checks(report: Report, ranges) -> None:
    wanted = set(ranges)
    for e in load_fixtures():
        if (e["p"], e["m"]) not in wanted:
            continue
        r = fixture_rank(e)
        got = member_params(_chain(e["p"], e["m"], r), e["member"])
        want = (e["n"], e["k"], e["d"])
        cid = f"fixture/{e['p']}^{e['m']}/{e['member']}/[{e['n']},{e['k']},{e['d']}]"
        report.add(cid, "optimal.fixture", list(want), list(got), tuple(got) == want, label=e["label"])


def _design_checks(report: Report) -> None:
    for r in (5, 1, 2):
        ch = _chain(2, 5, r)
        t = 3 if r == 5 else 1
        for k in ch.wd_ext_dual_dual.weights:
            if k == 32:
                continue
            lam = verify_design(extract_blocks(ch.ext_dual_dual, k), t)
            dp = design_params_ab(5, r, k)
            report.add(f"design/2^5/r={r}/k={k}", "ab.design", str(dp), f"{t}-(32, {k}, {lam})",
                       (dp.t, dp.lam) == (t, lam))


def _sharing_checks(report: Report, p: int, m: int) -> None:
    code = _chain(p, m, m).code
    wd = enumerate_weight_distribution(code)
    ratio = minimality_ratio(wd, p)
    brute = is_minimal_bruteforce(code)[0] if code.size <= 2**14 else None
    report.add(f"sharing/{p}^{m}/minimal", "minimality.ratio", ratio, brute, brute in (None, ratio))
    if ratio:
        s = access_structure(_chain(p, m, m).dual, True)
        want = p ** (s.n - s.k - 1)
        report.add(f"sharing/{p}^{m}/access_sets", "sharing.count", want, s.minimal_access_sets,
                   s.minimal_access_sets == want)


def run_suite(ranges=DEFAULT_RANGES, self_test: bool = False) -> Report:
    """Run every check for the (p, m) pairs in ``ranges``.

    With ``self_test`` only the closed-form distribution checks that pass
    unperturbed are run, after one multiplicity of the first of them has
    been corrupted; the report must then contain exactly one failure.
    """
    ranges = tuple(ranges)
    report = Report()
    if self_test:
        probe = Report()
        for p, m in ranges:
            _table_checks(probe, p, m)
        keep = [c for c in probe.checks if c.passed]
        if not keep:
            report.extra["self_test"] = {"injected": None, "detected": False}
            return report
        target = keep[0].id
        full = Report()
        for p, m in ranges:
            _table_checks(full, p, m, corrupt=target)
        ids = {c.id for c in keep}
        report.checks = [c for c in full.checks if c.id in ids]
        fails = [c.id for c in report.failures]
        report.extra["self_test"] = {"injected": target, "detected": fails == [target]}
        return report
    for p, m in ranges:
        _table_checks(report, p, m)
        _chain_checks(report, p, m)
        if (p, m) in ((2, 3), (2, 5), (3, 3)):
            _sharing_checks(report, p, m)
    if (2, 5) in ranges:
        _design_checks(report)
    _fixture_checks(report, ranges)
    return report
