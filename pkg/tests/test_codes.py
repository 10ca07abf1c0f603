import warnings

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from abcodes.codes import (
    LinearCode,
    WeightDistribution,
    build_code,
    derive_chain,
    dual_code,
    dual_distribution,
    dual_low_weight_counts,
    enumerate_weight_distribution,
    extend_code,
    macwilliams_transform,
    min_distance,
    pless_check,
    u_coefficient,
)
from abcodes.errors import CodeTooLarge, MixedFields, NonIntegralResult, NonzeroAtZero
from abcodes.functions import make_function, power_function
from abcodes.galois import canonical_subgroup, make_field, random_subgroup
from abcodes.linalg import nullspace, rank, rref
from oracle import brute_weight_distribution, naive_weight_distribution


# -- linear algebra ---------------------------------------------------------------

@given(
    p=st.sampled_from([2, 3, 5]),
    rows=st.integers(1, 5),
    cols=st.integers(1, 7),
    data=st.data(),
)
def test_rref_nullspace(p, rows, cols, data):
    vals = data.draw(st.lists(st.integers(0, p - 1), min_size=rows * cols, max_size=rows * cols))
    M = np.array(vals, dtype=np.int64).reshape(rows, cols)
    R, piv = rref(M, p)
    assert R.shape[0] == rank(M, p) == len(piv)
    N = nullspace(M, p, ncols=cols)
    assert N.shape[0] == cols - len(piv)
    assert not ((M @ N.T) % p).any()
    if N.size:
        assert rank(N, p) == N.shape[0]


# -- construction against the slow oracle ------------------------------------------

@pytest.mark.parametrize(
    "fid,p,m,r,params",
    [
        ("ab:gold", 2, 3, 2, {}),
        ("ab:kasami", 2, 5, 3, {"i": 2}),
        ("ab:welch", 2, 5, 1, {}),
        ("planar:do", 3, 3, 3, {}),
        ("planar:dy", 3, 3, 2, {"u": 2}),
        ("planar:cm", 3, 3, 1, {}),
    ],
)
def test_enumeration_matches_oracle(fid, p, m, r, params):
    F = make_field(p, m)
    f = make_function(fid, F, **params)
    A = random_subgroup(F, r, np.random.default_rng(7))
    code = build_code(f, A)
    assert code.k == m + r
    assert enumerate_weight_distribution(code) == brute_weight_distribution(f, A)
    assert enumerate_weight_distribution(code) == naive_weight_distribution(code.basis, p, code.n)


def test_generator_rows_are_codewords():
    F = make_field(2, 3)
    f = make_function("ab:gold", F)
    A = canonical_subgroup(F, 1)
    code = build_code(f, A)
    from abcodes.galois import trace

    a = A.basis[0]
    row = [trace(a * f(x)) for x in F.elements() if x]
    assert np.array_equal(code.generators[0], row)


def test_build_errors():
    F, G = make_field(2, 3), make_field(2, 5)
    with pytest.raises(MixedFields):
        build_code(make_function("ab:gold", F), canonical_subgroup(G, 1))
    from abcodes.functions import Kind, NonlinearFunction

    shifted = NonlinearFunction(Kind.MONOMIAL, F, {"e": 0})  # x^0 = 1, bypasses validation
    with pytest.raises(NonzeroAtZero):
        build_code(shifted, canonical_subgroup(F, 1))


def test_rank_deficient_flag():
    F = make_field(2, 3)
    f = power_function(F, 2)  # additive, so Tr(a x^2) collapses into the Tr(b x) rows
    code = build_code(f, canonical_subgroup(F, 3))
    assert code.k == 3 and "rank_deficient" in code.flags
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        build_code(f, canonical_subgroup(F, 1))  # raw powers log instead of warning


def test_text_roundtrip():
    code = build_code(make_function("planar:do", make_field(3, 3)), canonical_subgroup(make_field(3, 3), 2))
    again = LinearCode.from_text(code.to_text())
    assert again.k == code.k and np.array_equal(again.basis, code.basis)
    assert code.to_text().splitlines()[0] == "3 26 5"


def test_enumeration_cap():
    code = build_code(make_function("ab:gold", make_field(2, 5)), canonical_subgroup(make_field(2, 5), 5))
    with pytest.raises(CodeTooLarge):
        enumerate_weight_distribution(code, cap=2**9)
    F3 = make_field(3, 3)
    big = dual_code(build_code(make_function("planar:do", F3), canonical_subgroup(F3, 1)))
    with pytest.raises(CodeTooLarge):
        enumerate_weight_distribution(big)  # 3^22 > 2^24


def test_threaded_enumeration_matches(monkeypatch):
    F = make_field(3, 5)
    code = build_code(make_function("planar:do", F), canonical_subgroup(F, 3))
    serial = enumerate_weight_distribution(code)
    monkeypatch.setenv("ABCODES_THREADS", "4")
    assert enumerate_weight_distribution(code) == serial


# -- dual / extension -----------------------------------------------------------

def test_dual_and_extension_structure():
    F = make_field(3, 3)
    code = build_code(make_function("planar:cm", F), canonical_subgroup(F, 2))
    d = dual_code(code)
    assert d.k == code.n - code.k
    assert not ((code.basis @ d.basis.T) % 3).any()
    e = extend_code(d)
    assert e.n == code.n + 1 and e.k == d.k
    assert not (e.basis.sum(axis=1) % 3).any()
    assert e.provenance[-2:] == ("dual", "extended")


def test_structural_low_weights_match_macwilliams():
    for p, m, r in [(3, 3, 1), (3, 3, 3), (5, 3, 2), (2, 5, 2)]:
        F = make_field(p, m)
        fid = "ab:gold" if p == 2 else "planar:do"
        code = build_code(make_function(fid, F), canonical_subgroup(F, r))
        dual = dual_distribution(enumerate_weight_distribution(code))
        assert dual_low_weight_counts(code) == (dual[1], dual[2])


def test_chain_params_example():
    F = make_field(2, 5)
    ch = derive_chain(build_code(make_function("ab:gold", F), canonical_subgroup(F, 5)))
    assert ch.params() == {
        "code": (31, 10, 12),
        "dual": (31, 21, 5),
        "ext_dual": (32, 21, 6),
        "ext_dual_dual": (32, 11, 12),
    }


# -- distributions, MacWilliams and Pless ---------------------------------------------

def test_distribution_serialization():
    wd = WeightDistribution(7, {0: 1, 3: 7, 4: 7, 7: 1}, k=4, p=2)
    assert WeightDistribution.from_json(wd.to_json()) == wd
    assert wd.to_csv().splitlines() == ["w,count", "0,1", "3,7", "4,7", "7,1"]
    assert wd.to_dict()["counts"][1] == {"w": 3, "count": "7"}
    big = WeightDistribution(3, {0: 1, 3: 10**40})
    assert '"10000000000000000000000000000000000000000"' in big.to_json()


def test_hamming_simplex_pair():
    hamming = WeightDistribution(7, {0: 1, 3: 7, 4: 7, 7: 1}, k=4, p=2)
    assert dual_distribution(hamming).counts == {0: 1, 4: 7}
    assert min_distance(hamming) == 3


def test_macwilliams_rejects_inconsistent():
    bad = WeightDistribution(7, {0: 1, 3: 8, 4: 6, 7: 1}, k=4, p=2)
    with pytest.raises(NonIntegralResult):
        dual_distribution(bad)


def test_u_coefficient_small():
    # (1 - z)^1 (1 + z)^1 = 1 - z^2
    assert [u_coefficient(1, 2, j, 2) for j in range(3)] == [1, 0, -1]


@st.composite
def random_codes(draw):
    p = draw(st.sampled_from([2, 3, 5]))
    n = draw(st.integers(2, 9))
    k = draw(st.integers(1, min(n, 5 if p == 2 else 3)))
    vals = draw(st.lists(st.integers(0, p - 1), min_size=k * n, max_size=k * n))
    return LinearCode(p, n, np.array(vals, dtype=np.int64).reshape(k, n))


@given(random_codes())
def test_macwilliams_involution(code):
    wd = enumerate_weight_distribution(code)
    dual = dual_distribution(wd)
    assert dual_distribution(dual) == wd
    if dual_code(code).size <= 2**12:
        assert enumerate_weight_distribution(dual_code(code)) == dual


@given(random_codes())
def test_pless_moments_general(code):
    wd = enumerate_weight_distribution(code)
    b1, b2 = dual_low_weight_counts(code)
    assert pless_check(wd, code.n, code.k, code.p, b1, b2)


def test_transform_max_weight():
    wd = WeightDistribution(7, {0: 1, 3: 7, 4: 7, 7: 1}, k=4, p=2)
    en = macwilliams_transform(wd, 7, 4, 2, max_weight=4)
    assert en.coeffs[:5] == (1, 0, 0, 0, 7)
