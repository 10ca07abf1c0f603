"""Closed forms evaluated at frozen points and checked against enumeration."""

import pytest

from abcodes.codes import (
    build_code,
    derive_chain,
    dual_distribution,
    dual_low_weights_ab,
    dual_low_weights_f1,
    dual_low_weights_p3,
    enumerate_weight_distribution,
    planar_dual_a2,
    pless_solve,
    pless_wd_planar,
    theoretical_wd_ab,
    theoretical_wd_ext_ab,
    theoretical_wd_ext_p3,
    theoretical_wd_planar_f1,
    theoretical_wd_planar_p3,
)
from abcodes.errors import EvenCharacteristic, EvenM, RankOutOfRange
from abcodes.functions import make_function
from abcodes.galois import canonical_subgroup, make_field


def test_ab_frozen():
    assert theoretical_wd_ab(5, 5).counts == {0: 1, 12: 310, 16: 527, 20: 186}
    assert theoretical_wd_ab(3, 0).counts == {0: 1, 4: 7}
    assert theoretical_wd_ab(5, 1).counts == {0: 1, 12: 10, 16: 47, 20: 6}
    assert theoretical_wd_ab(3, 3).counts == {0: 1, 2: 21, 4: 35, 6: 7}


def test_planar_frozen():
    want = {0: 1, 15: 312, 18: 260, 21: 156}
    assert theoretical_wd_planar_f1(3, 3, 3).counts == want
    assert theoretical_wd_planar_p3(3, 3).counts == want
    assert theoretical_wd_planar_f1(3, 3, 0).counts == {0: 1, 18: 26}
    assert theoretical_wd_planar_p3(3, 0).counts == {0: 1, 18: 26}
    assert theoretical_wd_planar_p3(5, 5).total == 3**10
    assert theoretical_wd_planar_f1(5, 3, 3).weights == [95, 100, 105]


@pytest.mark.parametrize("m", [3, 5])
def test_planar_tables_agree_at_p3(m):
    for r in range(m + 1):
        assert theoretical_wd_planar_f1(3, m, r) == theoretical_wd_planar_p3(m, r)


def test_ext_frozen():
    assert theoretical_wd_ext_ab(5, 5).counts == {0: 1, 12: 496, 16: 1054, 20: 496, 32: 1}
    assert theoretical_wd_ext_ab(3, 1).counts == {0: 1, 2: 4, 4: 22, 6: 4, 8: 1}
    assert theoretical_wd_ext_ab(5, 1).total == 2**7
    assert theoretical_wd_ext_p3(3, 3).counts == {0: 1, 15: 702, 18: 780, 21: 702, 27: 2}
    assert theoretical_wd_ext_p3(3, 1).counts == {0: 1, 15: 54, 18: 132, 21: 54, 27: 2}


def test_low_weights_frozen():
    assert dual_low_weights_ab(5, 5) == (0, 0)
    assert dual_low_weights_ab(3, 3) == (0, 0)
    a3, a4 = dual_low_weights_ab(5, 2)
    assert a3 == 4480 and a3 // 2**7 == 35 and a4 // 2**7 == 245
    assert dual_low_weights_p3(3, 3, "code")[1] // 3**6 == 260
    assert dual_low_weights_f1(3, 3, 3)[1] // 3**6 == 260
    assert dual_low_weights_p3(3, 2, "extended") == (18 * 3**6, 324 * 3**6, 3564 * 3**6)


def test_domain_errors():
    with pytest.raises(EvenM):
        theoretical_wd_ab(4, 1)
    with pytest.raises(RankOutOfRange):
        theoretical_wd_ab(5, 6)
    with pytest.raises(RankOutOfRange):
        theoretical_wd_ext_ab(5, 0)
    with pytest.raises(EvenCharacteristic):
        theoretical_wd_planar_f1(2, 3, 1)


@pytest.mark.parametrize("p,m", [(3, 3), (5, 3), (3, 5)])
def test_planar_full_rank_matches_enumeration(p, m):
    F = make_field(p, m)
    code = build_code(make_function("planar:do", F), canonical_subgroup(F, m))
    assert enumerate_weight_distribution(code) == theoretical_wd_planar_f1(p, m, m)


@pytest.mark.parametrize("p,m", [(3, 3), (5, 3), (3, 5)])
def test_moment_solution_matches_enumeration(p, m):
    """Enumeration equals the power-moment solution once the dual's A_2 is
    taken into account."""
    F = make_field(p, m)
    f = make_function("planar:do", F)
    for r in range(m + 1):
        code = build_code(f, canonical_subgroup(F, r))
        wd = enumerate_weight_distribution(code)
        assert wd == pless_wd_planar(p, m, r)
        assert dual_distribution(wd)[2] == planar_dual_a2(p, m, r)


def test_pless_solve_recovers_ab():
    from abcodes.codes import ab_weights

    for r in range(6):
        if r == 0:
            continue
        assert pless_solve(ab_weights(5), 31, 5 + r, 2) == theoretical_wd_ab(5, r)


def test_ext_p3_matches_chain():
    F = make_field(3, 3)
    for r in (1, 2, 3):
        ch = derive_chain(build_code(make_function("planar:dy", F, u=1), canonical_subgroup(F, r)))
        assert ch.wd_ext_dual_dual == theoretical_wd_ext_p3(3, r)
