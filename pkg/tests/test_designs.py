import itertools
from math import comb

import pytest

from abcodes.codes import build_code, derive_chain
from abcodes.designs import (
    BlockSet,
    DesignParams,
    assmus_mattson_applicable,
    assmus_mattson_s,
    design_params_ab,
    divisibility_holds,
    example_lambdas_ab,
    extract_blocks,
    verify_design,
)
from abcodes.errors import InvalidParameters, NotADesign, TooLarge, WeightNotRealized
from abcodes.functions import make_function
from abcodes.galois import canonical_subgroup, make_field


def chain(p, m, r, fid=None):
    F = make_field(p, m)
    f = make_function(fid or ("ab:gold" if p == 2 else "planar:do"), F)
    return derive_chain(build_code(f, canonical_subgroup(F, r)))


@pytest.fixture(scope="module")
def ch55():
    return chain(2, 5, 5)


def test_params_examples():
    assert str(design_params_ab(5, 5, 12)) == "3-(32, 12, 22)"
    assert design_params_ab(5, 1, 16) == DesignParams(1, 32, 16, 47)
    with pytest.raises(WeightNotRealized):
        design_params_ab(3, 3, 8)
    with pytest.raises(WeightNotRealized):
        design_params_ab(5, 5, 14)


def test_example_lambdas_agree():
    for m in (3, 5, 7):
        for r in range(1, m + 1):
            ex = example_lambdas_ab(m, r)
            for k, lam in ex.items():
                if k < 3 and r == m:
                    with pytest.raises(InvalidParameters):
                        design_params_ab(m, r, k)
                    continue
                dp = design_params_ab(m, r, k)
                assert dp.lam == lam
                assert divisibility_holds(dp)


def test_three_designs(ch55):
    for k, lam in ((12, 22), (16, 119), (20, 114)):
        blocks = extract_blocks(ch55.ext_dual_dual, k)
        assert len(blocks) == ch55.wd_ext_dual_dual[k]
        assert verify_design(blocks, 3) == lam
        # strength is downward closed
        for t in (2, 1):
            lam_t = verify_design(blocks, t)
            assert lam_t * comb(32, t) == len(blocks) * comb(k, t)


def test_not_a_4_design(ch55):
    blocks = extract_blocks(ch55.ext_dual_dual, 12)
    with pytest.raises(NotADesign) as exc:
        verify_design(blocks, 4)
    a, b = exc.value.witness
    assert len(a) == len(b) == 4


@pytest.mark.parametrize("r", [1, 2, 3])
def test_one_designs(r):
    ch = chain(2, 5, r)
    blocks = extract_blocks(ch.ext_dual_dual, 16)
    assert verify_design(blocks, 1) == 2 ** (5 + r - 1) + 2**4 - 1


def test_ternary_blocks_are_deduplicated():
    ch = chain(3, 3, 3)
    blocks = extract_blocks(ch.ext_dual_dual, 15)
    assert len(blocks) == 702 // 2


def test_extract_examples():
    ch = chain(2, 3, 3)
    assert len(extract_blocks(ch.ext_dual_dual, 4)) == 70
    with pytest.raises(ValueError):
        extract_blocks(ch.ext_dual_dual, 0)


def test_trivial_designs():
    n, k = 7, 3
    complete = BlockSet(n, k, tuple(itertools.combinations(range(n), k)))
    for t in range(k + 1):
        assert verify_design(complete, t) == comb(n - t, k - t)
    with pytest.raises(NotADesign):
        verify_design(BlockSet(3, 2, ((0, 1), (0, 2))), 2)
    with pytest.raises(TooLarge):
        verify_design(complete, 2, cap=10)


def test_blockset_json():
    b = BlockSet(4, 2, ((0, 1), (2, 3)))
    assert BlockSet.from_json(b.to_json()) == b
    assert b.to_json() == '{"blocks": [[0, 1], [2, 3]], "k": 2, "n": 4}'


def test_assmus_mattson(ch55):
    C, Cperp = ch55.wd_ext_dual, ch55.wd_ext_dual_dual
    assert assmus_mattson_s(Cperp, 3) == 3
    assert assmus_mattson_applicable(C, Cperp, 3)
    assert not assmus_mattson_applicable(C, Cperp, 4)
    assert not assmus_mattson_applicable(C, Cperp, 6)  # t >= d
    low = chain(2, 5, 2)
    assert assmus_mattson_applicable(low.wd_ext_dual, low.wd_ext_dual_dual, 1)
