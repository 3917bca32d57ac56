from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, strategies as st

from valmat import (
    NEG_INF,
    FamilyParams,
    InvalidFamilyError,
    ParameterError,
    check_basis_exchange,
    check_valuated,
    check_vgm,
    make_Fn,
    make_h_natural,
)
from valmat._bits import k_subsets
from valmat.family import (
    X_STAR,
    B0_matroid,
    B1_matroid,
    H_family,
    check_H_sparse,
    classify_exchange,
    pair_mask,
)

F = Fraction


def test_pairs_and_H():
    assert pair_mask(1) == 0b11 and pair_mask(3) == 0b110000
    assert H_family(3) == [X_STAR, pair_mask(2) | pair_mask(3)]
    for n in range(2, 8):
        assert pair_mask(1) | pair_mask(3) not in H_family(n)
        assert check_H_sparse(n)


def test_Fn_at_three_pairs():
    p23 = pair_mask(2) | pair_mask(3)
    f = make_Fn(FamilyParams(3, {p23: -1}, F(-1, 2)))
    assert f.value_mask(X_STAR) == F(-1, 2)
    assert f.value_mask(p23) == -1
    others = [x for x in k_subsets(6, 4) if x not in (X_STAR, p23)]
    assert len(others) == 13
    assert all(f.value_mask(x) == 0 for x in others)
    assert check_valuated(f)


def test_odd_pair_union_is_zero():
    for n in range(3, 6):
        f = make_Fn(FamilyParams.constant(n))
        assert f.value_mask(pair_mask(1) | pair_mask(3)) == 0


def test_params_validation():
    with pytest.raises(ParameterError):
        FamilyParams.constant(3, value=0)
    with pytest.raises(ParameterError):
        FamilyParams.constant(3, value=F(-1, 4), star_value=F(-1, 2))
    with pytest.raises(ParameterError):
        FamilyParams(3, {}, F(-1, 2))
    with pytest.raises(ParameterError):
        FamilyParams.constant(1)


def test_B0_B1_counts():
    assert len(B0_matroid(3).bases()) == 13
    assert len(B1_matroid(3).bases()) == 14
    assert B1_matroid(3, star_included=False).same_as(B0_matroid(3))
    with pytest.raises(InvalidFamilyError):
        B0_matroid(2).bases()


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_B0_B1_exchange(n):
    assert check_basis_exchange(B0_matroid(n))
    assert check_basis_exchange(B1_matroid(n))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_domain_with_neg_inf_values(n):
    f = make_Fn(FamilyParams.constant(n, NEG_INF))
    assert set(f.dom_masks()) == set(B1_matroid(n).bases_masks())


@given(st.integers(0, 2**32 - 1), st.integers(2, 5), st.sampled_from([0.0, 0.3]))
def test_Fn_is_valuated(seed, n, rate):
    f = make_Fn(FamilyParams.random(n, Random(seed), neg_inf_rate=rate))
    chk = check_valuated(f)
    assert chk, chk.witness


def test_exchange_case_labels():
    H = H_family(4)
    outside = next(x for x in k_subsets(8, 4) if x not in H)
    assert classify_exchange(4, outside, outside) == "B0-B0"
    assert classify_exchange(4, H[0], outside) == "B0-H"
    assert classify_exchange(4, H[0], H[1]) == "H-H"


def test_h_natural_values():
    star = F(-1, 2)
    h = make_h_natural(FamilyParams.constant(3, F(-3, 4), star))
    assert h.value(()) == 0 and h.value({0}) == 1
    assert h.value({0, 1, 2}) == 3
    assert h.value_mask(X_STAR) == 4 + star
    assert h.value_mask(pair_mask(2) | pair_mask(3)) == 4 + F(-3, 4)
    assert all(h.value_mask(x) == 4 for x in k_subsets(6, 5))
    assert h.value_mask(0b111111) == 4


def test_h_natural_needs_values_above_minus_one():
    with pytest.raises(ParameterError):
        make_h_natural(FamilyParams.constant(3, -2))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_h_natural_is_vgm(n):
    rng = Random(n)
    p = FamilyParams.random(n, rng, lower=F(-999, 1000))
    assert check_vgm(make_h_natural(p))

