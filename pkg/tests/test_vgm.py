from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, strategies as st

from valmat import (
    NEG_INF,
    VGM,
    DomainError,
    FamilyParams,
    InvalidFamilyError,
    check_valuated,
    check_vgm,
    endow,
    make_Fn,
    make_h_natural,
    merge,
    uniform,
    union,
    vgm_to_valmat,
)
from valmat._bits import popcount, submasks
from valmat.generators import random_matroid, random_rnat_rep, random_vgm
from valmat.vgm import (
    GeneralizedMatroid,
    contract_vgm,
    endow_rep,
    induce_vgm,
    induce_vgm_by_layers,
    layer,
    merge_rep,
    rank_function,
    recover,
    rnat_minor_function,
    weighted_rank,
    weighted_rank_by_induction,
)

seeds = st.integers(0, 2**32 - 1)
F = Fraction


def h_nat(n):
    return make_h_natural(FamilyParams.constant(n, F(-3, 4), F(-1, 2)))


def brute_merge(f, g, x):
    vals = [f.value_mask(y) + g.value_mask(x ^ y) for y in submasks(x)]
    finite = [v for v in vals if v is not NEG_INF]
    return max(finite) if finite else NEG_INF


def test_checker_examples():
    assert check_vgm(h_nat(4))
    assert check_vgm(rank_function(uniform(2, 4)))
    chk = check_vgm(VGM.from_function(3, lambda x: F(popcount(x) ** 2)))
    assert not chk
    assert chk.witness[0] == "1a"


def test_layers():
    h = h_nat(3)
    assert layer(h, 4) == make_Fn(FamilyParams.constant(3, F(-3, 4), F(-1, 2))).shift(4)
    assert set(layer(rank_function(uniform(2, 4)), 3).table.values()) == {2}
    single = VGM.from_entries(2, [({0}, 1), ({1}, 3)])
    assert VGM.from_layers(2, [layer(single, 1)]) == single


def test_merge_examples():
    unit = VGM(3, {0: F(0)})
    f = rank_function(uniform(2, 3))
    assert merge(f, unit) == f
    h = h_nat(3)
    full = 0b111111
    # two copies can split V into a 4-set and a 2-set or two 3-sets, never exceeding |V|
    assert merge(h, h).value_mask(full) == 6 == brute_merge(h, h, full)


@given(seeds)
def test_merge_of_ranks_is_union_rank(seed):
    rng = Random(seed)
    n = rng.randint(1, 6)
    m1, m2 = random_matroid(rng, n), random_matroid(rng, n)
    assert merge(rank_function(m1), rank_function(m2)) == rank_function(union(m1, m2))


def test_endow_examples():
    f = VGM.from_entries(2, [((), 3), ({0}, 4), ({0, 1}, 5)])
    assert endow(f, ()) == f.shift(-3)
    assert endow(h_nat(3), {0}).value(()) == 0
    with pytest.raises(DomainError):
        endow(VGM.from_entries(2, [((), 0)]), {0})


@given(seeds)
def test_endow_is_normalised_contraction(seed):
    rng = Random(seed)
    f = random_vgm(rng, rng.randint(1, 5))
    if not f.dom_masks():
        return
    T = rng.choice(f.dom_masks())
    assert endow(f, T) == contract_vgm(f, T).shift(-f.value_mask(T))


def test_weighted_rank_examples():
    r = weighted_rank(uniform(1, 2), (3, 5))
    assert r.value({0, 1}) == 5
    assert r.value(()) == 0
    m = uniform(2, 4)
    assert weighted_rank(m, [1] * 4) == rank_function(m)


@given(seeds)
def test_weighted_rank_two_routes(seed):
    rng = Random(seed)
    m = random_matroid(rng, rng.randint(1, 5))
    w = [F(rng.randint(0, 6), 2) for _ in range(m.n)]
    r = weighted_rank(m, w)
    assert r == weighted_rank_by_induction(m, w)
    assert check_vgm(r)


def test_lift_single_element():
    g = vgm_to_valmat(VGM.from_entries(1, [((), 0), ({0}, 2)]))
    assert (g.n, g.d) == (2, 1)
    assert g.value({0}) == 2 and g.value({1}) == 0


@given(seeds)
def test_lift_recovers_and_is_valuated(seed):
    rng = Random(seed)
    f = random_vgm(rng, rng.randint(0, 5))
    g = vgm_to_valmat(f)
    n = f.n
    for x in range(1 << n):
        assert recover(g, x) == f.value_mask(x)
    if check_vgm(f):
        assert check_valuated(g)


def test_generalized_matroid_rejects_bad_family():
    with pytest.raises(InvalidFamilyError):
        GeneralizedMatroid(2, [(), {0, 1}])


def test_rnat_without_W_matches_induce_vgm():
    rng = Random(5)
    rep = random_rnat_rep(rng, 3, 0, 3)
    assert rnat_minor_function(rep) == induce_vgm(rep.graph, rep.base.as_vgm())


@given(seeds)
def test_induce_vgm_two_routes(seed):
    rng = Random(seed)
    rep = random_rnat_rep(rng, rng.randint(1, 4), 0)
    base = rep.base.as_vgm()
    f = induce_vgm(rep.graph, base)
    assert f == induce_vgm_by_layers(rep.graph, base)
    assert check_vgm(f)


@given(seeds)
def test_rnat_endow_and_merge_representations(seed):
    rng = Random(seed)
    r1 = random_rnat_rep(rng, rng.randint(1, 3))
    f1 = rnat_minor_function(r1)
    if f1.dom_masks():
        T = rng.choice(f1.dom_masks())
        assert rnat_minor_function(endow_rep(r1, [i for i in range(r1.nV) if T >> i & 1])) == endow(f1, T)
    r2 = random_rnat_rep(rng, r1.nV)
    assert rnat_minor_function(merge_rep(r1, r2)) == merge(f1, rnat_minor_function(r2))
