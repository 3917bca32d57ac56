from itertools import combinations
from random import Random

import pytest
from hypothesis import given, strategies as st

from valmat import (
    CapacityError,
    InvalidFamilyError,
    check_basis_exchange,
    direct_sum,
    dual,
    explicit,
    free,
    minor,
    partition,
    sparse_paving_from_circuits,
    truncation,
    uniform,
    union,
)
from valmat._bits import popcount
from valmat.family import B1_matroid
from valmat.generators import random_matroid
from valmat.matroid import brute_union_rank, closure, rank, to_explicit

seeds = st.integers(0, 2**32 - 1)


def bases_of(m):
    return {frozenset(b) for b in m.bases()}


def test_uniform_rank():
    assert rank(uniform(2, 3), {0, 1, 2}) == 2
    assert rank(uniform(2, 3), {1}) == 1
    assert rank(uniform(2, 3), ()) == 0


def test_partition_closure():
    m = partition(3, [{0, 1}, {2}], [1, 1])
    assert closure(m, {0}) == {0, 1}
    # brute force: x is in the closure iff adding it keeps the rank
    brute = {x for x in range(3) if rank(m, {0, x}) == rank(m, {0})}
    assert brute == {0, 1}


def test_dual_of_free_is_rank_zero():
    d = dual(free(4))
    assert d.rank == 0
    assert bases_of(d) == {frozenset()}


def test_dual_of_uniform():
    assert bases_of(dual(uniform(2, 3))) == bases_of(uniform(1, 3))


@given(seeds)
def test_double_dual(seed):
    m = random_matroid(Random(seed), Random(seed).randint(1, 8))
    assert bases_of(dual(dual(m))) == bases_of(m)


def test_direct_sum_examples():
    s = direct_sum(uniform(1, 2), uniform(1, 2))
    assert s.n == 4 and s.rank == 2
    assert bases_of(s) == {frozenset(x) for x in ({0, 2}, {0, 3}, {1, 2}, {1, 3})}
    assert bases_of(direct_sum(free(2), free(3))) == bases_of(free(5))
    m = uniform(2, 3)
    loops = direct_sum(m, dual(free(2)))
    assert bases_of(loops) == bases_of(m)
    assert loops.n == 5


def test_union_examples():
    assert bases_of(union(uniform(1, 3), uniform(1, 3))) == bases_of(uniform(2, 3))
    m = uniform(2, 4)
    assert bases_of(union(m, dual(free(4)))) == bases_of(m)


@given(seeds)
def test_union_rank_matches_partition_oracle(seed):
    rng = Random(seed)
    n = rng.randint(1, 7)
    m1, m2 = random_matroid(rng, n), random_matroid(rng, n)
    u = union(m1, m2)
    for s in (u.full_mask, rng.randrange(1 << n)):
        assert u.rank_mask(s) == brute_union_rank(m1, m2, s)


def test_minors_of_u24():
    assert bases_of(minor(uniform(2, 4), contract={0})) == bases_of(uniform(1, 3))
    assert bases_of(minor(uniform(2, 4), delete={0})) == bases_of(uniform(2, 3))


@given(seeds)
def test_contract_independent_rank_identity(seed):
    rng = Random(seed)
    n = rng.randint(2, 8)
    m = random_matroid(rng, n)
    b = rng.choice(m.bases_masks())
    idx = [i for i in range(n) if b >> i & 1]
    I = set(rng.sample(idx, rng.randint(0, len(idx))))
    imask = sum(1 << i for i in I)
    c = minor(m, contract=I)
    rest = [i for i in range(n) if i not in I]
    for k in range(1 << len(rest)):
        s = sum(1 << rest[t] for t in range(len(rest)) if k >> t & 1)
        assert c.rank_mask(k) == m.rank_mask(s | imask) - len(I)


def test_sparse_paving_examples():
    m = sparse_paving_from_circuits(6, 4, [{0, 1, 2, 3}, {2, 3, 4, 5}])
    assert len(m.bases()) == 13
    assert bases_of(sparse_paving_from_circuits(5, 2, [])) == bases_of(uniform(2, 5))


def test_sparse_paving_rejects_close_circuits():
    with pytest.raises(InvalidFamilyError):
        sparse_paving_from_circuits(5, 3, [{0, 1, 2}, {0, 1, 3}])


def test_truncation():
    t = truncation(free(4), 2)
    assert bases_of(t) == bases_of(uniform(2, 4))
    assert truncation(uniform(2, 4), 3).rank == 2


def test_basis_exchange_examples():
    assert check_basis_exchange(uniform(2, 3))
    chk = check_basis_exchange((4, [{0, 1}, {2, 3}]))
    assert not chk
    assert chk.witness == (frozenset({0, 1}), frozenset({2, 3}), 0)
    assert check_basis_exchange(B1_matroid(3))


def test_explicit_rejects_unequal_bases():
    with pytest.raises(InvalidFamilyError):
        explicit(3, [{0}, {1, 2}])


def test_capacity_env(monkeypatch):
    monkeypatch.setenv("VALMAT_CAPACITY", "basis_exchange=3")
    with pytest.raises(CapacityError):
        check_basis_exchange(uniform(2, 4))


@given(seeds)
def test_rank_axioms(seed):
    rng = Random(seed)
    n = rng.randint(1, 7)
    m = random_matroid(rng, n)
    r = m.rank_mask
    assert r(0) == 0
    for a in range(1 << n):
        assert r(a) <= popcount(a)
        for i in range(n):
            assert r(a) <= r(a | 1 << i) <= r(a) + 1
    for a, b in combinations(range(1 << n), 2):
        assert r(a) + r(b) >= r(a | b) + r(a & b)


@given(seeds)
def test_random_matroids_satisfy_exchange(seed):
    rng = Random(seed)
    m = random_matroid(rng, rng.randint(1, 8))
    assert check_basis_exchange(to_explicit(m))
    assert check_basis_exchange(dual(m))
