from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, strategies as st

from valmat import (
    NEG_INF,
    DomainError,
    ValMat,
    check_valuated,
    contract,
    delete,
    direct_sum_v,
    dual_v,
    principal_extension,
    truncate,
    uniform,
    union_v,
)
from valmat.generators import example_table, random_valmat, snowflake
from valmat.valfn import free_valmat

seeds = st.integers(0, 2**32 - 1)
F = Fraction


def test_example_table_is_valuated():
    assert check_valuated(example_table())
    assert check_valuated(snowflake())


def test_disconnected_domain_fails():
    f = ValMat.from_entries(4, 2, [({0, 1}, 0), ({2, 3}, 0)])
    chk = check_valuated(f)
    assert not chk
    assert chk.witness is not None


def test_value_lookup():
    f = example_table()
    assert f.value({0, 1}) is NEG_INF
    assert f.value({1, 2}) == 1
    assert f.value(0b0101) == 0


def test_rejects_wrong_cardinality():
    with pytest.raises(DomainError):
        ValMat.from_entries(3, 2, [({0}, 0)])


def test_delete_examples():
    f = example_table()
    g = delete(f, {0})
    assert (g.n, g.d) == (3, 2)
    assert dict(g.items()) == {frozenset({0, 1}): 1, frozenset({0, 2}): 1, frozenset({1, 2}): 1}
    assert delete(f, ()) == f
    assert delete(snowflake(), {0, 1, 2, 3}).is_neg_inf()


def test_contract_examples():
    f = example_table()
    g = contract(f, {2})
    assert (g.n, g.d) == (3, 1)
    assert [g.value({i}) for i in range(3)] == [0, 1, 1]
    assert contract(f, ()) == f


def test_dual_examples():
    f = example_table()
    fs = dual_v(f)
    assert fs.value({2, 3}) is NEG_INF
    assert fs.value({0, 1}) == 1


@given(seeds)
def test_dual_involution(seed):
    rng = Random(seed)
    f = random_valmat(rng, rng.randint(1, 8))
    assert dual_v(dual_v(f)) == f


def test_truncate_examples():
    t = truncate(example_table())
    assert t.d == 1
    assert t.value({2}) == 1
    assert t.value({0}) == 0
    t0 = truncate(free_valmat(4))
    assert dict(t0.table) == {m: 0 for m in range(16) if bin(m).count("1") == 3}


def test_principal_extension_examples():
    f = example_table()
    p = f.n
    loop = principal_extension(f, [NEG_INF] * 4)
    assert all(p not in x for x in loop.dom())
    zero = principal_extension(f, [0] * 4)
    assert zero.value({0, p}) == 0
    assert zero.value({1, p}) == 1


def test_direct_sum_examples():
    s = direct_sum_v(free_valmat(1), free_valmat(1))
    assert dict(s.items()) == {frozenset({0, 1}): 0}
    t = direct_sum_v(example_table(), free_valmat(1))
    assert t.value({1, 2, 4}) == 1


def test_union_of_trivial_u13():
    u = ValMat.trivial(uniform(1, 3))
    assert union_v(u, u) == ValMat.trivial(uniform(2, 3))


def test_free_valmat():
    assert dict(free_valmat(2).items()) == {frozenset({0, 1}): 0}
    assert free_valmat(0).value(()) == 0


@given(seeds)
def test_zero_extension_then_contract_is_identity(seed):
    rng = Random(seed)
    f = random_valmat(rng, rng.randint(1, 6))
    k = rng.randint(0, 2)
    assert contract(direct_sum_v(f, free_valmat(k)), range(f.n, f.n + k)) == f


@given(seeds)
def test_contract_is_dual_delete_dual(seed):
    rng = Random(seed)
    f = random_valmat(rng, rng.randint(1, 8))
    if f.is_neg_inf():
        return
    base = rng.choice(f.dom_masks())
    Y = [i for i in range(f.n) if base >> i & 1 and rng.random() < 0.5]
    assert contract(f, Y) == dual_v(delete(dual_v(f), Y))


@given(seeds)
def test_truncation_is_zero_extension_contracted(seed):
    rng = Random(seed)
    f = random_valmat(rng, rng.randint(1, 7))
    if f.d == 0:
        return
    assert contract(principal_extension(f, [0] * f.n), {f.n}) == truncate(f)


@given(seeds)
def test_principal_extensions_commute(seed):
    rng = Random(seed)
    f = random_valmat(rng, rng.randint(1, 6))
    w1 = [F(rng.randint(-4, 4), 2) for _ in range(f.n)]
    w2 = [F(rng.randint(-4, 4), 3) for _ in range(f.n)]
    a = principal_extension(principal_extension(f, w1), w2 + [NEG_INF])
    b = principal_extension(principal_extension(f, w2), w1 + [NEG_INF])
    swap = list(range(f.n)) + [f.n + 1, f.n]
    assert a == b.relabel(swap, f.n + 2)


@given(seeds)
def test_operations_stay_valuated(seed):
    rng = Random(seed)
    f = random_valmat(rng, rng.randint(1, 7))
    g = random_valmat(rng, f.n)
    Y = {i for i in range(f.n) if rng.random() < 0.3}
    assert check_valuated(f)
    assert check_valuated(dual_v(f))
    assert check_valuated(delete(f, Y))
    assert check_valuated(principal_extension(f, [F(rng.randint(-3, 3)) for _ in range(f.n)]))
    assert check_valuated(union_v(f, g))
    if f.d:
        assert check_valuated(truncate(f))
