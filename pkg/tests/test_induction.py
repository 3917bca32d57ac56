from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, strategies as st

from valmat import (
    NEG_INF,
    DomainError,
    Network,
    RMinorRep,
    ValMat,
    WeightedBipGraph,
    check_valuated,
    contract,
    delete,
    direct_sum_v,
    dual_v,
    eval_rminor,
    free,
    induce_bipartite,
    induce_network,
    principal_extension,
    rminor_function,
    trim_representation,
    uniform,
    union_v,
)
from valmat.generators import (
    example_graph,
    example_table,
    random_dag,
    random_graph,
    random_rminor_rep,
    random_valmat,
    snowflake,
    snowflake_gammoid,
    snowflake_rinduced,
)
from valmat.induction import (
    bipartite_as_network,
    brute_induced_table,
    brute_network_induction,
    identity_graph,
    induction_by_extensions,
    network_to_bipartite,
    principal_extension_by_induction,
    rep_contract,
    rep_delete,
    rep_direct_sum,
    rep_dual,
    rep_principal_extension,
    rminor_via_induction,
    union_by_induction,
)

seeds = st.integers(0, 2**32 - 1)


def test_example_graph_induces_example_table():
    f = induce_bipartite(example_graph(), ValMat.trivial(free(2)))
    assert f == example_table()
    assert f == brute_induced_table(example_graph(), ValMat.trivial(free(2)))


def test_identity_gadget():
    f = example_table()
    assert induce_bipartite(identity_graph(4), f) == f


def test_snowflake_reconstructions():
    for rep in (snowflake_rinduced(), snowflake_gammoid()):
        assert rminor_function(rep) == snowflake()
        assert rminor_function(rep, method="brute") == snowflake()
        assert rminor_via_induction(rep) == snowflake()


def test_chain_network():
    net = Network(3, [(0, 1, 1), (1, 2, 2)], V=[0], U=[2])
    f = induce_network(net, ValMat.trivial(free(1)))
    assert f.value({0}) == 3
    g, base, W = network_to_bipartite(net, ValMat.trivial(free(1)))
    assert len(W) == 1
    assert contract(induce_bipartite(g, base), W).value({0}) == 3


def test_bipartite_network_has_no_inner_nodes():
    g = example_graph()
    net = bipartite_as_network(g)
    h, _, W = network_to_bipartite(net, ValMat.trivial(free(2)))
    assert len(W) == 0
    assert induce_network(net, ValMat.trivial(free(2))) == example_table()


def test_network_rejects_overlapping_terminals():
    with pytest.raises(DomainError):
        Network(2, [(0, 1, 0)], V=[0, 1], U=[1])


@given(seeds)
def test_network_reduction_matches_path_systems(seed):
    rng = Random(seed)
    net = random_dag(rng, rng.randint(1, 3), rng.randint(0, 2), rng.randint(1, 3))
    base = random_valmat(rng, len(net.U))
    assert induce_network(net, base) == brute_network_induction(net, base)


def test_rminor_without_W_is_induction():
    g = example_graph()
    rep = RMinorRep(g, free(2))
    assert rminor_function(rep) == induce_bipartite(g, ValMat.trivial(free(2)))
    assert eval_rminor(rep, {1, 2}) == 1


def test_eval_off_layer():
    assert eval_rminor(RMinorRep(example_graph(), free(2)), {0}) is NEG_INF


def test_trim_star():
    edges = [(0, j, Fraction(j, 2)) for j in range(6)] + [(1, 0, 0), (1, 5, 1)]
    rep = RMinorRep(WeightedBipGraph(2, 6, edges), uniform(2, 6))
    t = trim_representation(rep)
    assert sum(1 for e in t.graph.edges if e[0] == 0) <= 2
    assert rminor_function(t) == rminor_function(rep)
    assert trim_representation(t) == t


@given(seeds)
def test_trim_preserves_function(seed):
    rng = Random(seed)
    rep = random_rminor_rep(rng, rng.randint(1, 5), 0, rng.randint(1, 8))
    t = trim_representation(rep)
    d = rep.matroid.rank
    assert all(len(ks) <= d for ks in t.graph.edges_at_left())
    assert len(t.graph.edges) <= rep.nV * d
    assert rminor_function(t) == rminor_function(rep)


@given(seeds)
def test_induction_is_valuated_and_matches_oracle(seed):
    rng = Random(seed)
    left, right = rng.randint(1, 6), rng.randint(1, 5)
    g = random_graph(rng, left, right)
    base = random_valmat(rng, right)
    f = induce_bipartite(g, base)
    assert f == brute_induced_table(g, base)
    assert check_valuated(f)
    assert f == induction_by_extensions(g, base)


@given(seeds)
def test_principal_extension_gadget(seed):
    rng = Random(seed)
    f = random_valmat(rng, rng.randint(1, 6))
    w = [Fraction(rng.randint(-4, 4), 2) for _ in range(f.n)]
    assert principal_extension_by_induction(f, w) == principal_extension(f, w)


@given(seeds)
def test_union_gadget(seed):
    rng = Random(seed)
    n = rng.randint(1, 5)
    f1, f2 = random_valmat(rng, n), random_valmat(rng, n)
    assert union_by_induction(f1, f2) == union_v(f1, f2)


@given(seeds)
def test_rminor_routes_agree(seed):
    rng = Random(seed)
    rep = random_rminor_rep(rng, rng.randint(1, 4), rng.randint(0, 2), rng.randint(1, 5))
    f = rminor_function(rep)
    assert f == rminor_function(rep, method="brute")
    assert f == rminor_via_induction(rep)


@given(seeds)
def test_rminor_operation_representations(seed):
    rng = Random(seed)
    rep = random_rminor_rep(rng, rng.randint(1, 4), rng.randint(0, 2), rng.randint(1, 5))
    f = rminor_function(rep)
    assert rminor_function(rep_dual(rep)) == dual_v(f)
    Y = [i for i in range(rep.nV) if rng.random() < 0.4]
    assert rminor_function(rep_delete(rep, Y)) == delete(f, Y)
    if not f.is_neg_inf():
        b = rng.choice(f.dom_masks())
        I = [i for i in range(rep.nV) if b >> i & 1 and rng.random() < 0.5]
        assert rminor_function(rep_contract(rep, I)) == contract(f, I)
    w = [Fraction(rng.randint(-3, 3)) for _ in range(rep.nV)]
    assert rminor_function(rep_principal_extension(rep, w)) == principal_extension(f, w)
    other = random_rminor_rep(rng, rng.randint(1, 3), 0, rng.randint(1, 3))
    assert rminor_function(rep_direct_sum(rep, other)) == direct_sum_v(f, rminor_function(other))
