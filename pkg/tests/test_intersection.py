from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, strategies as st

from valmat import (
    NEG_INF,
    DualCert,
    InfeasibleError,
    WeightedBipGraph,
    dual_certificate,
    free,
    max_weight_independent_matching,
    uniform,
    verify_certificate,
)
from valmat.generators import example_graph, random_graph, random_matroid
from valmat.intersection import (
    brute_lovasz_extension,
    certificate_objective,
    lovasz_extension,
    matroid_of_max_weight_bases,
    primal_optimum,
    tight_subgraph,
)

seeds = st.integers(0, 2**32 - 1)


def test_example_graph_matchings():
    g, m = example_graph(), free(2)
    assert max_weight_independent_matching(g, m, {1, 2})[0] == 1
    assert max_weight_independent_matching(g, m, {0, 1})[0] is NEG_INF
    assert max_weight_independent_matching(g, m, {0, 1})[1] is None


def test_single_edge():
    g = WeightedBipGraph(1, 1, [(0, 0, 5)])
    value, match = max_weight_independent_matching(g, free(1), {0})
    assert value == 5 and match == ((0, 0, Fraction(5)),)


@given(seeds)
def test_algorithm_equals_brute_force(seed):
    rng = Random(seed)
    left, right = rng.randint(1, 6), rng.randint(1, 6)
    g = random_graph(rng, left, right)
    m = random_matroid(rng, right)
    cover = {i for i in range(left) if rng.random() < 0.5}
    a = max_weight_independent_matching(g, m, cover)
    b = max_weight_independent_matching(g, m, cover, method="brute")
    assert a[0] == b[0]
    if a[1] is not None:
        assert {e[0] for e in a[1]} == cover
        assert m.is_independent_mask(sum(1 << e[1] for e in a[1]))
        assert sum(e[2] for e in a[1]) == a[0]


def test_example_certificate():
    g, m = example_graph(), free(2)
    cert = dual_certificate(g, m)
    assert certificate_objective(m, cert) == 1
    assert primal_optimum(g, m).value == 1
    rep = verify_certificate(g, m, cert)
    assert rep.ok, rep.violations
    tight = {e[:2] for e in tight_subgraph(g, cert).edges}
    # every edge of an optimal matching, e.g. 2-u1 and 3-u2, is tight
    assert {(1, 0), (2, 1)} <= tight


def test_zero_weights_zero_certificate():
    g = WeightedBipGraph(2, 2, [(0, 0, 0), (1, 1, 0), (0, 1, 0)])
    cert = DualCert([0, 0], [0, 0])
    assert verify_certificate(g, free(2), cert).ok
    assert tight_subgraph(g, cert).edges == g.edges


def test_slack_edge_not_tight():
    g = WeightedBipGraph(2, 2, [(0, 0, 0), (1, 1, 0), (0, 1, -1)])
    cert = DualCert([0, 0], [0, 0])
    assert (0, 1) not in {e[:2] for e in tight_subgraph(g, cert).edges}


def test_negative_potential_flagged():
    g = WeightedBipGraph(2, 2, [(0, 0, 0), (1, 1, 0)])
    rep = verify_certificate(g, free(2), DualCert([-1, 1], [1, 0]))
    assert not rep.ok
    assert "pi_nonnegative_on_V" in rep.violations


def test_infeasible_raises():
    g = WeightedBipGraph(2, 1, [(0, 0, 0), (1, 0, 0)], w_start=0)
    with pytest.raises(InfeasibleError):
        dual_certificate(g, free(1))


@given(seeds)
def test_certificates_verify(seed):
    rng = Random(seed)
    right = rng.randint(1, 5)
    left = rng.randint(1, 6)
    nW = rng.randint(0, min(2, left - 1))
    g = random_graph(rng, left, right, p=0.6, w_start=left - nW)
    m = random_matroid(rng, right)
    try:
        cert = dual_certificate(g, m)
    except InfeasibleError:
        assert primal_optimum(g, m).value is NEG_INF
        return
    rep = verify_certificate(g, m, cert)
    assert rep.ok, (rep.violations, rep.notes)


def test_lovasz_examples():
    assert lovasz_extension(uniform(2, 3), (2, 1, 0)) == 3
    assert lovasz_extension(uniform(2, 3), (0, 0, 0)) == 0


@given(seeds)
def test_lovasz_equals_brute(seed):
    rng = Random(seed)
    m = random_matroid(rng, rng.randint(1, 8))
    tau = [Fraction(rng.randint(-6, 6), 3) for _ in range(m.n)]
    assert lovasz_extension(m, tau) == brute_lovasz_extension(m, tau)


def test_max_weight_bases_example():
    mt = matroid_of_max_weight_bases(uniform(2, 3), (1, 0, 0))
    assert set(mt.bases_masks()) == {0b011, 0b101}


@given(seeds)
def test_max_weight_bases_equals_brute(seed):
    rng = Random(seed)
    m = random_matroid(rng, rng.randint(1, 8))
    tau = [Fraction(rng.randint(-2, 2)) for _ in range(m.n)]

    def weight(b):
        return sum(tau[i] for i in range(m.n) if b >> i & 1)

    best = max(weight(b) for b in m.bases_masks())
    brute = {b for b in m.bases_masks() if weight(b) == best}
    assert set(matroid_of_max_weight_bases(m, tau).bases_masks()) == brute
