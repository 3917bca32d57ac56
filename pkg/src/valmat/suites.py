"""Named acceptance suites: seeded sweeps that compare every construction with an independent route.

Each suite returns a :class:`SuiteResult` whose per-label tallies are
deterministic for a given seed, so the JSON summary is byte-stable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ._bits import bits, full, k_subsets, popcount
from .errors import InfeasibleError
from .extrat import NEG_INF, format_ext
from .family import B0_matroid, B1_matroid, FamilyParams, make_Fn, make_h_natural
from .generators import (
    example_graph,
    rand_weight,
    random_dag,
    random_graph,
    random_matroid,
    random_puiseux,
    random_puiseux_matrix,
    random_rado_rep,
    random_rminor_rep,
    random_rnat_rep,
    random_valmat,
    random_vgm,
    snowflake,
    snowflake_gammoid,
    snowflake_rinduced,
)
from .induction import (
    RMinorRep,
    brute_induced_table,
    brute_network_induction,
    induce_bipartite,
    induce_network,
    induction_by_extensions,
    principal_extension_by_induction,
    rep_contract,
    rep_delete,
    rep_direct_sum,
    rep_dual,
    rep_principal_extension,
    rminor_function,
    rminor_via_induction,
    trim_representation,
    union_by_induction,
)
from .intersection import (
    WeightedBipGraph,
    dual_certificate,
    level_sets,
    matroid_of_max_weight_bases,
    max_weight_independent_matching,
    primal_optimum,
    verify_certificate,
)
from .matroid import (
    ExplicitMatroid,
    Matroid,
    brute_union_rank,
    check_basis_exchange,
    direct_sum,
    dual,
    free,
    minor,
    to_explicit,
    truncation,
    union,
)
from .rado import (
    RadoMinorMatroid,
    RadoRep,
    check_pair_tight_sets,
    check_rho_values,
    check_robust_witness,
    check_uncrossing,
    full_rank_union_bases,
    is_robust,
    rado_independent,
    reducibility_search,
)
from .tropical import (
    check_commutation,
    deg,
    delete_var,
    differentiate,
    generating_function,
    matrix_action,
    matrix_action_by_formula,
    matroid_points,
    poly_from_valmat,
    trop_as_valmat,
)
from .valfn import (
    ValMat,
    check_valuated,
    contract,
    delete,
    direct_sum_v,
    dual_v,
    principal_extension,
    truncate,
    union_v,
)
from .vgm import (
    VGM,
    check_vgm,
    contract_vgm,
    endow,
    endow_rep,
    induce_vgm,
    induce_vgm_by_layers,
    merge,
    merge_rep,
    recover,
    rnat_minor_function,
    vgm_to_valmat,
    weighted_rank,
    weighted_rank_by_induction,
)


@dataclass
class SuiteResult:
    name: str
    criterion: int
    tallies: dict[str, list[int]] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    def check(self, label: str, ok: bool, detail: object = None) -> bool:
        t = self.tallies.setdefault(label, [0, 0])
        t[1] += 1
        if ok:
            t[0] += 1
        elif len(self.failures) < 20:
            self.failures.append(f"{label}: {detail}" if detail is not None else label)
        return bool(ok)

    def count(self, label: str) -> int:
        return self.tallies.get(label, [0, 0])[1]

    @property
    def ok(self) -> bool:
        return bool(self.tallies) and all(p == t for p, t in self.tallies.values())

    def summary(self) -> dict:
        return {
            "suite": self.name,
            "criterion": self.criterion,
            "ok": self.ok,
            "checks": {k: {"passed": p, "total": t} for k, (p, t) in sorted(self.tallies.items())},
            "failures": list(self.failures),
        }


def _nonempty(f: ValMat) -> bool:
    return not f.is_neg_inf()


# 1 ---------------------------------------------------------------------------------


def suite_example(seed: int = 0) -> SuiteResult:
    res = SuiteResult("example", 1)
    g = example_graph()
    expected = {
        frozenset({0, 1}): NEG_INF,
        frozenset({0, 2}): Fraction(0),
        frozenset({0, 3}): Fraction(0),
        frozenset({1, 2}): Fraction(1),
        frozenset({1, 3}): Fraction(1),
        frozenset({2, 3}): Fraction(1),
    }
    routes = {
        "induce_bipartite": induce_bipartite(g, ValMat.trivial(free(2))),
        "matching_algorithm": rminor_function(RMinorRep(g, free(2))),
        "matching_brute": rminor_function(RMinorRep(g, free(2)), "brute"),
        "permutation_oracle": brute_induced_table(g, ValMat.trivial(free(2))),
    }
    for label, f in routes.items():
        got = {frozenset(bits(x)): f.value_mask(x) for x in k_subsets(4, 2)}
        res.check(label, got == expected, {tuple(sorted(k)): format_ext(v) for k, v in got.items()})
    res.check("valuated", bool(check_valuated(routes["induce_bipartite"])))
    return res


# 2 ---------------------------------------------------------------------------------


def suite_family(seed: int = 0, draws: int = 50, hnat_draws: int = 4) -> SuiteResult:
    res = SuiteResult("family", 2)
    rng = random.Random(seed)
    for n in range(2, 7):
        for k in range(draws):
            # alternate finite-negative and partly -inf draws
            p = FamilyParams.random(n, rng, neg_inf_rate=0.0 if k % 2 == 0 else 0.3)
            f = make_Fn(p)
            c = check_valuated(f)
            res.check(f"Fn_valuated_n{n}", bool(c), c.witness)
        if n >= 3:
            res.check(f"dom_is_B1_n{n}", make_Fn(FamilyParams.constant(n, NEG_INF)).dom_matroid().same_as(B1_matroid(n)))
    for n in range(2, 6):
        for _ in range(hnat_draws):
            p = FamilyParams.random(n, rng, lower=Fraction(-999, 1000))
            c = check_vgm(make_h_natural(p))
            res.check(f"hnat_vgm_n{n}", bool(c), c.witness)
    return res


# 3 ---------------------------------------------------------------------------------


def suite_solver(seed: int = 0, trials: int = 500) -> SuiteResult:
    res = SuiteResult("solver", 3)
    rng = random.Random(seed)
    for t in range(trials):
        nV = rng.randint(1, 6)
        nW = rng.randint(0, 6 - nV)
        nU = rng.randint(1, 6)
        m = random_matroid(rng, nU)
        g = random_graph(rng, nV + nW, nU, rng.choice([0.3, 0.5, 0.8]), nV)
        x = sum(1 << i for i in range(nV) if rng.random() < 0.5)
        cover = bits(x | g.W_mask)
        a, match = max_weight_independent_matching(g, m, cover)
        b, _ = max_weight_independent_matching(g, m, cover, "brute")
        res.check("algorithm_equals_brute", a == b, (t, format_ext(a), format_ext(b)))
        if match is not None:
            left = sorted(e[0] for e in match)
            right = sum(1 << e[1] for e in match)
            ok = left == sorted(cover) and popcount(right) == len(match) and m.is_independent_mask(right)
            res.check("matching_valid", ok and sum(e[2] for e in match) == a, t)
    return res


# 4 ---------------------------------------------------------------------------------


def _positive_rank_blocks(m: Matroid, tau) -> list[tuple[int, int]]:
    out, prev = [], 0
    for _, s in level_sets(tau):
        if m.rank_mask(s) > m.rank_mask(prev):
            out.append((prev, s))
        prev = s
    return out


def _reducible_by_certificate(g: WeightedBipGraph, m: Matroid, cert, primal) -> tuple[bool, str]:
    """Split the tight Rado representation at the top level set and check the full-rank union."""
    nV, nU = g.w_start, g.right
    S = _positive_rank_blocks(m, cert.tau)[0][1]
    comp = full(nU) & ~S
    tight = [(i, j) for i, j, c in g.edges if cert.pi[i] + cert.tau[j] == c]
    mt = to_explicit(matroid_of_max_weight_bases(m, cert.tau))
    parts = []
    for side in (S, comp):
        ms = ExplicitMatroid(nU, {b & side for b in mt.bases_masks()})
        rep = RadoRep.build(nV, nU, [(i, j) for i, j in tight if side >> j & 1], ms)
        parts.append(to_explicit(RadoMinorMatroid(rep)))
    n1, n2 = parts
    B = set(primal.maximizers)
    if n1.rank and n2.rank and n1.rank + n2.rank == primal.layer:
        U = full_rank_union_bases(n1, n2)
        forced = sum(1 << i for i in range(nV) if cert.pi[i] > 0)
        if {x for x in U if x & forced == forced} != B:
            return False, "split disagrees with the maximizers"
        if U == B:
            return True, "tight split"
    # forced elements cut the union down; fall back to the bounded search on B itself
    found = reducibility_search(ExplicitMatroid(nV, B)).decomposition
    return found is not None, "search" if found else "no decomposition found"


def suite_duality(seed: int = 0, instances: int = 250, reducible_instances: int = 300) -> SuiteResult:
    res = SuiteResult("duality", 4)
    rng = random.Random(seed)
    done = 0
    while done < instances:
        nV = rng.randint(1, 5)
        nW = rng.randint(0, min(2, 6 - nV))
        nU = rng.randint(1, 6)
        m = random_matroid(rng, nU)
        g = random_graph(rng, nV + nW, nU, rng.choice([0.4, 0.6, 0.8]), nV)
        try:
            cert = dual_certificate(g, m)
        except InfeasibleError:
            res.check("infeasible_agrees_with_primal", primal_optimum(g, m).value is NEG_INF)
            continue
        done += 1
        rep = verify_certificate(g, m, cert)
        for clause, ok in rep.clauses.items():
            res.check(clause, ok, (done, rep.notes.get(clause)))
    # non-constant τ at W = ∅ forces a fully reducible maximizer matroid
    seen = 0
    while seen < reducible_instances:
        nV, nU = rng.randint(2, 6), rng.randint(2, 6)
        m = random_matroid(rng, nU)
        g = random_graph(rng, nV, nU, rng.choice([0.5, 0.7, 0.9]))
        try:
            cert = dual_certificate(g, m)
        except InfeasibleError:
            continue
        seen += 1
        primal = primal_optimum(g, m)
        if len(_positive_rank_blocks(m, cert.tau)) < 2 or primal.layer == 0:
            continue
        ok, how = _reducible_by_certificate(g, m, cert, primal)
        res.check("nonconstant_tau_fully_reducible", ok, how)
    return res


# 5 ---------------------------------------------------------------------------------


def _swap_last_two(f: ValMat) -> ValMat:
    n = f.n
    return f.relabel(list(range(n - 2)) + [n - 1, n - 2], n)


def suite_identities(seed: int = 0, instances: int = 100) -> SuiteResult:
    res = SuiteResult("identities", 5)
    rng = random.Random(seed)
    for t in range(instances):
        f = random_valmat(rng, rng.randint(1, 7))
        n = f.n
        # Y independent in dom(f): a random part of a random domain member
        base = rng.choice(sorted(f.table))
        Y = [v for v in bits(base) if rng.random() < 0.5]
        res.check("contract_via_dual_delete", contract(f, Y) == dual_v(delete(dual_v(f), Y)), t)
        ft = random_valmat(rng, n, rng.randint(1, n))
        res.check("truncation_via_zero_extension", truncate(ft) == contract(principal_extension(ft, [0] * n), [n]), t)
        w1 = [rand_weight(rng) if rng.random() < 0.8 else NEG_INF for _ in range(n)]
        w2 = [rand_weight(rng) if rng.random() < 0.8 else NEG_INF for _ in range(n)]
        a = principal_extension(principal_extension(f, w1), w2 + [NEG_INF])
        b = principal_extension(principal_extension(f, w2), w1 + [NEG_INF])
        res.check("principal_extensions_commute", a == _swap_last_two(b), t)
        res.check("principal_extension_by_gadget", principal_extension(f, w1) == principal_extension_by_induction(f, w1), t)
        g = random_graph(rng, rng.randint(1, 5), n, rng.choice([0.4, 0.7]))
        res.check("induction_by_extensions", induce_bipartite(g, f) == induction_by_extensions(g, f), t)
        f2 = random_valmat(rng, n)
        res.check("union_by_induction", union_v(f, f2) == union_by_induction(f, f2), t)
        net = random_dag(rng, rng.randint(1, 3), rng.randint(0, 3), n)
        res.check("network_reduction_equals_path_systems", induce_network(net, f) == brute_network_induction(net, f), t)
    for t in range(instances):
        n = rng.randint(1, 7)
        m1, m2 = random_matroid(rng, n), random_matroid(rng, n)
        u = union(m1, m2)
        ok = all(u.rank_mask(x) == brute_union_rank(m1, m2, x) for x in range(1 << n))
        res.check("union_rank_formula", ok, t)
    for t in range(instances):
        rep = random_rado_rep(rng, rng.randint(1, 5), rng.randint(0, 2), rng.randint(1, 5))
        ok = all(rado_independent(rep, x) == rado_independent(rep, x, "matching") for x in range(1 << rep.nV))
        res.check("rado_rank_condition_equals_matching", ok, t)
    return res


# 6 ---------------------------------------------------------------------------------


def _valuated(res: SuiteResult, label: str, f: ValMat) -> None:
    if _nonempty(f):
        c = check_valuated(f)
        res.check(label, bool(c), c.witness)


def suite_closure(seed: int = 0, instances: int = 60) -> SuiteResult:
    res = SuiteResult("closure", 6)
    rng = random.Random(seed)
    for _ in range(instances):
        f = random_valmat(rng, rng.randint(1, 6))
        n = f.n
        Y = [v for v in range(n) if rng.random() < 0.3]
        _valuated(res, "delete", delete(f, Y))
        _valuated(res, "contract", contract(f, Y))
        _valuated(res, "dual", dual_v(f))
        if f.d >= 1:
            _valuated(res, "truncate", truncate(f))
        w = [rand_weight(rng) if rng.random() < 0.8 else NEG_INF for _ in range(n)]
        _valuated(res, "principal_extension", principal_extension(f, w))
        f2 = random_valmat(rng, rng.randint(1, 4))
        _valuated(res, "direct_sum", direct_sum_v(f, f2))
        _valuated(res, "union", union_v(f, random_valmat(rng, n)))
        g = random_graph(rng, rng.randint(1, 6), n, 0.6)
        _valuated(res, "induce_bipartite", induce_bipartite(g, f))
        net = random_dag(rng, rng.randint(1, 4), rng.randint(0, 3), n)
        _valuated(res, "induce_network", induce_network(net, f))
    for _ in range(instances):
        rep = random_rminor_rep(rng, rng.randint(1, 4), rng.randint(0, 2), rng.randint(1, 5))
        _valuated(res, "rminor", rminor_function(rep))
        _valuated(res, "rminor_dual", rminor_function(rep_dual(rep)))
        Y = [v for v in range(rep.nV) if rng.random() < 0.4]
        _valuated(res, "rminor_delete", rminor_function(rep_delete(rep, Y)))
        if len(Y) <= rep.d:
            _valuated(res, "rminor_contract", rminor_function(rep_contract(rep, Y)))
        w = [rand_weight(rng) for _ in range(rep.nV)]
        _valuated(res, "rminor_principal_extension", rminor_function(rep_principal_extension(rep, w)))
        rep2 = random_rminor_rep(rng, rng.randint(1, 3), 0, rng.randint(1, 3))
        _valuated(res, "rminor_direct_sum", rminor_function(rep_direct_sum(rep, rep2)))
    for _ in range(instances):
        n = rng.randint(1, 5)
        m1, m2 = random_matroid(rng, n), random_matroid(rng, n)
        for label, m in (
            ("matroid_dual", dual(m1)),
            ("matroid_union", union(m1, m2)),
            ("matroid_direct_sum", direct_sum(m1, m2)),
            ("matroid_truncation", truncation(m1, max(m1.rank - 1, 0))),
            ("matroid_minor", minor(m1, delete=[0])),
        ):
            c = check_basis_exchange(to_explicit(m))
            res.check(label, bool(c), c.witness)
        wv = [Fraction(rng.randint(0, 6), rng.randint(1, 3)) for _ in range(n)]
        f, g = weighted_rank(m1, wv), random_vgm(rng, n)
        for label, h in (("weighted_rank", f), ("merge", merge(f, weighted_rank(m2, wv)))):
            c = check_vgm(h)
            res.check(label, bool(c), c.witness)
        if check_vgm(g):
            T = [v for v in range(n) if rng.random() < 0.4]
            if g.value(T) is not NEG_INF:
                c = check_vgm(endow(g, T))
                res.check("endow", bool(c), c.witness)
            h = contract_vgm(g, T)
            if h.table:
                c = check_vgm(h)
                res.check("contract_vgm", bool(c), c.witness)
            gg = random_graph(rng, rng.randint(1, 4), n, 0.6)
            h = induce_vgm(gg, g)
            if h.table:
                c = check_vgm(h)
                res.check("induce_vgm", bool(c), c.witness)
    return res


# 7 ---------------------------------------------------------------------------------


def suite_snowflake(seed: int = 0) -> SuiteResult:
    res = SuiteResult("snowflake", 7)
    target = snowflake()
    res.check("target_valuated", bool(check_valuated(target)))
    for label, rep in (("rinduced_U23", snowflake_rinduced()), ("gammoid_contracted", snowflake_gammoid())):
        res.check(f"{label}_algorithm", rminor_function(rep) == target)
        res.check(f"{label}_brute", rminor_function(rep, "brute") == target)
        res.check(f"{label}_induce_then_contract", rminor_via_induction(rep) == target)
    return res


# 8 ---------------------------------------------------------------------------------


def suite_trimming(seed: int = 0, instances: int = 100) -> SuiteResult:
    res = SuiteResult("trimming", 8)
    rng = random.Random(seed)
    for t in range(instances):
        rep = random_rminor_rep(rng, rng.randint(1, 5), 0, rng.randint(1, 6), rng.choice([0.5, 0.8, 1.0]))
        tr = trim_representation(rep)
        d = rep.d
        deg_ = [0] * tr.graph.left
        for i, _, _ in tr.graph.edges:
            deg_[i] += 1
        res.check("left_degree_at_most_d", max(deg_, default=0) <= d, (t, deg_, d))
        res.check("edge_count_at_most_Vd", len(tr.graph.edges) <= rep.nV * d, t)
        res.check("function_unchanged", rminor_function(tr) == rminor_function(rep), t)
    return res


# 9 ---------------------------------------------------------------------------------


def _robust_reps(m: Matroid) -> list[RadoRep]:
    """Identity representation, plus one with a contracted node matched to a free coloop."""
    n = m.n
    ident = RadoRep.build(n, n, [(i, i) for i in range(n)], m)
    plus = ExplicitMatroid(n + 1, [b | 1 << n for b in to_explicit(m).bases_masks()])
    extra = RadoRep.build(n + 1, n + 1, [(i, i) for i in range(n)] + [(n, j) for j in range(n + 1)], plus, n)
    return [ident, extra]


def suite_rado(seed: int = 0, instances: int = 50, sizes=(8, 9, 10), reducible_n: int = 10) -> SuiteResult:
    res = SuiteResult("rado", 9)
    rng = random.Random(seed)
    for t in range(instances):
        rep = random_rado_rep(rng, rng.randint(1, 5), rng.randint(0, 2), rng.randint(1, 5))
        for clause, ok in check_rho_values(rep).clauses.items():
            res.check(clause, ok, t)
        for clause, ok in check_uncrossing(rep).clauses.items():
            res.check(clause, ok, t)
    for n in sizes:
        odds = [i for i in range(1, n + 1) if i % 2]
        evens = [i for i in range(1, n + 1) if i % 2 == 0]
        for label, m, S, K in (
            ("B0", B0_matroid(n), odds, evens),
            ("B1", B1_matroid(n), odds + [2], [k for k in evens if k != 2]),
        ):
            r = is_robust(m)
            res.check(f"robust_{label}_n{n}", r.ok, r.reason)
            res.check(f"robust_{label}_witness_n{n}", check_robust_witness(m, S, K), (S, K))
            if n == sizes[0]:
                for rep in _robust_reps(m):
                    for clause, ok in check_pair_tight_sets(rep, n).clauses.items():
                        res.check(f"Zsets_{label}_{clause}", ok)
    search = reducibility_search(B0_matroid(reducible_n), [(2 * i, 2 * i + 1) for i in range(reducible_n)])
    res.check("B0_not_fully_reducible", search.decomposition is None, search.searched)
    res.check("B0_case_shapes_excluded", search.searched.get((1, 3)) == "excluded" and search.searched.get((2, 2)) == "excluded", search.searched)
    return res


# 10 --------------------------------------------------------------------------------


def suite_tropical(seed: int = 0, pairs: int = 1000, cor: int = 100, thm: int = 50) -> SuiteResult:
    res = SuiteResult("tropical", 10)
    rng = random.Random(seed)
    for _ in range(pairs):
        a, b = random_puiseux(rng), random_puiseux(rng)
        res.check("deg_multiplicative", deg(a * b) == deg(a) + deg(b), (str(a), str(b)))
        res.check("deg_additive_max", deg(a + b) == max(deg(a), deg(b)), (str(a), str(b)))
        res.check("product_positive", (a * b).is_positive() and (a + b).is_positive())
    for t in range(cor):
        f = random_valmat(rng, rng.randint(1, 5))
        p = poly_from_valmat(f)
        res.check("trop_roundtrip", trop_as_valmat(p) == f, t)
        for i in range(f.n):
            res.check("deletion_commutes", trop_as_valmat(delete_var(p, i)) == delete(f, [i]), (t, i))
            res.check("contraction_commutes", trop_as_valmat(differentiate(p, i)) == contract(f, [i]), (t, i))
    for t in range(cor):
        n = rng.randint(1, 5)
        q = generating_function(random_matroid(rng, n, rng.randint(0, min(3, n))))
        A = random_puiseux_matrix(rng, n, rng.randint(1, 5))
        c = check_commutation(A, q)
        res.check("multi_affine_commutation", bool(c), (t, c.witness))
        res.check("action_formula_equals_expansion", matrix_action(A, q) == matrix_action_by_formula(A, q), t)
    for t in range(thm):
        n, d = rng.randint(1, 4), rng.randint(1, 3)
        m1 = random_matroid(rng, n, rng.randint(0, min(d, n)))
        m2 = random_matroid(rng, n)
        pts = {tuple(a + b for a, b in zip(x, y)) for x in matroid_points(m1) for y in matroid_points(m2)}
        q = generating_function(pts)
        A = random_puiseux_matrix(rng, n, rng.randint(1, 4))
        c = check_commutation(A, q, full=True)
        res.check("full_commutation_vs_subgraphs", bool(c), (t, c.witness))
    return res


# 11 --------------------------------------------------------------------------------


def suite_rnat(seed: int = 0, instances: int = 50) -> SuiteResult:
    res = SuiteResult("rnat", 11)
    rng = random.Random(seed)
    endowed = 0
    attempts = 0
    while endowed < instances and attempts < 20 * instances:
        attempts += 1
        nV = rng.randint(1, 4)
        rep = random_rnat_rep(rng, nV)
        f = rnat_minor_function(rep)
        T = [v for v in range(nV) if rng.random() < 0.5]
        if f.value(T) is NEG_INF or (not T and not len(rep.graph.W) and f.value(()) != 0):
            continue
        endowed += 1
        res.check("endow_representation", endow(f, T) == rnat_minor_function(endow_rep(rep, T)), attempts)
    for t in range(instances):
        nV = rng.randint(1, 4)
        r1, r2 = random_rnat_rep(rng, nV), random_rnat_rep(rng, nV)
        lhs = merge(rnat_minor_function(r1), rnat_minor_function(r2))
        res.check("merge_representation", lhs == rnat_minor_function(merge_rep(r1, r2)), t)
    return res


# 12 --------------------------------------------------------------------------------


def _paddings(n: int, x: int):
    k = n - popcount(x)
    return [y << n for y in k_subsets(n, k)]


def suite_lift(seed: int = 0, instances: int = 120) -> SuiteResult:
    res = SuiteResult("lift", 12)
    rng = random.Random(seed)
    for t in range(instances):
        n = rng.randint(0, 5)
        f = random_vgm(rng, n) if n else VGM(0, {0: rand_weight(rng)})
        g = vgm_to_valmat(f)
        ok = all(recover(g, x, y) == f.value_mask(x) for x in range(1 << n) for y in _paddings(n, x))
        res.check("recovery_all_paddings", ok, t)
        if check_vgm(f):
            c = check_valuated(g)
            res.check("lift_valuated_when_vgm", bool(c), (t, c.witness))
    # the converse direction on the two routes of weighted rank
    for t in range(instances // 4):
        n = rng.randint(1, 5)
        m = random_matroid(rng, n)
        w = [Fraction(rng.randint(0, 6), rng.randint(1, 3)) for _ in range(n)]
        f = weighted_rank(m, w)
        res.check("weighted_rank_two_routes", f == weighted_rank_by_induction(m, w), t)
        gg = random_graph(rng, rng.randint(1, 4), n, 0.6)
        res.check("induce_vgm_two_routes", induce_vgm(gg, f) == induce_vgm_by_layers(gg, f), t)
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "example": suite_example,
    "family": suite_family,
    "solver": suite_solver,
    "duality": suite_duality,
    "identities": suite_identities,
    "closure": suite_closure,
    "snowflake": suite_snowflake,
    "trimming": suite_trimming,
    "rado": suite_rado,
    "tropical": suite_tropical,
    "rnat": suite_rnat,
    "lift": suite_lift,
}


def run_suite(name: str, seed: int = 0) -> SuiteResult:
    return SUITES[name](seed)


__all__ = ["SuiteResult", "SUITES", "run_suite"] + [f"suite_{k}" for k in SUITES]
