"""Seeded random instances and the fixed named examples used by tests and suites."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from ._bits import k_subsets, popcount
from .errors import InvalidFamilyError, InvalidRepresentationError
from .induction import Network, RMinorRep, induce_bipartite
from .intersection import WeightedBipGraph, _Intersection
from .matroid import ExplicitMatroid, Matroid, UniformMatroid, free, partition, sparse_paving_from_circuits, uniform
from .rado import RadoMinorMatroid, RadoRep
from .tropical import ZERO, PuiseuxScalar
from .valfn import ValMat
from .vgm import VGM, GeneralizedMatroid, RnatRep, induce_vgm, rnat_minor_function, weighted_rank


def rand_weight(rng: random.Random, lo: int = -5, hi: int = 5, den: int = 4) -> Fraction:
    return Fraction(rng.randint(lo * den, hi * den), rng.randint(1, den))


def random_sparse_paving(rng: random.Random, n: int, d: int, tries: int = 20) -> Matroid:
    """Greedy random stable set of the Johnson graph as circuit family."""
    pool = list(k_subsets(n, d))
    rng.shuffle(pool)
    chosen: list[int] = []
    for c in pool[:tries]:
        if all(popcount(c & o) <= d - 2 for o in chosen) and len(chosen) + 1 < len(pool):
            chosen.append(c)
    return sparse_paving_from_circuits(n, d, chosen)


def random_transversal(rng: random.Random, n: int, r: int, p: float = 0.5) -> Matroid:
    """Matroid of matchable sets from ``range(n)`` into ``r`` random neighbourhoods, truncated to bases."""
    while True:
        edges = [(j, i, Fraction(0)) for i in range(r) for j in range(n) if rng.random() < p]
        bases = []
        for b in k_subsets(n, r):
            sub = [e for e in edges if b >> e[0] & 1]
            if len(_Intersection(sub, free(n), [Fraction(0)] * len(sub)).run()) == r:
                bases.append(b)
        if bases:
            return ExplicitMatroid(n, bases)


def random_matroid(rng: random.Random, n: int, r: int | None = None) -> Matroid:
    """A random matroid on ``range(n)`` drawn from a mix of constructions."""
    if r is None:
        r = rng.randint(0, n)
    kind = rng.randrange(4)
    if kind == 0 or r in (0, n):
        return uniform(r, n)
    if kind == 1:
        k = rng.randint(1, n)
        blocks: list[list[int]] = [[] for _ in range(k)]
        for e in range(n):
            blocks[rng.randrange(k)].append(e)
        blocks = [b for b in blocks if b]
        caps = [0] * len(blocks)
        for _ in range(r):
            k = rng.choice([k for k, b in enumerate(blocks) if caps[k] < len(b)])
            caps[k] += 1
        return partition(n, blocks, caps)
    if kind == 2 and 2 <= r < n:
        try:
            return random_sparse_paving(rng, n, r)
        except InvalidFamilyError:
            return uniform(r, n)
    return random_transversal(rng, n, r)


def random_graph(
    rng: random.Random, left: int, right: int, p: float = 0.5, w_start: int | None = None, den: int = 4
) -> WeightedBipGraph:
    edges = [(i, j, rand_weight(rng, den=den)) for i in range(left) for j in range(right) if rng.random() < p]
    return WeightedBipGraph(left, right, edges, w_start)


def random_valmat(rng: random.Random, n: int, d: int | None = None) -> ValMat:
    """Nonempty valuated matroid: a random matroid induced through a random weighted graph."""
    dd = rng.randint(0, n) if d is None else d
    for _ in range(200):
        nU = rng.randint(dd, dd + 3)
        m = random_matroid(rng, nU, dd)
        g = random_graph(rng, n, nU, p=rng.choice([0.5, 0.7, 0.9]))
        f = induce_bipartite(g, ValMat.trivial(m))
        if not f.is_neg_inf():
            return f
    return ValMat.trivial(uniform(dd, n))


def random_rminor_rep(rng: random.Random, nV: int, nW: int, nU: int, p: float = 0.6) -> RMinorRep:
    """Random representation with ``r(M) >= |W|``."""
    nW = min(nW, nU)
    m = random_matroid(rng, nU, rng.randint(nW, min(nU, nV + nW)))
    g = random_graph(rng, nV + nW, nU, p, nV)
    return RMinorRep(g, m)


def random_rado_rep(rng: random.Random, nV: int, nW: int, nU: int, p: float = 0.5) -> RadoRep:
    """Random Rado-minor representation in which ``W`` is matchable onto an independent set."""
    nW = min(nW, nU)
    while True:
        m = random_matroid(rng, nU, rng.randint(nW, nU))
        edges = [(i, j) for i in range(nV + nW) for j in range(nU) if rng.random() < p]
        rep = RadoRep.build(nV + nW, nU, edges, m, nV)
        try:
            RadoMinorMatroid(rep)
        except InvalidRepresentationError:
            continue
        return rep


def random_dag(rng: random.Random, nV: int, nI: int, nU: int, p: float = 0.4) -> Network:
    """Layered order ``V < inner < U``; arcs only go forward in a random topological order."""
    nodes = nV + nI + nU
    order = list(range(nV)) + rng.sample(range(nV, nV + nI), nI) + list(range(nV + nI, nodes))
    pos = {v: k for k, v in enumerate(order)}
    arcs = []
    for a in range(nodes):
        for b in range(nodes):
            if pos[a] < pos[b] and not (a < nV and b < nV) and rng.random() < p:
                arcs.append((a, b, rand_weight(rng)))
    return Network(nodes, arcs, range(nV), range(nV + nI, nodes))


def random_rnat_rep(rng: random.Random, nV: int, nW: int | None = None, nU: int | None = None) -> RnatRep:
    """Graph on ``V ∪ W`` into ``U`` carrying the independent sets of a random matroid."""
    nW = rng.randint(0, 2) if nW is None else nW
    nU = rng.randint(1, 4) if nU is None else nU
    base = GeneralizedMatroid.independent_sets(random_matroid(rng, nU))
    return RnatRep(random_graph(rng, nV + nW, nU, 0.6, nV), base)


def random_vgm(rng: random.Random, n: int) -> VGM:
    """Mix of weighted rank functions, induced weighted ranks, R♮-minors and unstructured tables."""
    kind = rng.randrange(4)
    if kind == 0:
        m = random_matroid(rng, n)
        return weighted_rank(m, [Fraction(rng.randint(0, 8), rng.randint(1, 3)) for _ in range(n)])
    if kind == 1:
        nU = rng.randint(1, 4)
        m = random_matroid(rng, nU)
        base = weighted_rank(m, [Fraction(rng.randint(0, 8), rng.randint(1, 3)) for _ in range(nU)])
        return induce_vgm(random_graph(rng, n, nU, 0.6), base)
    if kind == 2:
        return rnat_minor_function(random_rnat_rep(rng, n))
    # arbitrary values, mostly not a vgm
    return VGM(n, {x: rand_weight(rng) for x in range(1 << n) if rng.random() < 0.8})


def random_puiseux(rng: random.Random, max_terms: int = 3) -> PuiseuxScalar:
    """Nonzero scalar with a positive leading coefficient."""
    k = rng.randint(1, max_terms)
    exps = rng.sample(range(-8, 9), k)
    terms = {Fraction(e, 2): Fraction(rng.choice([-1, 1]) * rng.randint(1, 5), rng.randint(1, 3)) for e in exps}
    lead = max(terms)
    terms[lead] = abs(terms[lead])
    return PuiseuxScalar(terms)


def random_puiseux_matrix(rng: random.Random, rows: int, cols: int, zero_rate: float = 0.3) -> list[list[PuiseuxScalar]]:
    return [[ZERO if rng.random() < zero_rate else random_puiseux(rng) for _ in range(cols)] for _ in range(rows)]


# Named examples ------------------------------------------------------------------


def example_graph() -> WeightedBipGraph:
    """Four left elements, two right nodes: 1–u1 (0), 2–u1 (1), 3–u1 (1), 3–u2 (0), 4–u2 (0)."""
    return WeightedBipGraph(4, 2, [(0, 0, 0), (1, 0, 1), (2, 0, 1), (2, 1, 0), (3, 1, 0)])


def example_table() -> ValMat:
    return ValMat.from_entries(4, 2, [({0, 2}, 0), ({0, 3}, 0), ({1, 2}, 1), ({1, 3}, 1), ({2, 3}, 1)])


def snowflake() -> ValMat:
    """Rank 2 on six elements: ``NEG_INF`` on the three pairs, 0 elsewhere."""
    bad = {0b11, 0b1100, 0b110000}
    return ValMat(6, 2, {x: Fraction(0) for x in k_subsets(6, 2) if x not in bad})


def snowflake_rinduced() -> RMinorRep:
    """Pairs share a right node; the right side carries ``U_{2,3}``."""
    edges = [(v, v // 2, 0) for v in range(6)]
    return RMinorRep(WeightedBipGraph(6, 3, edges), UniformMatroid(3, 2))


def snowflake_gammoid() -> RMinorRep:
    """Pairs share a right node, a seventh element (contracted) reaches all three; free rank 3."""
    edges = [(v, v // 2, 0) for v in range(6)] + [(6, j, 0) for j in range(3)]
    return RMinorRep(WeightedBipGraph(7, 3, edges, 6), free(3))


def pair(i: int) -> frozenset[int]:
    """``P_i`` for 1-based ``i``."""
    return frozenset((2 * i - 2, 2 * i - 1))


def pair_union_masks(n: int) -> list[tuple[int, int, int]]:
    return [(i, j, (3 << 2 * (i - 1)) | (3 << 2 * (j - 1))) for i, j in combinations(range(1, n + 1), 2)]


__all__ = [
    "rand_weight",
    "random_sparse_paving",
    "random_transversal",
    "random_matroid",
    "random_graph",
    "random_valmat",
    "random_rminor_rep",
    "random_rado_rep",
    "random_dag",
    "random_rnat_rep",
    "random_vgm",
    "random_puiseux",
    "random_puiseux_matrix",
    "example_graph",
    "example_table",
    "snowflake",
    "snowflake_rinduced",
    "snowflake_gammoid",
    "pair",
    "pair_union_masks",
]
