"""Rado and Rado-minor representations of matroids.

A representation ``(G, M, W)`` has left nodes ``V ∪ W`` (``W`` starts at
``graph.w_start``), right nodes carrying the matroid ``M`` and ignores edge
weights.  ``ρ(Z) = r(Γ(Z)) - |Z|`` drives every structural check here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from ._bits import bits, full, k_subsets, popcount, require_capacity, submasks, to_mask, to_set
from .errors import DomainError, InvalidRepresentationError
from .intersection import WeightedBipGraph, _Intersection
from .matroid import ExplicitMatroid, Matroid
from .report import Report


@dataclass(frozen=True)
class RadoRep:
    graph: WeightedBipGraph
    matroid: Matroid

    def __post_init__(self):
        if self.matroid.n != self.graph.right:
            raise DomainError("matroid ground set must be the right node set")

    @classmethod
    def build(cls, left: int, right: int, edges: Iterable[tuple[int, int]], m: Matroid, w_start: int | None = None):
        return cls(WeightedBipGraph(left, right, [(i, j, 0) for i, j in edges], w_start), m)

    @property
    def nV(self) -> int:
        return self.graph.w_start

    @property
    def W_mask(self) -> int:
        return self.graph.W_mask

    @property
    def size(self) -> int:
        return self.graph.left

    def neighbor_masks(self) -> list[int]:
        out = [0] * self.graph.left
        for i, j, _ in self.graph.edges:
            out[i] |= 1 << j
        return out


def gamma(rep: RadoRep, Z: Iterable[int] | int) -> int:
    return rep.graph.neighbors_mask(to_mask(Z, rep.size))


def rho(rep: RadoRep, Z: Iterable[int] | int) -> int:
    z = to_mask(Z, rep.size)
    return rep.matroid.rank_mask(rep.graph.neighbors_mask(z)) - popcount(z)


def _matching_rank(rep: RadoRep, z: int) -> int:
    """Largest matching from nodes of ``z`` onto an independent set."""
    sub = [e for e in rep.graph.edges if z >> e[0] & 1]
    eng = _Intersection(sub, rep.matroid, [Fraction(0)] * len(sub))
    return len(eng.run())


class RadoMinorMatroid(Matroid):
    """The matroid on ``V`` represented by a Rado-minor representation."""

    kind = "rado_minor"

    def __init__(self, rep: RadoRep):
        super().__init__(rep.nV)
        self.rep = rep
        self._w = rep.W_mask
        k = popcount(self._w)
        if _matching_rank(rep, self._w) != k:
            raise InvalidRepresentationError("W cannot be matched onto an independent set")
        self._k = k

    def _rank(self, mask: int) -> int:
        return _matching_rank(self.rep, mask | self._w) - self._k


def represented_matroid(rep: RadoRep) -> RadoMinorMatroid:
    return RadoMinorMatroid(rep)


def rado_independent(rep: RadoRep, X: Iterable[int] | int, method: str = "rank") -> bool:
    """Hall-Rado test over all ``Z ⊆ X ∪ W`` (``method="rank"``) or by matching."""
    x = to_mask(X, rep.nV)
    z = x | rep.W_mask
    if method == "matching":
        return _matching_rank(rep, z) == popcount(z)
    if method != "rank":
        raise ValueError(f"unknown method {method!r}")
    require_capacity("rado", popcount(z))
    nb = rep.neighbor_masks()
    r = rep.matroid.rank_mask
    for sub in submasks(z):
        g = 0
        for i in bits(sub):
            g |= nb[i]
        if r(g) < popcount(sub):
            return False
    return True


# Exhaustive ρ tables ------------------------------------------------------------


class _RhoTable:
    """``ρ``, ``Γ`` and ``cl[Γ]`` for every subset of ``V ∪ W``."""

    def __init__(self, rep: RadoRep, cap: str = "rado_pairs"):
        require_capacity(cap, rep.size)
        self.rep = rep
        m = rep.matroid
        nb = rep.neighbor_masks()
        size = 1 << rep.size
        self.gam = [0] * size
        for z in range(1, size):
            low = z & -z
            self.gam[z] = self.gam[z ^ low] | nb[low.bit_length() - 1]
        self.rho = [m.rank_mask(self.gam[z]) - popcount(z) for z in range(size)]
        self._cl: dict[int, int] = {}
        self.vmask = full(rep.nV)
        self.N = RadoMinorMatroid(rep)

    def cl(self, z: int) -> int:
        c = self._cl.get(z)
        if c is None:
            c = self.rep.matroid.closure_mask(self.gam[z])
            self._cl[z] = c
        return c

    def x_of(self, z: int) -> int:
        return z & self.vmask


def check_rho_values(rep: RadoRep) -> Report:
    """Submodularity of ρ, the (ind)/(cir)/(spn) bounds and the closure identity."""
    t = _RhoTable(rep)
    N = t.N
    rep_ = Report()
    size = 1 << rep.size
    rho = t.rho
    sub_ok = True
    cl_ok = True
    modular = 0
    for a in range(size):
        ra = rho[a]
        for b in range(a + 1, size):
            lhs = ra + rho[b]
            rhs = rho[a | b] + rho[a & b]
            if lhs < rhs:
                sub_ok = False
            elif lhs == rhs:
                modular += 1
                if t.cl(a) & t.cl(b) != t.cl(a & b):
                    cl_ok = False
    rep_.record("rho_submodular", sub_ok)
    rep_.record("closure_identity", cl_ok)
    rep_.notes["modular_pairs"] = modular
    rN = N.rank
    ind_ok = cir_ok = spn_ok = True
    cir_attained = True
    circuits = 0
    for x in range(1 << rep.nV):
        rx = N.rank_mask(x)
        px = popcount(x)
        independent = rx == px
        circuit = not independent and all(N.is_independent_mask(x ^ (1 << e)) for e in bits(x))
        spanning = rx == rN
        lowest = min(rho[x | w] for w in submasks(rep.W_mask))
        if independent and lowest < 0:
            ind_ok = False
        if circuit:
            circuits += 1
            if lowest < -1:
                cir_ok = False
            if lowest != -1:
                cir_attained = False
        if spanning and lowest < rN - px:
            spn_ok = False
    rep_.record("rho_independent_nonnegative", ind_ok)
    rep_.record("rho_circuit_at_least_minus_one", cir_ok)
    rep_.record("rho_circuit_attains_minus_one", cir_attained)
    rep_.record("rho_spanning_bound", spn_ok)
    rep_.notes["circuits"] = circuits
    return rep_


def largest_tight_set(rep: RadoRep, X: Iterable[int] | int) -> frozenset[int] | None:
    """The largest ``X``-set ``Z`` with ``ρ(Z) = 0``; ``None`` if there is none."""
    x = to_mask(X, rep.nV)
    require_capacity("tight_set", popcount(rep.W_mask))
    N = RadoMinorMatroid(rep)
    if not N.is_independent_mask(x):
        raise DomainError("X must be independent in the represented matroid")
    union = None
    for w in submasks(rep.W_mask):
        if rho(rep, x | w) == 0:
            union = (x | w) if union is None else union | w
    if union is None:
        return None
    if rho(rep, union) != 0:
        raise RuntimeError("tight X-sets are not closed under union")
    return to_set(union)


def check_uncrossing(rep: RadoRep) -> Report:
    """Both uncrossing properties over all qualifying pairs, plus the largest tight ``Q ⊆ W``."""
    t = _RhoTable(rep)
    N = t.N
    rho_ = t.rho
    out = Report()
    size = 1 << rep.size
    zeros = [z for z in range(size) if rho_[z] == 0 and N.is_independent_mask(t.x_of(z))]
    ok1 = True
    pairs1 = 0
    for a, b in combinations(zeros, 2):
        if not N.is_independent_mask(t.x_of(a | b)):
            continue
        pairs1 += 1
        if rho_[a & b] != 0 or rho_[a | b] != 0:
            ok1 = False
            out.notes.setdefault("uncrossing_I_witness", (to_set(a), to_set(b)))
    out.record("uncrossing_I", ok1)
    out.notes["uncrossing_I_pairs"] = pairs1

    rN = N.rank
    nV = rep.nV
    circuits = [
        x
        for x in range(1 << nV)
        if not N.is_independent_mask(x) and all(N.is_independent_mask(x ^ (1 << e)) for e in bits(x))
    ]
    minus = {}
    for z in range(size):
        if rho_[z] == -1:
            minus.setdefault(t.x_of(z), []).append(z)
    ok2 = True
    pairs2 = 0
    for X, Y in combinations(circuits, 2):
        if popcount(X | Y) != rN + 2 or N.rank_mask(X | Y) != rN:
            continue
        for a in minus.get(X, ()):
            for b in minus.get(Y, ()):
                pairs2 += 1
                if rho_[a & b] != 0 or rho_[a | b] != -2:
                    ok2 = False
                    out.notes.setdefault("uncrossing_II_witness", (to_set(a), to_set(b)))
    out.record("uncrossing_II", ok2)
    out.notes["uncrossing_II_pairs"] = pairs2

    tight_w = [w for w in submasks(rep.W_mask) if rho_[w] == 0]
    q = 0
    for w in tight_w:
        q |= w
    out.record("largest_tight_Q", rho_[q] == 0)
    out.notes["Q"] = to_set(q)
    return out


# Full reducibility ---------------------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    m1: ExplicitMatroid
    m2: ExplicitMatroid

    @property
    def split(self) -> tuple[int, int]:
        return (self.m1.rank, self.m2.rank)


@dataclass
class ReducibilitySearch:
    decomposition: Decomposition | None
    searched: dict[tuple[int, int], str] = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        """True when every split was settled (found, or excluded exhaustively)."""
        return self.decomposition is not None or all(s == "excluded" for s in self.searched.values())


def full_rank_union_bases(m1: Matroid, m2: Matroid) -> set[int]:
    r = m1.rank + m2.rank
    return {a | b for a in m1.bases_masks() for b in m2.bases_masks() if not a & b and popcount(a | b) == r}


def _is_basis_family(fam: set[int]) -> bool:
    """Basis exchange on a raw family (no capacity bound; callers keep it small)."""
    if not fam:
        return False
    for x in fam:
        for y in fam:
            if x == y:
                continue
            ys = bits(y & ~x)
            for i in bits(x & ~y):
                xi = x ^ (1 << i)
                if not any((xi | 1 << j) in fam for j in ys):
                    return False
    return True


def _cover_and_check(basis_set: set[int], b1: Sequence[int], cand: list[int], n: int) -> tuple[str, ExplicitMatroid | None]:
    cset = set(cand)
    for b in basis_set:
        if not any(a & b == a and (b ^ a) in cset for a in b1):
            return "uncovered", None
    if not _is_basis_family(cset):
        return "not_matroid", None
    return "ok", ExplicitMatroid(n, cand)


def _try_summand(n: int, basis_set: set[int], r2: int, b1: Sequence[int]) -> tuple[str, ExplicitMatroid | None]:
    """Largest admissible partner family for a fixed first summand, then coverage."""
    cand = [i for i in k_subsets(n, r2) if all((a | i) in basis_set for a in b1 if not a & i)]
    return _cover_and_check(basis_set, b1, cand, n)


def _rank_one_candidates(m: Matroid) -> list[int]:
    """Loop sets ``T`` of a rank-1 summand, smallest first.

    Every basis of the union meets the complement of ``T``, so ``T`` is
    non-spanning and therefore lies inside a hyperplane.
    """
    hyper: set[int] = set()
    for b in m.bases_masks():
        for e in bits(b):
            hyper.add(m.closure_mask(b ^ (1 << e)))
    seen: set[int] = set()
    for h in hyper:
        seen.update(submasks(h))
    return sorted(seen, key=lambda t: (popcount(t), t))


def _rank_two_candidates(n: int):
    """Rank-2 matroids on ``range(n)`` as (loops, parallel classes) with at least two classes."""

    def partitions(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for p in partitions(rest):
            yield [[first]] + p
            for k in range(len(p)):
                yield p[:k] + [[first] + p[k]] + p[k + 1 :]

    for loops in range(1 << n):
        rest = [e for e in range(n) if not loops >> e & 1]
        for part in partitions(rest):
            if len(part) < 2:
                continue
            masks = [sum(1 << e for e in blk) for blk in part]
            yield [a | b for a, b in combinations(masks, 2)]


def _pair_case_two_two(m: Matroid, pairs: Sequence[int]) -> str:
    """Exclude a (2,2) split of a rank-4 paired matroid by the pair-level counting argument.

    Each circuit ``P_i ∪ P_j`` has rank 1 in exactly one summand.  A pair of
    positive rank in summand ``k`` meets at most one such circuit labelled
    ``k`` (two would put three pairs in a rank-3 flat of the union), and at
    most one pair per summand has rank 0.  The facts used are verified on
    ``m`` first; if they fail the shape does not apply.
    """
    n = len(pairs)
    r = m.rank_mask
    for a, b in combinations(range(n), 2):
        if r(pairs[a] | pairs[b]) < 3:
            return "shape_not_applicable"
    for a, b, c in combinations(range(n), 3):
        if r(pairs[a] | pairs[b] | pairs[c]) < 4:
            return "shape_not_applicable"
    edges = [(a, b) for a, b in combinations(range(n), 2) if r(pairs[a] | pairs[b]) == 3]
    options = [None] + list(range(n))
    for z1, z2 in product(options, options):
        if _label_edges(n, edges, (z1, z2)):
            return "inconclusive"
    return "excluded"


def _pair_case_one_three(m: Matroid, pairs: Sequence[int]) -> str:
    """Exclude a (1,3) split of a rank-4 paired matroid.

    Loops of the rank-1 summand meet at most three pairs when every
    transversal of four pairs is a basis.  Avoiding those pairs, four pairs
    ``i, j, k, l`` with ``P_i ∪ P_j`` a basis, the four cross unions circuits
    and ``P_i ∪ P_k ∪ P_l``, ``P_j ∪ P_k ∪ P_l`` spanning force the rank-3
    summand to collapse on a spanning set.
    """
    n = len(pairs)
    r = m.rank_mask
    for quad in combinations(range(n), 4):
        lo = [pairs[q] & -pairs[q] for q in quad]
        hi = [pairs[q] ^ lo[k] for k, q in enumerate(quad)]
        for pick in product((0, 1), repeat=4):
            x = 0
            for k in range(4):
                x |= hi[k] if pick[k] else lo[k]
            if r(x) < 4:
                return "shape_not_applicable"
    rank2 = {(a, b): r(pairs[a] | pairs[b]) for a, b in combinations(range(n), 2)}

    def r2(a, b):
        return rank2[(a, b) if a < b else (b, a)]

    def witness(avoid: set[int]) -> bool:
        free_ = [v for v in range(n) if v not in avoid]
        for i, j in combinations(free_, 2):
            if r2(i, j) != 4:
                continue
            circ = [k for k in free_ if k not in (i, j) and r2(i, k) == 3 and r2(j, k) == 3]
            for k, l in combinations(circ, 2):
                if r(pairs[i] | pairs[k] | pairs[l]) == 4 and r(pairs[j] | pairs[k] | pairs[l]) == 4:
                    return True
        return False

    for size in range(4):
        for avoid in combinations(range(n), size):
            if not witness(set(avoid)):
                return "inconclusive"
    return "excluded"


def _label_edges(n: int, edges: list[tuple[int, int]], zero: tuple[int | None, int | None]) -> bool:
    """Is there a 2-labelling with per-node label capacity 1 except at the zero pairs?"""
    load = [[0, 0] for _ in range(n)]

    def cap(v: int, k: int) -> int:
        return len(edges) if zero[k] == v else 1

    def rec(idx: int) -> bool:
        if idx == len(edges):
            return True
        a, b = edges[idx]
        for k in (0, 1):
            if load[a][k] < cap(a, k) and load[b][k] < cap(b, k):
                load[a][k] += 1
                load[b][k] += 1
                if rec(idx + 1):
                    return True
                load[a][k] -= 1
                load[b][k] -= 1
        return False

    return rec(0)


def reducibility_search(m: Matroid, pairs: Sequence[Iterable[int]] | None = None) -> ReducibilitySearch:
    """Bounded search for a full-rank union decomposition ``m = m1 ∨ m2``.

    Splits ``(r1, r2)`` with ``r1 <= r2`` are examined in turn.  ``r1 = 1`` is
    exhaustive over loop sets of the first summand; ``r1 = 2`` is exhaustive
    for ``n <= 8`` and, for rank-4 matroids given with a pairing of the ground
    set, handled by the pair-level argument.  Larger ``r1`` is not searched.
    Each split is tagged ``found``, ``excluded``, ``inconclusive`` or
    ``not_searched``.
    """
    r = m.rank
    n = m.n
    out = ReducibilitySearch(None)
    if r < 2:
        return out
    basis_set = set(m.bases_masks())
    pair_masks = [to_mask(p, n) for p in pairs] if pairs is not None else None
    for r1 in range(1, r // 2 + 1):
        r2 = r - r1
        key = (r1, r2)
        if r1 == 1:
            status = "excluded"
            bad = {}
            for i in k_subsets(n, r2):
                b = 0
                for e in range(n):
                    if not i >> e & 1 and (i | 1 << e) not in basis_set:
                        b |= 1 << e
                bad[i] = b
            for t in _rank_one_candidates(m):
                b1 = [1 << e for e in range(n) if not t >> e & 1]
                if not b1:
                    continue
                cand = [i for i, b in bad.items() if not b & ~t]
                res, m2 = _cover_and_check(basis_set, b1, cand, n)
                if res == "ok":
                    out.decomposition = Decomposition(ExplicitMatroid(n, b1), m2)
                    out.searched[key] = "found"
                    return out
                if res == "not_matroid":
                    status = "inconclusive"
            if status == "inconclusive" and r == 4 and pair_masks is not None:
                status = _pair_case_one_three(m, pair_masks)
                if status == "shape_not_applicable":
                    status = "inconclusive"
            out.searched[key] = status
        elif r1 == 2 and n <= 8:
            status = "excluded"
            for b1 in _rank_two_candidates(n):
                res, m2 = _try_summand(n, basis_set, r2, b1)
                if res == "ok":
                    out.decomposition = Decomposition(ExplicitMatroid(n, b1), m2)
                    out.searched[key] = "found"
                    return out
                if res == "not_matroid":
                    status = "inconclusive"
            out.searched[key] = status
        elif r1 == 2 and r == 4 and pair_masks is not None:
            status = _pair_case_two_two(m, pair_masks)
            out.searched[key] = "inconclusive" if status == "shape_not_applicable" else status
        else:
            out.searched[key] = "not_searched"
    return out


def fully_reducible(m: Matroid, pairs: Sequence[Iterable[int]] | None = None) -> Decomposition | None:
    """A decomposition if the bounded search finds one; see :func:`reducibility_search`."""
    return reducibility_search(m, pairs).decomposition


# Robust matroids -----------------------------------------------------------------


@dataclass(frozen=True)
class RobustResult:
    ok: bool
    S: frozenset[int] = frozenset()
    K: frozenset[int] = frozenset()
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def pair_graph(m: Matroid) -> tuple[bool, set[frozenset[int]]]:
    """Whether every 4-set of rank below 4 is a union of two pairs, and the graph ``H`` of those pairs (1-based)."""
    if m.n % 2 or m.rank != 4:
        raise DomainError("robust matroids have rank 4 on an even ground set")
    edges: set[frozenset[int]] = set()
    pairs_only = True
    for x in k_subsets(m.n, 4):
        if m.rank_mask(x) == 4:
            continue
        els = bits(x)
        if els[0] % 2 == 0 and els[1] == els[0] + 1 and els[2] % 2 == 0 and els[3] == els[2] + 1:
            edges.add(frozenset((els[0] // 2 + 1, els[2] // 2 + 1)))
        else:
            pairs_only = False
    return pairs_only, edges


def _split_condition(H: set[frozenset[int]], S: Sequence[int], K: Sequence[int]) -> bool:
    def adj(a: int, b: int) -> bool:
        return frozenset((a, b)) in H

    def clique(group) -> bool:
        return all(adj(a, b) for a, b in combinations(group, 2))

    if len(S) < 3 or len(K) < 3 or not clique(K):
        return False
    if not all(adj(s, k) for s in S for k in K):
        return False
    if not all(any(not adj(i, j) for j in S if j != i) for i in S):
        return False
    return not any(clique([j for j in S if j != i]) for i in S)


def check_robust_witness(m: Matroid, S: Iterable[int], K: Iterable[int]) -> bool:
    """Pair condition plus the split condition for the given partition (1-based pair indices)."""
    S, K = sorted(S), sorted(K)
    if set(S) & set(K) or set(S) | set(K) != set(range(1, m.n // 2 + 1)):
        return False
    pairs_only, H = pair_graph(m)
    return pairs_only and _split_condition(H, S, K)


def is_robust(m: Matroid) -> RobustResult:
    """Check the pair condition, then search partitions ``(S, K)`` of the pair indices, largest ``K`` first.

    The split condition: both parts have at least three members, ``K`` is a clique of ``H``
    joined to all of ``S``, every index of ``S`` misses another index of ``S``, and removing
    any one index from ``S`` leaves a non-clique.
    """
    require_capacity("robust", m.n // 2)
    pairs_only, H = pair_graph(m)
    if not pairs_only:
        return RobustResult(False, reason="a non-basis is not a union of two pairs")
    n = m.n // 2
    nodes = list(range(1, n + 1))
    for size in range(n - 3, 2, -1):
        for K in combinations(nodes, size):
            S = [v for v in nodes if v not in K]
            if _split_condition(H, S, K):
                return RobustResult(True, frozenset(S), frozenset(K))
    return RobustResult(False, reason="no partition (S, K) satisfies the split condition")


# Tight sets of paired representations ---------------------------------------------


def pair_tight_sets(rep: RadoRep, npairs: int) -> tuple[list[frozenset[int] | None], frozenset[int] | None]:
    """``Z_k`` for every pair ``P_k`` (1-based ``k``) and the largest tight ``Q ⊆ W``."""
    zs = [largest_tight_set(rep, {2 * k - 2, 2 * k - 1}) for k in range(1, npairs + 1)]
    return zs, largest_tight_set(rep, ())


def check_pair_tight_sets(rep: RadoRep, npairs: int) -> Report:
    """Pairwise structure of the ``Z_k``: ρ of unions, common intersection ``Q``, closures."""
    N = RadoMinorMatroid(rep)
    zs, Q = pair_tight_sets(rep, npairs)
    out = Report()
    out.record("Z_exists", all(z is not None for z in zs))
    if not out.ok or Q is None:
        out.record("Q_exists", Q is not None)
        return out
    qm = to_mask(Q)
    m = rep.matroid
    out.record("Q_inside_Z", all(qm & to_mask(z) == qm for z in zs))
    for a, b in combinations(range(npairs), 2):
        za, zb = to_mask(zs[a]), to_mask(zs[b])
        xs = (3 << 2 * a) | (3 << 2 * b)
        target = 0 if N.rank_mask(xs) == 4 else -1
        out.record("rho_of_unions", rho(rep, za | zb) == target, (a + 1, b + 1))
        out.record("pairwise_intersection_Q", za & zb == qm, (a + 1, b + 1))
        ca = m.closure_mask(gamma(rep, za))
        cb = m.closure_mask(gamma(rep, zb))
        out.record("closure_intersection", ca & cb == m.closure_mask(gamma(rep, qm)), (a + 1, b + 1))
    return out


__all__ = [
    "RadoRep",
    "RadoMinorMatroid",
    "represented_matroid",
    "gamma",
    "rho",
    "rado_independent",
    "check_rho_values",
    "largest_tight_set",
    "check_uncrossing",
    "Decomposition",
    "ReducibilitySearch",
    "reducibility_search",
    "fully_reducible",
    "full_rank_union_bases",
    "RobustResult",
    "pair_graph",
    "check_robust_witness",
    "is_robust",
    "pair_tight_sets",
    "check_pair_tight_sets",
]
