"""Weighted matroid intersection on bipartite graphs, dual certificates, Lovász extension.

The engine treats the edge set of a bipartite graph as a common ground set of
two matroids: a partition matroid (one edge per left node) and the matroid
induced on edges by the right-hand matroid ``m`` (edges at the same right
node are parallel).  Maximum weight common independent sets are grown by
shortest augmenting paths in the exchange graph.  Dual potentials come from a
weight splitting obtained by solving the optimality conditions as a system of
difference constraints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ._bits import bits, full, k_subsets, popcount, require_capacity, to_mask
from .errors import DomainError, InfeasibleError
from .extrat import NEG_INF, ExtRat, ext
from .matroid import Matroid
from .report import Report

Edge = tuple[int, int, Fraction]


@dataclass(frozen=True)
class WeightedBipGraph:
    """Bipartite graph ``(V ∪ W, U; E)``; left nodes ``0..w_start-1`` are V, the rest W."""

    left: int
    right: int
    edges: tuple[Edge, ...]
    w_start: int

    def __init__(self, left: int, right: int, edges: Iterable[Sequence], w_start: int | None = None):
        norm = []
        seen = set()
        for e in edges:
            i, j, w = e
            w = ext(w)
            if w is NEG_INF:
                raise DomainError("edge weights must be finite")
            if not (0 <= i < left and 0 <= j < right):
                raise DomainError(f"edge {(i, j)} out of range")
            if (i, j) in seen:
                raise DomainError(f"parallel edge {(i, j)}")
            seen.add((i, j))
            norm.append((i, j, w))
        if w_start is None:
            w_start = left
        if not 0 <= w_start <= left:
            raise DomainError("w_start out of range")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "w_start", w_start)

    @property
    def V(self) -> range:
        return range(self.w_start)

    @property
    def W(self) -> range:
        return range(self.w_start, self.left)

    @property
    def W_mask(self) -> int:
        return full(self.left) & ~full(self.w_start)

    def edges_at_left(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.left)]
        for k, (i, _, _) in enumerate(self.edges):
            out[i].append(k)
        return out

    def edges_at_right(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.right)]
        for k, (_, j, _) in enumerate(self.edges):
            out[j].append(k)
        return out

    def neighbors_mask(self, left_mask: int) -> int:
        out = 0
        for i, j, _ in self.edges:
            if left_mask >> i & 1:
                out |= 1 << j
        return out

    def weight(self, i: int, j: int) -> ExtRat:
        for a, b, w in self.edges:
            if a == i and b == j:
                return w
        return NEG_INF

    def with_edges(self, edges: Iterable[Sequence]) -> "WeightedBipGraph":
        return WeightedBipGraph(self.left, self.right, edges, self.w_start)


Matching = tuple[Edge, ...]


@dataclass(frozen=True)
class DualCert:
    """Potentials ``pi`` on left nodes and ``tau`` on right nodes."""

    pi: tuple[Fraction, ...]
    tau: tuple[Fraction, ...]

    def __init__(self, pi: Iterable, tau: Iterable):
        object.__setattr__(self, "pi", tuple(Fraction(x) for x in pi))
        object.__setattr__(self, "tau", tuple(Fraction(x) for x in tau))


# Brute force -------------------------------------------------------------------


def _enumerate_matchings(g: WeightedBipGraph, m: Matroid, cover: int):
    """Yield ``(weight, edge indices)`` for every independent matching covering ``cover``."""
    nodes = bits(cover)
    at_left = g.edges_at_left()
    chosen: list[int] = []

    def rec(pos: int, used: int, total: Fraction):
        if pos == len(nodes):
            yield total, tuple(chosen)
            return
        for k in at_left[nodes[pos]]:
            j = g.edges[k][1]
            if used >> j & 1:
                continue
            nu = used | 1 << j
            if m.rank_mask(nu) != pos + 1:
                continue
            chosen.append(k)
            yield from rec(pos + 1, nu, total + g.edges[k][2])
            chosen.pop()

    yield from rec(0, 0, Fraction(0))


def brute_force_matching(g: WeightedBipGraph, m: Matroid, cover: Iterable[int]) -> tuple[ExtRat, Matching | None]:
    """Oracle: enumerate every matching covering exactly ``cover``."""
    cmask = to_mask(cover, g.left)
    require_capacity("brute_matching", popcount(cmask))
    if m.n != g.right:
        raise DomainError("matroid ground set must be the right node set")
    best: ExtRat = NEG_INF
    best_edges = None
    for w, ks in _enumerate_matchings(g, m, cmask):
        if best is NEG_INF or w > best:
            best, best_edges = w, ks
    if best_edges is None:
        return NEG_INF, None
    return best, tuple(sorted(g.edges[k] for k in best_edges))


# Augmenting path engine --------------------------------------------------------


class _Intersection:
    """State of a common independent set ``I`` of the two edge matroids."""

    def __init__(self, edges: Sequence[Edge], m: Matroid, weights: Sequence[Fraction]):
        self.edges = edges
        self.m = m
        self.w = weights
        self.I: set[int] = set()

    def _state(self):
        left_used = {self.edges[k][0]: k for k in self.I}
        right_used = {self.edges[k][1]: k for k in self.I}
        rmask = 0
        for j in right_used:
            rmask |= 1 << j
        return left_used, right_used, rmask

    def exchange_graph(self):
        """Sources, sinks and arcs of the exchange graph for the current ``I``."""
        E, m = self.edges, self.m
        left_used, right_used, rmask = self._state()
        outside = [k for k in range(len(E)) if k not in self.I]
        inside = sorted(self.I)
        sources = [y for y in outside if E[y][0] not in left_used]
        sinks = []
        for y in outside:
            j = E[y][1]
            if j not in right_used and m.is_independent_mask(rmask | 1 << j):
                sinks.append(y)
        arcs1: list[tuple[int, int]] = []  # x -> y with I - x + y independent in M1
        arcs2: list[tuple[int, int]] = []  # y -> x with I - x + y independent in M2
        for x in inside:
            lx, rx = E[x][0], E[x][1]
            base = rmask & ~(1 << rx)
            for y in outside:
                ly, ry = E[y][0], E[y][1]
                if ly == lx or ly not in left_used:
                    arcs1.append((x, y))
                if ry == rx:
                    arcs2.append((y, x))
                elif ry not in right_used and m.is_independent_mask(base | 1 << ry):
                    arcs2.append((y, x))
        return sources, sinks, arcs1, arcs2

    def augment(self) -> bool:
        """One shortest augmenting path step; False if no path exists."""
        sources, sinks, arcs1, arcs2 = self.exchange_graph()
        if not sources or not sinks:
            return False
        length = {}
        for k in range(len(self.edges)):
            length[k] = self.w[k] if k in self.I else -self.w[k]
        out: dict[int, list[int]] = {}
        for a, b in arcs1 + arcs2:
            out.setdefault(a, []).append(b)
        for lst in out.values():
            lst.sort()
        dist: dict[int, tuple[Fraction, int]] = {y: (length[y], 0) for y in sources}
        pred: dict[int, int] = {}
        for _ in range(len(self.edges) + 1):
            changed = False
            for u in sorted(dist):
                du = dist[u]
                for v in out.get(u, ()):
                    cand = (du[0] + length[v], du[1] + 1)
                    if v not in dist or cand < dist[v]:
                        dist[v] = cand
                        pred[v] = u
                        changed = True
            if not changed:
                break
        else:
            raise RuntimeError("negative cycle in exchange graph")
        reachable = [y for y in sinks if y in dist]
        if not reachable:
            return False
        end = min(reachable, key=lambda y: (dist[y], y))
        path = [end]
        while path[-1] in pred and path[-1] not in sources:
            path.append(pred[path[-1]])
        # a source may also have a predecessor; stop at the first source reached
        if path[-1] not in sources:
            raise RuntimeError("augmenting path reconstruction failed")
        for k in path:
            if k in self.I:
                self.I.remove(k)
            else:
                self.I.add(k)
        return True

    def run(self, target: int | None = None) -> set[int]:
        while target is None or len(self.I) < target:
            if not self.augment():
                break
        return self.I


def max_weight_independent_matching(
    g: WeightedBipGraph, m: Matroid, cover: Iterable[int], method: str = "algorithm"
) -> tuple[ExtRat, Matching | None]:
    """Maximum weight matching covering exactly ``cover`` with independent right endpoints.

    ``method="brute"`` runs the enumeration oracle instead of the algorithm.
    """
    if method == "brute":
        return brute_force_matching(g, m, cover)
    if m.n != g.right:
        raise DomainError("matroid ground set must be the right node set")
    cmask = to_mask(cover, g.left)
    k = popcount(cmask)
    sub = [e for e in g.edges if cmask >> e[0] & 1]
    eng = _Intersection(sub, m, [e[2] for e in sub])
    chosen = eng.run(target=k)
    if len(chosen) < k:
        return NEG_INF, None
    match = tuple(sorted(sub[x] for x in chosen))
    return sum((e[2] for e in match), Fraction(0)), match


# Lovász extension and the matroid of maximum weight bases ----------------------


def lovasz_extension(m: Matroid, tau: Sequence) -> Fraction:
    """Maximum ``tau``-weight of a basis via the sorted-prefix formula."""
    t = [Fraction(x) for x in tau]
    if len(t) != m.n:
        raise DomainError("tau must have one entry per element")
    order = sorted(range(m.n), key=lambda u: (-t[u], u))
    total = Fraction(0)
    prefix = 0
    prev = 0
    for u in order:
        prefix |= 1 << u
        r = m.rank_mask(prefix)
        total += t[u] * (r - prev)
        prev = r
    return total


def brute_lovasz_extension(m: Matroid, tau: Sequence) -> Fraction:
    t = [Fraction(x) for x in tau]
    return max(sum((t[u] for u in bits(b)), Fraction(0)) for b in m.bases_masks())


def level_sets(tau: Sequence) -> list[tuple[Fraction, int]]:
    """``[(λ_1, S_1), ...]`` with ``λ_1 > λ_2 > ...`` and ``S_ℓ = {u : τ_u ≥ λ_ℓ}``."""
    t = [Fraction(x) for x in tau]
    out = []
    acc = 0
    for lam in sorted(set(t), reverse=True):
        for u, x in enumerate(t):
            if x == lam:
                acc |= 1 << u
        out.append((lam, acc))
    return out


class LevelSumMatroid(Matroid):
    """``⊕_ℓ (m|S_ℓ)/S_{ℓ-1}`` over the level sets of ``tau``, on the original indices."""

    kind = "level_sum"

    def __init__(self, m: Matroid, tau: Sequence):
        super().__init__(m.n)
        self.m = m
        self.levels = level_sets(tau)

    def _rank(self, mask: int) -> int:
        total = 0
        prev = 0
        for _, s in self.levels:
            block = s & ~prev
            total += self.m.rank_mask((mask & block) | prev) - self.m.rank_mask(prev)
            prev = s
        return total


def matroid_of_max_weight_bases(m: Matroid, tau: Sequence) -> Matroid:
    return LevelSumMatroid(m, tau)


# Matching program: brute force primal ---------------------------------------------


@dataclass(frozen=True)
class PrimalOptimum:
    value: ExtRat
    maximizers: frozenset[int]  # masks of X ⊆ V
    optimal_edges: frozenset[int]  # indices of edges used by some optimal matching
    layer: int


def primal_optimum(g: WeightedBipGraph, m: Matroid) -> PrimalOptimum:
    """Enumerate all feasible solutions of the matching program over ``V ∪ W``."""
    require_capacity("brute_matching", g.left)
    d = m.rank - (g.left - g.w_start)
    best: ExtRat = NEG_INF
    maxers: set[int] = set()
    used: set[int] = set()
    if d < 0:
        return PrimalOptimum(NEG_INF, frozenset(), frozenset(), d)
    wmask = g.W_mask
    for x in k_subsets(g.w_start, d):
        for w, ks in _enumerate_matchings(g, m, x | wmask):
            if best is NEG_INF or w > best:
                best = w
                maxers = {x}
                used = set(ks)
            elif w == best:
                maxers.add(x)
                used.update(ks)
    return PrimalOptimum(best, frozenset(maxers), frozenset(used), d)


# Dual certificate --------------------------------------------------------------


def _solve_difference_constraints(nvars: int, arcs: list[tuple[int, int, Fraction]]) -> list[Fraction]:
    """Potentials ``p`` with ``p[v] <= p[u] + c`` for every arc ``(u, v, c)``."""
    p = [Fraction(0)] * nvars
    for _ in range(nvars + 1):
        changed = False
        for u, v, c in arcs:
            if p[u] + c < p[v]:
                p[v] = p[u] + c
                changed = True
        if not changed:
            return p
    raise RuntimeError("optimality conditions infeasible: current set is not optimal")


def _weight_split(eng: _Intersection) -> list[Fraction]:
    """``w1`` such that ``I`` is ``w1``-max in M1 and ``(w - w1)``-max in M2."""
    E = eng.edges
    z = len(E)
    sources, sinks, arcs1, arcs2 = eng.exchange_graph()
    arcs: list[tuple[int, int, Fraction]] = []
    zero = Fraction(0)
    for x in eng.I:
        arcs.append((x, z, zero))
        arcs.append((z, x, eng.w[x]))
    for y in sources:
        arcs.append((z, y, zero))
    for y in sinks:
        arcs.append((y, z, -eng.w[y]))
    for x, y in arcs1:
        arcs.append((x, y, zero))
    for y, x in arcs2:
        arcs.append((y, x, eng.w[x] - eng.w[y]))
    p = _solve_difference_constraints(z + 1, arcs)
    return [p[k] - p[z] for k in range(z)]


def _objective(m: Matroid, cert: DualCert) -> Fraction:
    return sum(cert.pi, Fraction(0)) + lovasz_extension(m, cert.tau)


def _raise_to_flats(m: Matroid, tau: list[Fraction]) -> list[Fraction]:
    """Raise τ on ``cl(S_ℓ) \\ S_ℓ`` for the smallest non-flat level set, repeatedly."""
    tau = list(tau)
    while True:
        for lam, s in level_sets(tau):
            cl = m.closure_mask(s)
            if cl != s:
                for u in bits(cl & ~s):
                    tau[u] = lam
                break
        else:
            return tau


def _lower_empty_blocks(g: WeightedBipGraph, m: Matroid, pi: Sequence[Fraction], tau: list[Fraction]) -> list[Fraction]:
    """Lower level blocks that receive no tight edge until an edge becomes tight or blocks merge."""
    tau = list(tau)
    while True:
        levels = level_sets(tau)
        changed = False
        prev = 0
        for idx, (lam, s) in enumerate(levels):
            block = s & ~prev
            prev = s
            slack = None
            for i, j, c in g.edges:
                if block >> j & 1:
                    sl = pi[i] + tau[j] - c
                    slack = sl if slack is None else min(slack, sl)
            if slack == 0:
                continue
            gap = lam - levels[idx + 1][0] if idx + 1 < len(levels) else None
            step = min(x for x in (slack, gap) if x is not None) if (slack, gap) != (None, None) else None
            if step is None or step <= 0:
                continue
            for u in bits(block):
                tau[u] -= step
            changed = True
            break
        if not changed:
            return tau


def dual_certificate(g: WeightedBipGraph, m: Matroid) -> DualCert:
    """Optimal potentials for the dual program, normalised to flat level sets."""
    if m.n != g.right:
        raise DomainError("matroid ground set must be the right node set")
    E = list(g.edges)
    nW = g.left - g.w_start
    r = m.rank
    if r < nW:
        raise InfeasibleError("matroid rank is smaller than |W|")
    bound = sum((abs(e[2]) for e in E), Fraction(0)) + 1
    kw = 2 * bound
    kb = 2 * (bound + kw * nW) + 1
    shifted = [e[2] + kb + (kw if e[0] >= g.w_start else 0) for e in E]
    eng = _Intersection(E, m, shifted)
    eng.run()
    covered = {E[k][0] for k in eng.I}
    if len(eng.I) != r or any(w not in covered for w in g.W):
        raise InfeasibleError("no independent matching covers W and reaches a basis")
    w1 = _weight_split(eng)
    pi2 = [Fraction(0)] * g.left
    for k, (i, _, _) in enumerate(E):
        if w1[k] > pi2[i]:
            pi2[i] = w1[k]
    tau2: list[Fraction | None] = [None] * g.right
    for k, (_, j, _) in enumerate(E):
        c2 = shifted[k] - w1[k]
        if tau2[j] is None or c2 > tau2[j]:
            tau2[j] = c2
    tau_plus = [max(t, Fraction(0)) if t is not None else Fraction(0) for t in tau2]
    pi = [pi2[i] - (kw if i >= g.w_start else 0) for i in range(g.left)]
    tau = [t - kb for t in tau_plus]
    tau = _raise_to_flats(m, tau)
    tau = _lower_empty_blocks(g, m, pi, tau)
    tau = _raise_to_flats(m, tau)
    return DualCert(pi, tau)


def tight_subgraph(g: WeightedBipGraph, cert: DualCert) -> WeightedBipGraph:
    if not _feasible(g, cert):
        raise DomainError("certificate is not feasible")
    return g.with_edges(e for e in g.edges if cert.pi[e[0]] + cert.tau[e[1]] == e[2])


def _feasible(g: WeightedBipGraph, cert: DualCert) -> bool:
    return all(cert.pi[i] + cert.tau[j] >= c for i, j, c in g.edges)


def rado_minor_bases(g: WeightedBipGraph, m: Matroid, d: int) -> frozenset[int]:
    """Bases of the matroid on V represented by ``(g, m, W)`` (edge weights ignored)."""
    wmask = g.W_mask
    out = set()
    for x in k_subsets(g.w_start, d):
        for _ in _enumerate_matchings(g, m, x | wmask):
            out.add(x)
            break
    return frozenset(out)


def verify_certificate(g: WeightedBipGraph, m: Matroid, cert: DualCert) -> Report:
    """Check a certificate against the brute-force primal optimum and the structure of optimal potentials."""
    rep = Report()
    if not rep.record("shape", len(cert.pi) == g.left and len(cert.tau) == g.right):
        return rep
    V = g.V
    rep.record("pi_nonnegative_on_V", all(cert.pi[i] >= 0 for i in V), [i for i in V if cert.pi[i] < 0])
    bad = [(i, j) for i, j, c in g.edges if cert.pi[i] + cert.tau[j] < c]
    rep.record("edge_feasibility", not bad, bad)
    primal = primal_optimum(g, m)
    obj = _objective(m, cert)
    rep.notes["objective"] = obj
    rep.notes["primal"] = primal.value
    if not rep.record("primal_feasible", primal.value is not NEG_INF):
        return rep
    rep.record("strong_duality", obj == primal.value, (obj, primal.value))
    levels = level_sets(cert.tau)
    rep.record("level_sets_flat", all(m.is_flat_mask(s) for _, s in levels))
    tight = [e for e in g.edges if cert.pi[e[0]] + cert.tau[e[1]] == e[2]]
    tight_right = 0
    for _, j, _ in tight:
        tight_right |= 1 << j
    prev = 0
    gaps_ok = True
    for _, s in levels:
        # a block of loops adds no rank and need not meet a tight edge
        if m.rank_mask(s) > m.rank_mask(prev) and not (s & ~prev) & tight_right:
            gaps_ok = False
        prev = s
    rep.record("gap_blocks_meet_tight_edges", gaps_ok)
    tight_set = {(e[0], e[1]) for e in tight}
    missing = [g.edges[k][:2] for k in primal.optimal_edges if g.edges[k][:2] not in tight_set]
    rep.record("optimal_edges_tight", not missing, missing)
    union_max = 0
    inter_max = full(g.w_start)
    for x in primal.maximizers:
        union_max |= x
        inter_max &= x
    avoidable = [i for i in V if not inter_max >> i & 1]
    rep.record("pi_zero_on_avoidable_V", all(cert.pi[i] == 0 for i in avoidable))
    g0 = g.with_edges(tight)
    mt = matroid_of_max_weight_bases(m, cert.tau)
    # complementary slackness: an element with positive potential is covered by every optimal matching
    forced = sum(1 << i for i in V if cert.pi[i] > 0)
    represented = frozenset(x for x in rado_minor_bases(g0, mt, primal.layer) if x & forced == forced)
    rep.notes["forced"] = forced
    rep.record("maximizers_equal_tight_rado_minor", represented == primal.maximizers)
    return rep


def certificate_objective(m: Matroid, cert: DualCert) -> Fraction:
    return _objective(m, cert)


__all__ = [
    "WeightedBipGraph",
    "DualCert",
    "Matching",
    "PrimalOptimum",
    "brute_force_matching",
    "max_weight_independent_matching",
    "lovasz_extension",
    "brute_lovasz_extension",
    "level_sets",
    "LevelSumMatroid",
    "matroid_of_max_weight_bases",
    "primal_optimum",
    "dual_certificate",
    "tight_subgraph",
    "verify_certificate",
    "rado_minor_bases",
    "certificate_objective",
]
