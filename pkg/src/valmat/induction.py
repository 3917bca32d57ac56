"""Induction of valuated matroids through bipartite graphs and networks.

``R``-minor representations are a :class:`WeightedBipGraph` (left nodes
``V`` then ``W``), a matroid on the right nodes and the implied rank
``d = r(M) - |W|``.  The transformers at the bottom rebuild a representation
of a deletion, contraction, dual, principal extension or direct sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from ._bits import bits, k_subsets, popcount, to_mask
from .errors import DomainError, InvalidRepresentationError
from .extrat import NEG_INF, ExtRat, ext
from .intersection import WeightedBipGraph, max_weight_independent_matching
from .matroid import Matroid, direct_sum, dual, free
from .valfn import ValMat, contract, delete, direct_sum_v, free_valmat, principal_extension


# Bipartite induction ---------------------------------------------------------------


def _best_by_right_set(g: WeightedBipGraph, cover: int) -> dict[int, Fraction]:
    """Maximum matching weight covering ``cover`` for every reachable right set."""
    at_left = [[] for _ in range(g.left)]
    for i, j, w in g.edges:
        at_left[i].append((j, w))
    layer: dict[int, Fraction] = {0: Fraction(0)}
    for i in bits(cover):
        nxt: dict[int, Fraction] = {}
        for used, val in layer.items():
            for j, w in at_left[i]:
                if used >> j & 1:
                    continue
                key = used | 1 << j
                cand = val + w
                old = nxt.get(key)
                if old is None or cand > old:
                    nxt[key] = cand
        layer = nxt
        if not layer:
            break
    return layer


def induced_value(g: WeightedBipGraph, base: ValMat, X: Iterable[int] | int) -> ExtRat:
    x = to_mask(X, g.left)
    if popcount(x) != base.d:
        return NEG_INF
    best: ExtRat = NEG_INF
    for y, w in _best_by_right_set(g, x).items():
        b = base.value_mask(y)
        if b is not NEG_INF and (best is NEG_INF or w + b > best):
            best = w + b
    return best


def induce_bipartite(g: WeightedBipGraph, base: ValMat) -> ValMat:
    """``f(X) = max`` over matchings covering exactly ``X`` of weight plus ``base`` of the right ends.

    The result lives on all left nodes of ``g`` (``V`` and ``W`` alike).
    """
    if base.n != g.right:
        raise DomainError("base ground set must be the right node set")
    table = {}
    for x in k_subsets(g.left, base.d):
        v = induced_value(g, base, x)
        if v is not NEG_INF:
            table[x] = v
    return ValMat(g.left, base.d, table)


# R-minor representations -----------------------------------------------------------


@dataclass(frozen=True)
class RMinorRep:
    graph: WeightedBipGraph
    matroid: Matroid

    def __post_init__(self):
        if self.matroid.n != self.graph.right:
            raise InvalidRepresentationError("matroid ground set must be the right node set")
        if self.d < 0:
            raise InvalidRepresentationError("matroid rank is smaller than |W|")

    @property
    def nV(self) -> int:
        return self.graph.w_start

    @property
    def W(self) -> range:
        return self.graph.W

    @property
    def d(self) -> int:
        return self.matroid.rank - len(self.graph.W)


def eval_rminor(rep: RMinorRep, X: Iterable[int] | int, method: str = "algorithm") -> ExtRat:
    """Value at ``X ⊆ V``: best independent matching covering ``X ∪ W``; ``NEG_INF`` off layer ``d``."""
    x = to_mask(X, rep.nV)
    if popcount(x) != rep.d:
        return NEG_INF
    val, _ = max_weight_independent_matching(rep.graph, rep.matroid, x | rep.graph.W_mask, method)
    return val


def rminor_function(rep: RMinorRep, method: str = "algorithm") -> ValMat:
    table = {}
    for x in k_subsets(rep.nV, rep.d):
        v = eval_rminor(rep, x, method)
        if v is not NEG_INF:
            table[x] = v
    return ValMat(rep.nV, rep.d, table)


def rminor_via_induction(rep: RMinorRep) -> ValMat:
    """Second route: induce the trivially valuated matroid, then contract ``W``."""
    f = induce_bipartite(rep.graph, ValMat.trivial(rep.matroid))
    return contract(f, rep.graph.W)


def trim_representation(rep: RMinorRep) -> RMinorRep:
    """Keep, at every left node, a maximum weight basis of its neighbourhood (ties: smaller index)."""
    g, m = rep.graph, rep.matroid
    if len(g.W):
        raise DomainError("trimming applies to representations with W empty")
    kept = []
    for ks in g.edges_at_left():
        order = sorted(ks, key=lambda k: (-g.edges[k][2], g.edges[k][1]))
        used = 0
        for k in order:
            j = g.edges[k][1]
            if m.is_independent_mask(used | 1 << j):
                used |= 1 << j
                kept.append(k)
    return RMinorRep(g.with_edges(g.edges[k] for k in sorted(kept)), m)


# Networks --------------------------------------------------------------------------


@dataclass(frozen=True)
class Network:
    """Directed network on ``range(nodes)`` with source terminals ``V`` and sink terminals ``U``."""

    nodes: int
    arcs: tuple[tuple[int, int, Fraction], ...]
    V: tuple[int, ...]
    U: tuple[int, ...]

    def __init__(self, nodes: int, arcs: Iterable[Sequence], V: Iterable[int], U: Iterable[int]):
        norm = []
        seen = set()
        for a, b, w in arcs:
            w = ext(w)
            if w is NEG_INF:
                raise DomainError("arc weights must be finite")
            if not (0 <= a < nodes and 0 <= b < nodes) or a == b:
                raise DomainError(f"bad arc {(a, b)}")
            if (a, b) in seen:
                raise DomainError(f"parallel arc {(a, b)}")
            seen.add((a, b))
            norm.append((a, b, w))
        V, U = tuple(V), tuple(U)
        if not V or not U:
            raise DomainError("V and U must be nonempty")
        if set(V) & set(U):
            raise DomainError("V and U must be disjoint")
        if len(set(V)) != len(V) or len(set(U)) != len(U):
            raise DomainError("repeated terminal")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "arcs", tuple(norm))
        object.__setattr__(self, "V", V)
        object.__setattr__(self, "U", U)

    @property
    def inner(self) -> tuple[int, ...]:
        term = set(self.V) | set(self.U)
        return tuple(t for t in range(self.nodes) if t not in term)


def network_to_bipartite(net: Network, base: ValMat) -> tuple[WeightedBipGraph, ValMat, range]:
    """Bipartite graph ``G``, base ``h = base ⊕ free(W')`` and the set ``W`` to contract.

    Left nodes are ``V`` then the inner nodes ``W``; right nodes are ``U``
    then copies ``W'``.  An arc ``(a, b)`` becomes the edge ``(a, b)`` or
    ``(a, b')``; each inner node also gets a zero edge to its own copy.
    Arcs entering ``V`` or leaving ``U`` cannot lie on a ``V``-``U`` path
    and are dropped.
    """
    if base.n != len(net.U):
        raise DomainError("base ground set must be U")
    inner = net.inner
    left_of = {v: k for k, v in enumerate(net.V)}
    left_of.update({w: len(net.V) + k for k, w in enumerate(inner)})
    right_of = {u: k for k, u in enumerate(net.U)}
    right_of.update({w: len(net.U) + k for k, w in enumerate(inner)})
    edges = {}
    for a, b, w in net.arcs:
        if a in left_of and b in right_of:
            edges[(left_of[a], right_of[b])] = w
    for w in inner:
        edges[(left_of[w], right_of[w])] = Fraction(0)
    nl = len(net.V) + len(inner)
    g = WeightedBipGraph(nl, len(net.U) + len(inner), [(i, j, w) for (i, j), w in sorted(edges.items())], len(net.V))
    return g, direct_sum_v(base, free_valmat(len(inner))), g.W


def induce_network(net: Network, base: ValMat) -> ValMat:
    """Network induction on ``V`` (indexed in the order ``net.V``) via the bipartite reduction.

    Cycles through inner nodes are free to appear next to the paths, so on
    networks with cycles the value counts their weight too; on acyclic
    networks it is exactly the best node-disjoint path system.
    """
    g, h, W = network_to_bipartite(net, base)
    return contract(induce_bipartite(g, h), W)


def brute_network_induction(net: Network, base: ValMat) -> ValMat:
    """Oracle: enumerate node-disjoint path systems from ``X ⊆ V`` into ``U`` explicitly."""
    vpos = {v: k for k, v in enumerate(net.V)}
    upos = {u: k for k, u in enumerate(net.U)}
    out: dict[int, list[tuple[int, Fraction]]] = {}
    for a, b, w in net.arcs:
        if b in vpos or a in upos:
            continue
        out.setdefault(a, []).append((b, w))
    table: dict[int, Fraction] = {}
    d = base.d
    nV = len(net.V)

    def paths_from(start: int, used: int):
        stack = [(start, used | 1 << start, Fraction(0))]
        while stack:
            node, u, val = stack.pop()
            for b, w in out.get(node, ()):
                if u >> b & 1:
                    continue
                if b in upos:
                    yield b, u | 1 << b, val + w
                else:
                    stack.append((b, u | 1 << b, val + w))

    for x in k_subsets(nV, d):
        starts = [net.V[k] for k in bits(x)]
        best: ExtRat = NEG_INF

        def rec(k: int, used: int, ymask: int, val: Fraction):
            nonlocal best
            if k == len(starts):
                b = base.value_mask(ymask)
                if b is not NEG_INF and (best is NEG_INF or val + b > best):
                    best = val + b
                return
            for end, u2, pv in paths_from(starts[k], used):
                rec(k + 1, u2, ymask | 1 << upos[end], val + pv)

        start_mask = sum(1 << s for s in starts)
        rec(0, start_mask, 0, Fraction(0))
        if best is not NEG_INF:
            table[x] = best
    return ValMat(nV, d, table)


def bipartite_as_network(g: WeightedBipGraph) -> Network:
    """A bipartite graph read as a network ``V → U`` (requires ``W`` empty)."""
    if len(g.W):
        raise DomainError("W must be empty")
    return Network(g.left + g.right, [(i, g.left + j, w) for i, j, w in g.edges], range(g.left), range(g.left, g.left + g.right))


# Representation transformers --------------------------------------------------------


def rep_delete(rep: RMinorRep, Y: Iterable[int]) -> RMinorRep:
    """Remove the left nodes ``Y ⊆ V``; survivors keep their relative order."""
    g = rep.graph
    y = to_mask(Y, rep.nV)
    keep = [i for i in range(g.left) if not y >> i & 1]
    new = {old: k for k, old in enumerate(keep)}
    edges = [(new[i], j, w) for i, j, w in g.edges if i in new]
    return RMinorRep(WeightedBipGraph(len(keep), g.right, edges, rep.nV - popcount(y)), rep.matroid)


def rep_contract(rep: RMinorRep, Y: Iterable[int]) -> RMinorRep:
    """Move ``Y ⊆ V`` into ``W``."""
    g = rep.graph
    y = to_mask(Y, rep.nV)
    order = [i for i in range(rep.nV) if not y >> i & 1] + list(bits(y)) + list(g.W)
    new = {old: k for k, old in enumerate(order)}
    edges = [(new[i], j, w) for i, j, w in g.edges]
    return RMinorRep(WeightedBipGraph(g.left, g.right, edges, rep.nV - popcount(y)), rep.matroid)


def rep_dual(rep: RMinorRep) -> RMinorRep:
    """Representation of ``f*`` on ``V``.

    Left nodes: ``V`` then ``U`` (the new ``W``).  Right nodes: ``U'``
    carrying ``M*``, then ``V'`` and ``W'`` (free).  Edges: ``v–v'`` and
    ``u–u'`` with weight 0, and ``u–v'`` / ``u–w'`` carrying the weight of
    the original edge ``(v, u)`` / ``(w, u)``.
    """
    g, m = rep.graph, rep.matroid
    nV, nU, nW = rep.nV, g.right, len(g.W)
    edges = [(v, nU + v, Fraction(0)) for v in range(nV)]
    edges += [(nV + u, u, Fraction(0)) for u in range(nU)]
    edges += [(nV + u, nU + i, w) for i, u, w in g.edges]
    mat = direct_sum(dual(m), free(nV + nW))
    return RMinorRep(WeightedBipGraph(nV + nU, nU + nV + nW, edges, nV), mat)


def rep_principal_extension(rep: RMinorRep, w: Sequence[object]) -> RMinorRep:
    """Representation of ``f^w`` with the new element ``p`` at index ``|V|``.

    Each ``v`` hands its edges to a new contracted copy ``v̂`` and gets a
    free private right node ``v°``; ``v̂`` and ``p`` also reach ``v°``
    (``p`` with weight ``w_v``).  The copies not matched into ``U`` are
    exactly ``X`` plus the element ``p`` stands in for.
    """
    g, m = rep.graph, rep.matroid
    nV, nW, nU = rep.nV, len(g.W), g.right
    wv = [ext(x) for x in w]
    if len(wv) != nV:
        raise DomainError("weight vector must have one entry per element of V")
    p = nV
    W0 = nV + 1
    hat = W0 + nW
    edges = []
    for i, u, c in g.edges:
        if i < nV:
            edges.append((hat + i, u, c))
        else:
            edges.append((W0 + i - nV, u, c))
    for v in range(nV):
        edges.append((v, nU + v, Fraction(0)))
        edges.append((hat + v, nU + v, Fraction(0)))
        if wv[v] is not NEG_INF:
            edges.append((p, nU + v, wv[v]))
    return RMinorRep(WeightedBipGraph(hat + nV, nU + nV, edges, nV + 1), direct_sum(m, free(nV)))


def rep_direct_sum(r1: RMinorRep, r2: RMinorRep) -> RMinorRep:
    """Disjoint union; left order ``V1, V2, W1, W2`` and right order ``U1, U2``."""
    g1, g2 = r1.graph, r2.graph
    n1, n2 = r1.nV, r2.nV
    w1, w2 = len(g1.W), len(g2.W)

    def left1(i):
        return i if i < n1 else n1 + n2 + (i - n1)

    def left2(i):
        return n1 + i if i < n2 else n1 + n2 + w1 + (i - n2)

    edges = [(left1(i), j, w) for i, j, w in g1.edges]
    edges += [(left2(i), g1.right + j, w) for i, j, w in g2.edges]
    g = WeightedBipGraph(n1 + n2 + w1 + w2, g1.right + g2.right, edges, n1 + n2)
    return RMinorRep(g, direct_sum(r1.matroid, r2.matroid))


# Operation gadgets -----------------------------------------------------------------


def principal_extension_gadget(f: ValMat, w: Sequence[object]) -> WeightedBipGraph:
    """Identity edges ``u'–u`` plus a new left node ``p`` joined to ``u`` with weight ``w_u``."""
    wv = [ext(x) for x in w]
    edges = [(u, u, Fraction(0)) for u in range(f.n)]
    edges += [(f.n, u, wv[u]) for u in range(f.n) if wv[u] is not NEG_INF]
    return WeightedBipGraph(f.n + 1, f.n, edges)


def principal_extension_by_induction(f: ValMat, w: Sequence[object]) -> ValMat:
    return induce_bipartite(principal_extension_gadget(f, w), f)


def induction_by_extensions(g: WeightedBipGraph, base: ValMat) -> ValMat:
    """Induce by adding one principal extension per left node, then deleting ``U``.

    Left node ``i`` becomes element ``U + i`` with weights ``c_{iu}`` on ``U``
    and ``NEG_INF`` on earlier extension elements.
    """
    if len(g.W):
        raise DomainError("W must be empty")
    f = base
    nU = g.right
    for i in range(g.left):
        w: list[ExtRat] = [NEG_INF] * f.n
        for a, u, c in g.edges:
            if a == i:
                w[u] = c
        f = principal_extension(f, w)
    return delete(f, range(nU))


def union_gadget(n: int) -> WeightedBipGraph:
    """Each ``v`` joined with weight 0 to its copies in ``V1`` and ``V2``."""
    edges = [(v, v, Fraction(0)) for v in range(n)] + [(v, n + v, Fraction(0)) for v in range(n)]
    return WeightedBipGraph(n, 2 * n, edges)


def union_by_induction(f1: ValMat, f2: ValMat) -> ValMat:
    if f1.n != f2.n:
        raise DomainError("union needs a common ground set")
    return induce_bipartite(union_gadget(f1.n), direct_sum_v(f1, f2))


def identity_graph(n: int) -> WeightedBipGraph:
    return WeightedBipGraph(n, n, [(i, i, 0) for i in range(n)])


def brute_induced_table(g: WeightedBipGraph, base: ValMat) -> ValMat:
    """Oracle: assign left nodes of ``X`` to right nodes by explicit permutations."""
    adj = {(i, j): w for i, j, w in g.edges}
    table = {}
    for x in k_subsets(g.left, base.d):
        xs = bits(x)
        best: ExtRat = NEG_INF
        for ys in permutations(range(g.right), len(xs)):
            total = Fraction(0)
            for i, j in zip(xs, ys):
                c = adj.get((i, j))
                if c is None:
                    break
                total += c
            else:
                b = base.value_mask(sum(1 << j for j in ys))
                if b is not NEG_INF and (best is NEG_INF or total + b > best):
                    best = total + b
        if best is not NEG_INF:
            table[x] = best
    return ValMat(g.left, base.d, table)


__all__ = [
    "induce_bipartite",
    "induced_value",
    "RMinorRep",
    "eval_rminor",
    "rminor_function",
    "rminor_via_induction",
    "trim_representation",
    "Network",
    "network_to_bipartite",
    "induce_network",
    "brute_network_induction",
    "bipartite_as_network",
    "rep_delete",
    "rep_contract",
    "rep_dual",
    "rep_principal_extension",
    "rep_direct_sum",
    "principal_extension_gadget",
    "principal_extension_by_induction",
    "induction_by_extensions",
    "union_gadget",
    "union_by_induction",
    "identity_graph",
    "brute_induced_table",
]
