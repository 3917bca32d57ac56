"""Valuated generalized matroids on all subsets of a small ground set.

A :class:`VGM` is a dense map ``mask -> ExtRat`` (absent = ``NEG_INF``).
Besides the axiom check this module provides layers, merge, endowment,
layer-wise induction, weighted matroid rank functions, the doubling lift to a
valuated matroid, and ``R♮``-minor representations with the re-representation
constructions for endowment and merge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from ._bits import bits, compress, full, k_subsets, popcount, require_capacity, submasks, to_mask, to_set
from .errors import DomainError, InvalidFamilyError, ParameterError
from .extrat import NEG_INF, ExtRat, ext
from .induction import _best_by_right_set, induce_bipartite
from .intersection import WeightedBipGraph
from .matroid import Matroid
from .report import Check
from .valfn import ValMat, scaled_integer_table


class VGM:
    """Immutable set function on ``2^{range(n)}``."""

    __slots__ = ("n", "_table")

    def __init__(self, n: int, table: Mapping[int, ExtRat]):
        require_capacity("vgm_dense", n)
        clean = {}
        for mask, v in table.items():
            if v is NEG_INF:
                continue
            if mask < 0 or mask >> n:
                raise DomainError(f"set {sorted(to_set(mask))} outside range({n})")
            clean[mask] = Fraction(v)
        self.n = n
        self._table = clean

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int], ExtRat]) -> "VGM":
        return cls(n, {x: fn(x) for x in range(1 << n)})

    @classmethod
    def from_entries(cls, n: int, entries: Iterable[tuple[Iterable[int], object]]) -> "VGM":
        return cls(n, {to_mask(s, n): ext(v) for s, v in entries})

    @classmethod
    def from_layers(cls, n: int, layers: Iterable[ValMat]) -> "VGM":
        table: dict[int, Fraction] = {}
        for f in layers:
            if f.n != n:
                raise DomainError("layer ground set mismatch")
            table.update(f.table)
        return cls(n, table)

    def value_mask(self, mask: int) -> ExtRat:
        return self._table.get(mask, NEG_INF)

    def value(self, s: Iterable[int] | int) -> ExtRat:
        return self._table.get(to_mask(s, self.n), NEG_INF)

    __call__ = value

    @property
    def table(self) -> dict[int, Fraction]:
        return dict(self._table)

    def dom_masks(self) -> list[int]:
        return sorted(self._table)

    def items(self) -> list[tuple[frozenset[int], Fraction]]:
        return [(to_set(m), self._table[m]) for m in sorted(self._table, key=lambda m: (popcount(m), bits(m)))]

    def shift(self, delta) -> "VGM":
        delta = Fraction(delta)
        return VGM(self.n, {m: v + delta for m, v in self._table.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VGM):
            return NotImplemented
        return self.n == other.n and self._table == other._table

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._table.items())))

    def __repr__(self) -> str:
        return f"<VGM n={self.n} |dom|={len(self._table)}>"


def check_vgm(f: VGM) -> Check:
    """Exhaustive check of both exchange axioms.

    Witnesses: ``("1a", X, Y)`` for the cardinality-increasing exchange and
    ``("1b", X, Y, i)`` for the equal-cardinality one.
    """
    require_capacity("check_vgm", f.n)
    iv = scaled_integer_table(f._table)
    get = iv.get
    keys = sorted(iv, key=popcount)
    for x in keys:
        fx = iv[x]
        cx = popcount(x)
        for y in keys:
            cy = popcount(y)
            if cy <= cx:
                continue
            target = fx + iv[y]
            for j in bits(y & ~x):
                bj = 1 << j
                a = get(x | bj)
                if a is None:
                    continue
                b = get(y ^ bj)
                if b is not None and a + b >= target:
                    break
            else:
                return Check(False, ("1a", to_set(x), to_set(y)))
    for k in range(f.n + 1):
        layer_keys = [x for x in keys if popcount(x) == k]
        for x in layer_keys:
            fx = iv[x]
            for y in layer_keys:
                if x == y:
                    continue
                target = fx + iv[y]
                js = bits(y & ~x)
                for i in bits(x & ~y):
                    xi = x ^ (1 << i)
                    yi = y | (1 << i)
                    for j in js:
                        bj = 1 << j
                        a = get(xi | bj)
                        if a is None:
                            continue
                        b = get(yi ^ bj)
                        if b is not None and a + b >= target:
                            break
                    else:
                        return Check(False, ("1b", to_set(x), to_set(y), i))
    return Check(True)


def layer(f: VGM, k: int) -> ValMat:
    if not 0 <= k <= f.n:
        raise DomainError(f"layer {k} out of range")
    return ValMat(f.n, k, {x: v for x, v in f._table.items() if popcount(x) == k})


def merge(f: VGM, g: VGM) -> VGM:
    """``(f * g)(X) = max_{Y ⊆ X} f(Y) + g(X \\ Y)``."""
    if f.n != g.n:
        raise DomainError("merge needs a common ground set")
    table: dict[int, Fraction] = {}
    for x in range(1 << f.n):
        best: ExtRat = NEG_INF
        for y in submasks(x):
            a = f._table.get(y)
            if a is None:
                continue
            b = g._table.get(x ^ y)
            if b is not None and (best is NEG_INF or a + b > best):
                best = a + b
        if best is not NEG_INF:
            table[x] = best
    return VGM(f.n, table)


def endow(f: VGM, T: Iterable[int] | int) -> VGM:
    """``X ↦ f(X ∪ T) - f(T)`` on ``V \\ T`` (survivors reindexed in order)."""
    t = to_mask(T, f.n)
    ft = f._table.get(t)
    if ft is None:
        raise DomainError("endowment needs f(T) finite")
    table = {compress(x & ~t, t): v - ft for x, v in f._table.items() if x & t == t}
    return VGM(f.n - popcount(t), table)


def contract_vgm(f: VGM, T: Iterable[int] | int) -> VGM:
    """``X ↦ f(X ∪ T)`` on ``V \\ T``."""
    t = to_mask(T, f.n)
    return VGM(f.n - popcount(t), {compress(x & ~t, t): v for x, v in f._table.items() if x & t == t})


def induce_vgm(g: WeightedBipGraph, base: VGM) -> VGM:
    """Best matching covering exactly ``X`` plus ``base`` of its right ends, for every ``X``."""
    if base.n != g.right:
        raise DomainError("base ground set must be the right node set")
    table = {}
    for x in range(1 << g.left):
        best: ExtRat = NEG_INF
        for y, w in _best_by_right_set(g, x).items():
            b = base._table.get(y)
            if b is not None and (best is NEG_INF or w + b > best):
                best = w + b
        if best is not NEG_INF:
            table[x] = best
    return VGM(g.left, table)


def induce_vgm_by_layers(g: WeightedBipGraph, base: VGM) -> VGM:
    """Second route: induce every layer of ``base`` as a valuated matroid."""
    layers = [induce_bipartite(g, layer(base, k)) for k in range(base.n + 1)]
    return VGM.from_layers(g.left, [f for f in layers if f.d <= g.left])


def weighted_rank(m: Matroid, w: Sequence[object]) -> VGM:
    """``r^w(X) = max_{I ⊆ X independent} Σ_{i ∈ I} w_i`` by the greedy algorithm."""
    wv = [Fraction(ext(x)) for x in w]
    if len(wv) != m.n:
        raise DomainError("weight vector must have one entry per element")
    if any(x < 0 for x in wv):
        raise ParameterError("weights must be nonnegative")
    order = sorted(range(m.n), key=lambda e: (-wv[e], e))
    table = {}
    for x in range(1 << m.n):
        used = 0
        total = Fraction(0)
        for e in order:
            if x >> e & 1 and m.is_independent_mask(used | 1 << e):
                used |= 1 << e
                total += wv[e]
        table[x] = total
    return VGM(m.n, table)


def weighted_rank_gadget(m: Matroid, w: Sequence[object]) -> tuple[WeightedBipGraph, VGM]:
    """Each ``v`` joined to ``v'`` (in ``M``) with weight ``w_v`` and to a free copy ``v''`` with weight 0."""
    n = m.n
    edges = [(v, v, ext(w[v])) for v in range(n)] + [(v, n + v, Fraction(0)) for v in range(n)]
    g = WeightedBipGraph(n, 2 * n, edges)
    low = full(n)
    base = VGM(2 * n, {x: Fraction(0) for x in range(1 << 2 * n) if m.is_independent_mask(x & low)})
    return g, base


def weighted_rank_by_induction(m: Matroid, w: Sequence[object]) -> VGM:
    if any(Fraction(ext(x)) < 0 for x in w):
        raise ParameterError("weights must be nonnegative")
    g, base = weighted_rank_gadget(m, w)
    return induce_vgm(g, base)


def rank_function(m: Matroid) -> VGM:
    return VGM(m.n, {x: Fraction(m.rank_mask(x)) for x in range(1 << m.n)})


# Doubling lift ----------------------------------------------------------------------


def vgm_to_valmat(f: VGM) -> ValMat:
    """``g_f(X) = f(X ∩ V1)`` on ``V1 ⊔ V2`` (``V2`` = ``n..2n-1``), rank ``n``."""
    n = f.n
    low = full(n)
    table = {x: f._table[x & low] for x in k_subsets(2 * n, n) if (x & low) in f._table}
    return ValMat(2 * n, n, table)


def recover(g: ValMat, X: Iterable[int] | int, pad: Iterable[int] | int | None = None) -> ExtRat:
    """``f(X) = g(X ∪ Y)`` for a padding ``Y ⊆ V2`` of size ``n - |X|`` (default: the lowest indices)."""
    n = g.n // 2
    x = to_mask(X, n)
    if pad is None:
        y = full(n - popcount(x)) << n
    else:
        y = to_mask(pad, 2 * n)
        if y & full(n) or popcount(y) != n - popcount(x):
            raise DomainError("padding must be an (n-|X|)-subset of the second copy")
    return g.value_mask(x | y)


# Generalized matroids and R♮-minor representations -----------------------------------


class GeneralizedMatroid:
    """Explicit set family whose indicator (0 / ``NEG_INF``) satisfies both exchange axioms."""

    def __init__(self, n: int, sets: Iterable[Iterable[int] | int], _checked: bool = False):
        fam = frozenset(to_mask(s, n) for s in sets)
        if not fam:
            raise InvalidFamilyError("a generalized matroid has at least one set")
        if not _checked:
            chk = check_vgm(VGM(n, {x: Fraction(0) for x in fam}))
            if not chk:
                raise InvalidFamilyError(f"family fails the exchange axioms: {chk.witness}")
        self.n = n
        self.sets = fam

    @classmethod
    def independent_sets(cls, m: Matroid) -> "GeneralizedMatroid":
        return cls(m.n, [x for x in range(1 << m.n) if m.is_independent_mask(x)], True)

    def as_vgm(self) -> VGM:
        return VGM(self.n, {x: Fraction(0) for x in self.sets})

    def direct_sum(self, other: "GeneralizedMatroid") -> "GeneralizedMatroid":
        # direct sums of generalized matroids are generalized matroids
        return GeneralizedMatroid(self.n + other.n, [a | b << self.n for a in self.sets for b in other.sets], True)


@dataclass(frozen=True)
class RnatRep:
    """Graph on ``V ∪ W`` (``W`` from ``graph.w_start``), generalized matroid on the right nodes."""

    graph: WeightedBipGraph
    base: GeneralizedMatroid

    def __post_init__(self):
        if self.base.n != self.graph.right:
            raise DomainError("base ground set must be the right node set")

    @property
    def nV(self) -> int:
        return self.graph.w_start


def rnat_minor_eval(rep: RnatRep, X: Iterable[int] | int) -> ExtRat:
    x = to_mask(X, rep.nV) | rep.graph.W_mask
    best: ExtRat = NEG_INF
    for y, w in _best_by_right_set(rep.graph, x).items():
        if y in rep.base.sets and (best is NEG_INF or w > best):
            best = w
    return best


def rnat_minor_function(rep: RnatRep) -> VGM:
    return VGM(rep.nV, {x: rnat_minor_eval(rep, x) for x in range(1 << rep.nV)})


def endow_rep(rep: RnatRep, T: Iterable[int]) -> RnatRep:
    """Represent ``endow(f, T)``: contract ``T`` too and shift every edge at ``T ∪ W`` by ``f(T)/|T ∪ W|``."""
    g = rep.graph
    t = to_mask(T, rep.nV)
    ft = rnat_minor_eval(rep, t)
    if ft is NEG_INF:
        raise DomainError("endowment needs f(T) finite")
    tw = t | g.W_mask
    k = popcount(tw)
    delta = Fraction(ft) / k if k else Fraction(0)
    if not k and ft != 0:
        raise DomainError("f(∅) must vanish when nothing is contracted")
    order = [i for i in range(rep.nV) if not t >> i & 1] + list(bits(t)) + list(g.W)
    new = {old: pos for pos, old in enumerate(order)}
    edges = [(new[i], j, w - delta if tw >> i & 1 else w) for i, j, w in g.edges]
    return RnatRep(WeightedBipGraph(g.left, g.right, edges, rep.nV - popcount(t)), rep.base)


def merge_rep(r1: RnatRep, r2: RnatRep) -> RnatRep:
    """Glue along the common ``V``: left ``V, W1, W2``; right ``U1, U2``; base ``I1 ⊕ I2``."""
    if r1.nV != r2.nV:
        raise DomainError("merge needs a common ground set")
    g1, g2 = r1.graph, r2.graph
    n, w1 = r1.nV, len(g1.W)
    edges = list(g1.edges)
    for i, j, w in g2.edges:
        i2 = i if i < n else n + w1 + (i - n)
        edges.append((i2, g1.right + j, w))
    g = WeightedBipGraph(n + w1 + len(g2.W), g1.right + g2.right, edges, n)
    return RnatRep(g, r1.base.direct_sum(r2.base))


__all__ = [
    "VGM",
    "check_vgm",
    "layer",
    "merge",
    "endow",
    "contract_vgm",
    "induce_vgm",
    "induce_vgm_by_layers",
    "weighted_rank",
    "weighted_rank_gadget",
    "weighted_rank_by_induction",
    "rank_function",
    "vgm_to_valmat",
    "recover",
    "GeneralizedMatroid",
    "RnatRep",
    "rnat_minor_eval",
    "rnat_minor_function",
    "endow_rep",
    "merge_rep",
]
