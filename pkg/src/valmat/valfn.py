"""Valuated matroids as sparse exact set functions on ``d``-subsets.

A :class:`ValMat` maps ``d``-subsets of ``range(n)`` to rationals; absent keys
mean ``NEG_INF``.  Operations that remove elements reindex the survivors in
increasing order, mirroring :mod:`valmat.matroid`.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from ._bits import bits, compress, full, k_subsets, popcount, require_capacity, to_mask, to_set
from .errors import DomainError
from .extrat import NEG_INF, ExtRat, ext
from .matroid import ExplicitMatroid, Matroid
from .report import Check


class ValMat:
    """Immutable valuated set function on the ``d``-subsets of ``range(n)``."""

    __slots__ = ("n", "d", "_table", "_hash")

    def __init__(self, n: int, d: int, table: Mapping[int, ExtRat] | None = None):
        if n < 0 or d < 0:
            raise DomainError("n and d must be nonnegative")
        self.n = n
        self.d = d
        clean: dict[int, Fraction] = {}
        for mask, v in (table or {}).items():
            if v is NEG_INF:
                continue
            if mask >> n or popcount(mask) != d:
                raise DomainError(f"key {sorted(to_set(mask))} is not a {d}-subset of range({n})")
            clean[mask] = Fraction(v)
        self._table = clean
        self._hash: int | None = None

    @classmethod
    def from_entries(cls, n: int, d: int, entries: Iterable[tuple[Iterable[int], object]]) -> "ValMat":
        table: dict[int, ExtRat] = {}
        for s, v in entries:
            mask = to_mask(s, n)
            if mask in table:
                raise DomainError(f"duplicate entry for {sorted(s)}")
            table[mask] = ext(v)
        return cls(n, d, table)

    @classmethod
    def trivial(cls, m: Matroid) -> "ValMat":
        """The trivially valuated matroid: 0 on bases, ``NEG_INF`` elsewhere."""
        return cls(m.n, m.rank, {b: Fraction(0) for b in m.bases_masks()})

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

    def dom(self) -> list[frozenset[int]]:
        return [to_set(m) for m in sorted(self._table, key=bits)]

    def is_neg_inf(self) -> bool:
        return not self._table

    def items(self) -> list[tuple[frozenset[int], Fraction]]:
        return [(to_set(m), self._table[m]) for m in sorted(self._table, key=bits)]

    def dom_matroid(self) -> ExplicitMatroid:
        return ExplicitMatroid(self.n, self._table)

    def relabel(self, mapping: Sequence[int], n: int) -> "ValMat":
        """Move element ``i`` to ``mapping[i]`` inside a ground set of size ``n``."""
        table = {}
        for mask, v in self._table.items():
            out = 0
            for e in bits(mask):
                out |= 1 << mapping[e]
            table[out] = v
        return ValMat(n, self.d, table)

    def shift(self, delta) -> "ValMat":
        delta = Fraction(delta)
        return ValMat(self.n, self.d, {m: v + delta for m, v in self._table.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ValMat):
            return NotImplemented
        return self.n == other.n and self.d == other.d and self._table == other._table

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.d, frozenset(self._table.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"<ValMat n={self.n} d={self.d} |dom|={len(self._table)}>"


# Axiom check ------------------------------------------------------------------


def scaled_integer_table(table: Mapping[int, Fraction]) -> dict[int, int]:
    """Multiply by the common denominator so inner loops run on ints."""
    den = 1
    for v in table.values():
        den = lcm(den, v.denominator)
    return {m: int(v * den) for m, v in table.items()}


def check_valuated(f: ValMat) -> Check:
    """Exhaustive exchange check; witness ``(X, Y, i)`` on failure.

    For all ``X, Y`` with finite values and ``i ∈ X \\ Y`` some ``j ∈ Y \\ X``
    must satisfy ``f(X) + f(Y) <= f(X - i + j) + f(Y + i - j)``.
    """
    require_capacity("check_valuated", f.n)
    iv = scaled_integer_table(f._table)
    keys = sorted(iv)
    get = iv.get
    for x in keys:
        fx = iv[x]
        for y in keys:
            if x == y:
                continue
            target = fx + iv[y]
            js = bits(y & ~x)
            for i in bits(x & ~y):
                bi = 1 << i
                xi = x ^ bi
                yi = y | bi
                for j in js:
                    bj = 1 << j
                    a = get(xi | bj)
                    if a is None:
                        continue
                    b = get(yi ^ bj)
                    if b is not None and a + b >= target:
                        break
                else:
                    return Check(False, (to_set(x), to_set(y), i))
    return Check(True)


# Operations -------------------------------------------------------------------


def neg_inf_function(n: int, d: int) -> ValMat:
    return ValMat(n, d, {})


def free_valmat(k: int) -> ValMat:
    """Value 0 on the full ground set ``range(k)`` only."""
    return ValMat(k, k, {full(k): Fraction(0)})


def delete(f: ValMat, Y: Iterable[int]) -> ValMat:
    """Restriction to ``d``-subsets avoiding ``Y``; all ``NEG_INF`` if ``V \\ Y`` is not spanning."""
    y = to_mask(Y, f.n)
    n2 = f.n - popcount(y)
    table = {compress(x, y): v for x, v in f._table.items() if not x & y}
    return ValMat(n2, f.d, table)


def contract(f: ValMat, Y: Iterable[int]) -> ValMat:
    """``(f/Y)(X) = f(X ∪ Y)``; all ``NEG_INF`` when ``Y`` is dependent in ``dom(f)``.

    When ``|Y| > d`` the result is the all-``NEG_INF`` function of rank 0.
    """
    y = to_mask(Y, f.n)
    k = popcount(y)
    n2 = f.n - k
    if k > f.d:
        return ValMat(n2, 0, {})
    table = {compress(x & ~y, y): v for x, v in f._table.items() if x & y == y}
    return ValMat(n2, f.d - k, table)


def dual_v(f: ValMat) -> ValMat:
    fm = full(f.n)
    return ValMat(f.n, f.n - f.d, {fm & ~x: v for x, v in f._table.items()})


def truncate(f: ValMat) -> ValMat:
    """``f1(X) = max_{v ∉ X} f(X ∪ v)`` on ``(d-1)``-subsets."""
    if f.d < 1:
        raise DomainError("truncation needs rank at least 1")
    table: dict[int, Fraction] = {}
    for x, v in f._table.items():
        for e in bits(x):
            key = x ^ (1 << e)
            old = table.get(key)
            if old is None or v > old:
                table[key] = v
    return ValMat(f.n, f.d - 1, table)


def principal_extension(f: ValMat, w: Sequence[object]) -> ValMat:
    """Add element ``p = n``: ``f^w(X ∪ p) = max_{v ∉ X} f(X ∪ v) + w_v``."""
    if len(w) != f.n:
        raise DomainError("weight vector must have one entry per element")
    wv = [ext(x) for x in w]
    p = 1 << f.n
    table: dict[int, Fraction] = dict(f._table)
    for x, v in f._table.items():
        for e in bits(x):
            if wv[e] is NEG_INF:
                continue
            key = (x ^ (1 << e)) | p
            cand = v + wv[e]
            old = table.get(key)
            if old is None or cand > old:
                table[key] = cand
    return ValMat(f.n + 1, f.d, table)


def direct_sum_v(f1: ValMat, f2: ValMat) -> ValMat:
    """``f1`` on ``0..n1-1`` and ``f2`` shifted to ``n1..``; values add."""
    table = {}
    for a, va in f1._table.items():
        for b, vb in f2._table.items():
            table[a | b << f1.n] = va + vb
    return ValMat(f1.n + f2.n, f1.d + f2.d, table)


def union_v(f1: ValMat, f2: ValMat) -> ValMat:
    """``(f1 ∨ f2)(X) = max{f1(Y) + f2(X \\ Y)}`` on a common ground set."""
    if f1.n != f2.n:
        raise DomainError("union needs a common ground set; relabel first")
    table: dict[int, Fraction] = {}
    for a, va in f1._table.items():
        for b, vb in f2._table.items():
            if a & b:
                continue
            key = a | b
            cand = va + vb
            old = table.get(key)
            if old is None or cand > old:
                table[key] = cand
    return ValMat(f1.n, f1.d + f2.d, table)


def dom_rank(f: ValMat, Y: Iterable[int] | int) -> int:
    """Rank of ``Y`` in the matroid ``dom(f)`` (``-1`` if the domain is empty)."""
    y = to_mask(Y, f.n)
    if not f._table:
        return -1
    return max(popcount(x & y) for x in f._table)


def layer_table(n: int, d: int, fn) -> ValMat:
    """Tabulate a callable on all ``d``-subsets (utility for oracles)."""
    return ValMat(n, d, {m: fn(m) for m in k_subsets(n, d)})


__all__ = [
    "ValMat",
    "check_valuated",
    "neg_inf_function",
    "free_valmat",
    "delete",
    "contract",
    "dual_v",
    "truncate",
    "principal_extension",
    "direct_sum_v",
    "union_v",
    "dom_rank",
    "layer_table",
    "scaled_integer_table",
]
