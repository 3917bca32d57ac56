"""Unvaluated matroids given by rank oracles.

Every matroid lives on ``range(n)``.  Backends either store data (explicit
bases, uniform, partition, sparse paving) or derive their rank from other
matroids (dual, direct sum, union, minor, truncation).  Rank queries are
memoised per instance; values are immutable after construction.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from ._bits import (
    bits,
    capacity,
    expand,
    full,
    k_subsets,
    popcount,
    require_capacity,
    submasks,
    to_mask,
    to_set,
)
from .errors import DomainError, InvalidFamilyError
from .report import Check


class Matroid:
    """Base class: subclasses implement :meth:`_rank` on bitmasks."""

    kind = "abstract"

    def __init__(self, n: int):
        if n < 0:
            raise DomainError("ground set size must be nonnegative")
        self.n = n
        self._cache: dict[int, int] = {}
        self._bases: tuple[int, ...] | None = None

    def _rank(self, mask: int) -> int:
        raise NotImplementedError

    def rank_mask(self, mask: int) -> int:
        r = self._cache.get(mask)
        if r is None:
            r = self._rank(mask)
            self._cache[mask] = r
        return r

    @property
    def full_mask(self) -> int:
        return full(self.n)

    @property
    def rank(self) -> int:
        return self.rank_mask(self.full_mask)

    def rank_of(self, s: Iterable[int] | int) -> int:
        return self.rank_mask(to_mask(s, self.n))

    def is_independent_mask(self, mask: int) -> bool:
        return self.rank_mask(mask) == popcount(mask)

    def is_basis_mask(self, mask: int) -> bool:
        return popcount(mask) == self.rank and self.is_independent_mask(mask)

    def bases_masks(self) -> tuple[int, ...]:
        """All bases as sorted masks (enumerated through the rank oracle)."""
        if self._bases is None:
            require_capacity("matroid_enum", self.n)
            r = self.rank
            self._bases = tuple(sorted(b for b in k_subsets(self.n, r) if self.rank_mask(b) == r))
        return self._bases

    def bases(self) -> list[frozenset[int]]:
        return [to_set(b) for b in self.bases_masks()]

    def closure_mask(self, mask: int) -> int:
        r = self.rank_mask(mask)
        out = mask
        for x in range(self.n):
            if not mask >> x & 1 and self.rank_mask(mask | 1 << x) == r:
                out |= 1 << x
        return out

    def is_flat_mask(self, mask: int) -> bool:
        return self.closure_mask(mask) == mask

    def loops_mask(self) -> int:
        return sum(1 << x for x in range(self.n) if self.rank_mask(1 << x) == 0)

    def same_as(self, other: "Matroid") -> bool:
        """Equality of basis families (ground sizes must agree)."""
        return self.n == other.n and self.bases_masks() == other.bases_masks()

    def __repr__(self) -> str:
        return f"<{type(self).__name__} n={self.n} rank={self.rank}>"


class ExplicitMatroid(Matroid):
    """Matroid stored as its family of bases."""

    kind = "explicit"

    def __init__(self, n: int, bases: Iterable[Iterable[int] | int]):
        super().__init__(n)
        masks = sorted({to_mask(b, n) for b in bases})
        if not masks:
            raise InvalidFamilyError("basis family must be nonempty")
        sizes = {popcount(b) for b in masks}
        if len(sizes) != 1:
            raise InvalidFamilyError("bases must be equicardinal")
        self._bases = tuple(masks)
        self._r = sizes.pop()

    def _rank(self, mask: int) -> int:
        if mask == self.full_mask:
            return self._r
        return max(popcount(mask & b) for b in self._bases)


class UniformMatroid(Matroid):
    kind = "uniform"

    def __init__(self, n: int, r: int):
        if not 0 <= r <= n:
            raise DomainError(f"uniform rank {r} out of range for n={n}")
        super().__init__(n)
        self.r = r

    def _rank(self, mask: int) -> int:
        return min(popcount(mask), self.r)


class PartitionMatroid(Matroid):
    """At most ``capacities[k]`` elements from ``blocks[k]``; unlisted elements are loops."""

    kind = "partition"

    def __init__(self, n: int, blocks: Sequence[Iterable[int]], capacities: Sequence[int]):
        super().__init__(n)
        if len(blocks) != len(capacities):
            raise DomainError("one capacity per block required")
        self.block_masks = tuple(to_mask(b, n) for b in blocks)
        seen = 0
        for b in self.block_masks:
            if b & seen:
                raise DomainError("partition blocks must be disjoint")
            seen |= b
        if any(c < 0 for c in capacities):
            raise DomainError("capacities must be nonnegative")
        self.capacities = tuple(int(c) for c in capacities)

    def _rank(self, mask: int) -> int:
        return sum(min(popcount(mask & b), c) for b, c in zip(self.block_masks, self.capacities))


class SparsePavingMatroid(Matroid):
    """Rank-``d`` matroid whose bases are all ``d``-sets except the listed circuits."""

    kind = "sparse_paving"

    def __init__(self, n: int, d: int, circuits: Iterable[Iterable[int] | int]):
        if not 0 <= d <= n:
            raise DomainError(f"rank {d} out of range for n={n}")
        super().__init__(n)
        self.d = d
        cs = sorted({to_mask(c, n) for c in circuits})
        for c in cs:
            if popcount(c) != d:
                raise InvalidFamilyError(f"circuit {sorted(to_set(c))} does not have size {d}")
        for a, b in combinations(cs, 2):
            if popcount(a & b) > d - 2:
                raise InvalidFamilyError(
                    f"circuits {sorted(to_set(a))} and {sorted(to_set(b))} meet in more than d-2 elements"
                )
        if n == d and cs:
            raise InvalidFamilyError("the only d-subset is a circuit: no bases remain")
        self.circuit_masks = tuple(cs)
        self._circuits = frozenset(cs)

    def _rank(self, mask: int) -> int:
        k = popcount(mask)
        if k < self.d:
            return k
        if k == self.d:
            return self.d - 1 if mask in self._circuits else self.d
        return self.d


class DualMatroid(Matroid):
    kind = "dual"

    def __init__(self, m: Matroid):
        super().__init__(m.n)
        self.m = m

    def _rank(self, mask: int) -> int:
        m = self.m
        return popcount(mask) - m.rank + m.rank_mask(m.full_mask & ~mask)


class DirectSumMatroid(Matroid):
    """``m1`` on ``0..n1-1`` followed by ``m2`` on ``n1..n1+n2-1``."""

    kind = "direct_sum"

    def __init__(self, m1: Matroid, m2: Matroid):
        super().__init__(m1.n + m2.n)
        self.m1, self.m2 = m1, m2

    def _rank(self, mask: int) -> int:
        n1 = self.m1.n
        return self.m1.rank_mask(mask & full(n1)) + self.m2.rank_mask(mask >> n1)


class UnionMatroid(Matroid):
    """Matroid union on a common ground set via the min-formula over ``Z ⊆ X``."""

    kind = "union"

    def __init__(self, m1: Matroid, m2: Matroid):
        if m1.n != m2.n:
            raise DomainError("union needs a common ground set")
        super().__init__(m1.n)
        self.m1, self.m2 = m1, m2

    def _rank(self, mask: int) -> int:
        require_capacity("matroid_enum", popcount(mask))
        size = popcount(mask)
        best = size
        for z in submasks(mask):
            v = self.m1.rank_mask(z) + self.m2.rank_mask(z) + size - popcount(z)
            if v < best:
                best = v
        return best


class MinorMatroid(Matroid):
    """``m`` with ``delete`` removed and ``contract`` contracted; survivors reindexed in order."""

    kind = "minor"

    def __init__(self, m: Matroid, delete: int, contract: int):
        if delete & contract:
            raise DomainError("delete and contract sets must be disjoint")
        removed = delete | contract
        super().__init__(m.n - popcount(removed))
        self.m = m
        self.removed = removed
        self.contract = contract
        self._rc = m.rank_mask(contract)

    def original(self, mask: int) -> int:
        return expand(mask, self.removed)

    def _rank(self, mask: int) -> int:
        return self.m.rank_mask(expand(mask, self.removed) | self.contract) - self._rc


class TruncationMatroid(Matroid):
    kind = "truncation"

    def __init__(self, m: Matroid, k: int):
        if k < 0:
            raise DomainError("truncation rank must be nonnegative")
        super().__init__(m.n)
        self.m = m
        self.k = k

    def _rank(self, mask: int) -> int:
        return min(self.m.rank_mask(mask), self.k)


# Constructors -----------------------------------------------------------------


def explicit(n: int, bases: Iterable[Iterable[int] | int]) -> ExplicitMatroid:
    return ExplicitMatroid(n, bases)


def uniform(r: int, n: int) -> UniformMatroid:
    return UniformMatroid(n, r)


def free(n: int) -> UniformMatroid:
    return UniformMatroid(n, n)


def partition(n: int, blocks: Sequence[Iterable[int]], capacities: Sequence[int]) -> PartitionMatroid:
    return PartitionMatroid(n, blocks, capacities)


def sparse_paving_from_circuits(n: int, d: int, circuits: Iterable[Iterable[int]]) -> SparsePavingMatroid:
    return SparsePavingMatroid(n, d, circuits)


def to_explicit(m: Matroid) -> ExplicitMatroid:
    if isinstance(m, ExplicitMatroid):
        return m
    return ExplicitMatroid(m.n, m.bases_masks())


# Queries and operations -------------------------------------------------------


def rank(m: Matroid, s: Iterable[int]) -> int:
    return m.rank_of(s)


def closure(m: Matroid, s: Iterable[int]) -> frozenset[int]:
    return to_set(m.closure_mask(to_mask(s, m.n)))


def dual(m: Matroid) -> Matroid:
    if isinstance(m, DualMatroid):
        return m.m
    return DualMatroid(m)


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    return DirectSumMatroid(m1, m2)


def union(m1: Matroid, m2: Matroid) -> Matroid:
    return UnionMatroid(m1, m2)


def minor(m: Matroid, delete: Iterable[int] = (), contract: Iterable[int] = ()) -> Matroid:
    d = to_mask(delete, m.n)
    c = to_mask(contract, m.n)
    if not m.is_independent_mask(c):
        raise DomainError("contraction set must be independent")
    return MinorMatroid(m, d, c)


def restriction(m: Matroid, keep: Iterable[int]) -> Matroid:
    return MinorMatroid(m, m.full_mask & ~to_mask(keep, m.n), 0)


def truncation(m: Matroid, k: int) -> Matroid:
    return TruncationMatroid(m, k)


def check_basis_exchange(m: Matroid | tuple[int, Iterable[Iterable[int]]]) -> Check:
    """Exhaustive basis-exchange check.

    Accepts a matroid or a raw ``(n, family)`` pair so that invalid families can
    be examined without constructing a matroid from them.
    """
    if isinstance(m, Matroid):
        n, family = m.n, list(m.bases_masks())
    else:
        n, raw = m
        family = sorted({to_mask(b, n) for b in raw})
    require_capacity("basis_exchange", n)
    if not family:
        return Check(False, None, "empty basis family")
    if len({popcount(b) for b in family}) != 1:
        return Check(False, None, "bases are not equicardinal")
    fam = set(family)
    for x in family:
        for y in family:
            if x == y:
                continue
            ys = bits(y & ~x)
            for i in bits(x & ~y):
                xi = x & ~(1 << i)
                if not any((xi | 1 << j) in fam for j in ys):
                    return Check(False, (to_set(x), to_set(y), i))
    return Check(True)


def brute_union_rank(m1: Matroid, m2: Matroid, s: Iterable[int] | int) -> int:
    """Union rank as ``max |(B1 ∪ B2) ∩ X|`` over basis pairs (oracle for the min-formula)."""
    mask = to_mask(s, m1.n)
    return max(popcount((b1 | b2) & mask) for b1 in m1.bases_masks() for b2 in m2.bases_masks())


__all__ = [
    "Matroid",
    "ExplicitMatroid",
    "UniformMatroid",
    "PartitionMatroid",
    "SparsePavingMatroid",
    "DualMatroid",
    "DirectSumMatroid",
    "UnionMatroid",
    "MinorMatroid",
    "TruncationMatroid",
    "explicit",
    "uniform",
    "free",
    "partition",
    "sparse_paving_from_circuits",
    "to_explicit",
    "rank",
    "closure",
    "dual",
    "direct_sum",
    "union",
    "minor",
    "restriction",
    "truncation",
    "check_basis_exchange",
    "brute_union_rank",
    "capacity",
]
