"""The family of rank-4 functions on paired elements, its matroids and ``h♮``.

Elements ``0..2n-1`` come in pairs ``P_i = {2i-2, 2i-1}`` for 1-based
``i``.  ``H`` holds the unions ``P_i ∪ P_j`` with ``i·j`` even; ``X* = P_1 ∪ P_2``.
"""

from __future__ import annotations

from random import Random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping

from ._bits import k_subsets, popcount
from .errors import ParameterError
from .extrat import NEG_INF, ExtRat, ext
from .matroid import SparsePavingMatroid
from .valfn import ValMat
from .vgm import VGM

X_STAR = 0b1111


def pair_mask(i: int) -> int:
    return 3 << 2 * (i - 1)


def H_family(n: int) -> list[int]:
    """Masks of ``P_i ∪ P_j`` with ``i < j`` and ``i·j`` even, ordered by ``(i, j)``."""
    return [pair_mask(i) | pair_mask(j) for i, j in combinations(range(1, n + 1), 2) if i * j % 2 == 0]


def H_index(n: int) -> dict[int, tuple[int, int]]:
    return {pair_mask(i) | pair_mask(j): (i, j) for i, j in combinations(range(1, n + 1), 2) if i * j % 2 == 0}


@dataclass(frozen=True)
class FamilyParams:
    """``values`` maps each member of ``H`` other than ``X*`` to a negative rational or ``NEG_INF``."""

    n: int
    values: Mapping[int, ExtRat] = field(hash=False)
    star_value: Fraction = Fraction(-1, 2)

    def __post_init__(self):
        if self.n < 2:
            raise ParameterError("n must be at least 2")
        star = ext(self.star_value)
        if star is NEG_INF or not star < 0:
            raise ParameterError("the value at X* must be a negative rational")
        object.__setattr__(self, "star_value", star)
        H = set(H_family(self.n))
        vals = {}
        for mask, v in self.values.items():
            if mask not in H or mask == X_STAR:
                raise ParameterError("values must be indexed by members of H other than X*")
            v = ext(v)
            if v is not NEG_INF and not v < star:
                raise ParameterError("X* must carry the unique largest value on H, and values must be negative")
            vals[mask] = v
        missing = H - set(vals) - {X_STAR}
        if missing:
            raise ParameterError(f"{len(missing)} members of H have no value")
        object.__setattr__(self, "values", vals)

    @classmethod
    def constant(cls, n: int, value=-1, star_value=Fraction(-1, 2)) -> "FamilyParams":
        return cls(n, {h: ext(value) for h in H_family(n) if h != X_STAR}, star_value)

    @classmethod
    def random(cls, n: int, rng: Random, neg_inf_rate: float = 0.0, lower: Fraction = Fraction(-3)) -> "FamilyParams":
        """Random values with denominators at most 1000, strictly below a random star value."""
        den = 1000
        lo = int(lower * den)
        star = Fraction(rng.randint(lo + 2, -1), den)
        vals = {}
        for h in H_family(n):
            if h == X_STAR:
                continue
            if rng.random() < neg_inf_rate:
                vals[h] = NEG_INF
            else:
                vals[h] = Fraction(rng.randint(lo, int(star * den) - 1), den)
        return cls(n, vals, star)


def make_Fn(p: FamilyParams) -> ValMat:
    """0 off ``H``, the given values on ``H \\ {X*}`` and ``star_value`` at ``X*``."""
    H = set(H_family(p.n))
    table: dict[int, ExtRat] = {}
    for x in k_subsets(2 * p.n, 4):
        if x == X_STAR:
            table[x] = p.star_value
        elif x in H:
            table[x] = p.values[x]
        else:
            table[x] = Fraction(0)
    return ValMat(2 * p.n, 4, table)


def B0_matroid(n: int) -> SparsePavingMatroid:
    """All 4-sets outside ``H``; for ``n = 2`` there are none."""
    if n < 2:
        raise ParameterError("n must be at least 2")
    return SparsePavingMatroid(2 * n, 4, H_family(n))


def B1_matroid(n: int, star_included: bool = True) -> SparsePavingMatroid:
    """``B0 ∪ {X*}`` when ``star_included``, plain ``B0`` otherwise."""
    if not star_included:
        return B0_matroid(n)
    if n < 2:
        raise ParameterError("n must be at least 2")
    return SparsePavingMatroid(2 * n, 4, [h for h in H_family(n) if h != X_STAR])


def make_h_natural(p: FamilyParams) -> VGM:
    """``|X|`` below 4, ``4 + h(X)`` on 4-sets, 4 above; ``H`` values must lie in ``(-1, 0)``."""
    for v in list(p.values.values()) + [p.star_value]:
        if v is NEG_INF or not -1 < v < 0:
            raise ParameterError("h♮ needs every value on H in the open interval (-1, 0)")
    h = make_Fn(p)
    table = {}
    for x in range(1 << 2 * p.n):
        k = popcount(x)
        if k < 4:
            table[x] = Fraction(k)
        elif k == 4:
            table[x] = 4 + h.value_mask(x)
        else:
            table[x] = Fraction(4)
    return VGM(2 * p.n, table)


def classify_exchange(n: int, X: int, Y: int) -> str:
    """Which case of the soundness argument a pair of 4-sets falls into."""
    H = set(H_family(n))
    a, b = X in H, Y in H
    if not a and not b:
        return "B0-B0"
    if a and b:
        return "H-H"
    return "B0-H"


def check_H_sparse(n: int) -> bool:
    return all(popcount(a & b) <= 2 for a, b in combinations(H_family(n), 2))


__all__ = [
    "X_STAR",
    "pair_mask",
    "H_family",
    "H_index",
    "FamilyParams",
    "make_Fn",
    "B0_matroid",
    "B1_matroid",
    "make_h_natural",
    "classify_exchange",
    "check_H_sparse",
]
