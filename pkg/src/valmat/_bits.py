"""Bitmask encoding of element sets and the capacity registry.

Sets of ground elements are stored internally as Python ints (bit ``i`` set
iff element ``i`` is a member).  Public functions accept any iterable of ints
and return ``frozenset`` values.
"""

from __future__ import annotations

import os
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .errors import CapacityError, DomainError

_DEFAULT_CAPACITY = {
    "matroid_enum": 20,
    "basis_exchange": 14,
    "check_valuated": 14,
    "check_vgm": 12,
    "brute_matching": 8,
    "rado": 14,
    "rado_pairs": 10,
    "tight_set": 10,
    "robust": 12,
    "vgm_dense": 16,
    "expansion_terms": 10**6,
}


def capacity(name: str) -> int:
    """Bound for an exhaustive routine; ``VALMAT_CAPACITY`` may override it.

    The variable holds comma separated ``key=value`` pairs, for example
    ``VALMAT_CAPACITY="check_vgm=14,rado=16"``.
    """
    raw = os.environ.get("VALMAT_CAPACITY", "")
    for item in raw.split(","):
        if "=" in item:
            key, value = item.split("=", 1)
            if key.strip() == name:
                return int(value)
    return _DEFAULT_CAPACITY[name]


def require_capacity(name: str, size: int) -> None:
    bound = capacity(name)
    if size > bound:
        raise CapacityError(f"{name}: size {size} exceeds capacity {bound}")


def to_mask(elements: Iterable[int] | int, n: int | None = None) -> int:
    if isinstance(elements, int):
        mask = elements
        if mask < 0 or (n is not None and mask >> n):
            raise DomainError(f"mask {mask} outside ground set of size {n}")
        return mask
    mask = 0
    for e in elements:
        if not isinstance(e, int) or e < 0 or (n is not None and e >= n):
            raise DomainError(f"element {e!r} outside ground set of size {n}")
        mask |= 1 << e
    return mask


@lru_cache(maxsize=1 << 16)
def bits(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def to_set(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full(n: int) -> int:
    return (1 << n) - 1


def k_subsets(ground: int | Iterable[int], k: int) -> Iterator[int]:
    """All ``k``-subsets of ``range(ground)`` (or of the given elements), as masks."""
    elems = range(ground) if isinstance(ground, int) else sorted(ground)
    if k < 0:
        return
    for combo in combinations(elems, k):
        m = 0
        for e in combo:
            m |= 1 << e
        yield m


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def remap(mask: int, mapping: dict[int, int]) -> int:
    out = 0
    for e in bits(mask):
        out |= 1 << mapping[e]
    return out


def compress(mask: int, removed: int) -> int:
    """Reindex ``mask`` after deleting the elements of ``removed`` (order kept)."""
    out = 0
    pos = 0
    i = 0
    while mask >> i:
        if removed >> i & 1:
            i += 1
            continue
        if mask >> i & 1:
            out |= 1 << pos
        pos += 1
        i += 1
    return out


def expand(mask: int, removed: int) -> int:
    """Inverse of :func:`compress`: map a reindexed mask back to original ids."""
    out = 0
    pos = 0
    i = 0
    while mask >> pos:
        if removed >> i & 1:
            i += 1
            continue
        if mask >> pos & 1:
            out |= 1 << i
        pos += 1
        i += 1
    return out
