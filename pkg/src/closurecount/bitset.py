"""Element sets as int bitmasks.

Throughout the package a set of poset elements is an ``int`` whose bit i is
set iff element i is a member. Python ints are arbitrary precision, so the
same representation works for every supported size, and the usual operators
(&, |, ~ masked by the universe, ==) are the set operations.
"""

from __future__ import annotations

from typing import Iterable, Iterator

ElementSet = int


def bits(mask: ElementSet) -> Iterator[int]:
    """Yield the members of `mask` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements: Iterable[int]) -> ElementSet:
    """Bitmask with exactly the given elements set."""
    out = 0
    for x in elements:
        out |= 1 << x
    return out


def size(mask: ElementSet) -> int:
    """Number of members."""
    return mask.bit_count()
