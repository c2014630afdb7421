"""Closure operators and closure systems on a finite poset.

A closure operator is an extensive, isotone, idempotent self-map; a closure
system is a subset C such that every element has a least majorizer inside C.
The two determine each other: the systems are exactly the fixpoint sets of
the operators. This module holds the definitional checks, the conversion in
both directions, and brute-force enumeration/counting over subsets. The
brute force is deliberately definition-shaped; faster counting lives in
counting.py and is always validated against this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .bitset import ElementSet, bits, size
from .errors import InvalidOperatorError, NoGreatestElementError, TooLargeError
from .poset import Poset

DEFAULT_BRUTE_CAP = 22

# below this many free elements the plain Python loop wins over numpy setup
_VECTOR_THRESHOLD = 14


@dataclass(frozen=True)
class ClosureSystem:
    """A closure system as a member bitmask of its poset."""

    poset: Poset
    members: ElementSet


@dataclass(frozen=True)
class ClosureOperator:
    """A closure operator as an image tuple: image[x] is the closure of x."""

    poset: Poset
    image: tuple


def least_majorizer(p: Poset, x: int, c: ElementSet) -> Optional[int]:
    """Least element of {y in c : y >= x}, or None."""
    return p.least_element_of(p.up_incl[x] & c)


def is_closure_system(p: Poset, c: ElementSet) -> bool:
    """True iff every element has a least majorizer inside c."""
    for x in range(p.n):
        if least_majorizer(p, x, c) is None:
            return False
    return True


def is_preclosure_system(p: Poset, c: ElementSet) -> bool:
    """True iff c together with the greatest element is a closure system.

    Only defined when the poset has a greatest element.
    """
    top = p.greatest_element()
    if top is None:
        raise NoGreatestElementError("preclosure systems need a greatest element")
    return is_closure_system(p, c | (1 << top))


def operator_from_system(p: Poset, c: ElementSet) -> ClosureOperator:
    """The closure operator whose fixpoints are c: x maps to its least
    majorizer in c. Requires c to be a closure system."""
    image = []
    for x in range(p.n):
        m = least_majorizer(p, x, c)
        assert m is not None, "not a closure system"
        image.append(m)
    return ClosureOperator(p, tuple(image))


def system_from_operator(op: ClosureOperator) -> ClosureSystem:
    """Fixpoint set of a closure operator; validates the operator laws."""
    validate_operator(op)
    members = 0
    for x, y in enumerate(op.image):
        if x == y:
            members |= 1 << x
    return ClosureSystem(op.poset, members)


def validate_operator(op: ClosureOperator) -> None:
    """Raise InvalidOperatorError unless op is extensive, isotone, idempotent."""
    p = op.poset
    f = op.image
    if len(f) != p.n:
        raise InvalidOperatorError(f"image has {len(f)} entries for n={p.n}")
    for x in range(p.n):
        if not 0 <= f[x] < p.n:
            raise InvalidOperatorError(f"image of {x} is out of range")
        if not p.leq(x, f[x]):
            raise InvalidOperatorError(f"not extensive at {x}")
        if f[f[x]] != f[x]:
            raise InvalidOperatorError(f"not idempotent at {x}")
    for x, y in p.covers:
        if not p.leq(f[x], f[y]):
            raise InvalidOperatorError(f"not isotone on cover ({x}, {y})")


def _free_elements(p: Poset, required: ElementSet) -> tuple:
    """Forced mask and the list of undetermined element positions.

    Every closure system contains every maximal element (its up-set is just
    itself), so maximal elements join the required ones.
    """
    assert required & ~p.full_mask == 0, "required set outside the poset"
    forced = required | p.maximal_elements()
    return forced, list(bits(p.full_mask & ~forced))


def enumerate_closure_systems(p: Poset, required: ElementSet = 0,
                              cap: Optional[int] = DEFAULT_BRUTE_CAP) -> Iterator[ClosureSystem]:
    """Yield every closure system containing `required`, ascending by subset
    bitmask over the free elements. An unsatisfiable `required` simply yields
    nothing."""
    if cap is not None and p.n > cap:
        raise TooLargeError(f"n={p.n} exceeds the enumeration cap {cap}")
    forced, free = _free_elements(p, required)
    for k in range(1 << len(free)):
        c = forced
        for i, pos in enumerate(free):
            c |= ((k >> i) & 1) << pos
        if is_closure_system(p, c):
            yield ClosureSystem(p, c)


def bruteforce_search_space(p: Poset, required: ElementSet = 0) -> int:
    """Number of candidate subsets brute force examines for this instance."""
    _, free = _free_elements(p, required)
    return 1 << len(free)


def count_closure_systems_bruteforce(p: Poset, required: ElementSet = 0,
                                     cap: Optional[int] = DEFAULT_BRUTE_CAP) -> int:
    """Count closure systems containing `required` by examining every subset.

    Raises TooLargeError above the cap (pass cap=None to lift it). Large free
    sets go through a vectorized kernel; both paths examine the same
    candidates and agree exactly.
    """
    if cap is not None and p.n > cap:
        raise TooLargeError(
            f"brute force refused: n={p.n} exceeds the cap {cap}")
    forced, free = _free_elements(p, required)
    if len(free) >= _VECTOR_THRESHOLD:
        return _count_vectorized(p, forced, free)
    total = 0
    for k in range(1 << len(free)):
        c = forced
        for i, pos in enumerate(free):
            c |= ((k >> i) & 1) << pos
        if is_closure_system(p, c):
            total += 1
    return total


def _count_vectorized(p: Poset, forced: ElementSet, free: list) -> int:
    """numpy kernel: test candidate masks in chunks.

    For each element x and each candidate mask C, x's majorizers U = up(x) & C
    must have exactly one minimal member; minimality of u in U is U avoiding
    everything strictly below u.
    """
    one = np.uint64(1)
    total = 0
    space = 1 << len(free)
    chunk = 1 << 16
    for start in range(0, space, chunk):
        k = np.arange(start, min(start + chunk, space), dtype=np.uint64)
        masks = np.full(k.shape, forced, dtype=np.uint64)
        for i, pos in enumerate(free):
            masks |= ((k >> np.uint64(i)) & one) << np.uint64(pos)
        ok = np.ones(k.shape, dtype=bool)
        for x in range(p.n):
            u_masks = masks & np.uint64(p.up_incl[x])
            n_minimal = np.zeros(k.shape, dtype=np.uint8)
            for u in bits(p.up_incl[x]):
                present = ((u_masks >> np.uint64(u)) & one) != 0
                minimal = (u_masks & np.uint64(p.down[u])) == 0
                n_minimal += present & minimal
            ok &= n_minimal == 1
        total += int(np.count_nonzero(ok))
    return total


def count_preclosure_systems(p: Poset, cap: Optional[int] = DEFAULT_BRUTE_CAP) -> int:
    """Number of preclosure systems: exactly twice the closure system count,
    by pairing each closure system C with C minus the greatest element."""
    if p.greatest_element() is None:
        raise NoGreatestElementError("preclosure systems need a greatest element")
    from .counting import count_closures  # local import, counting uses this module

    return 2 * count_closures(p, cap=cap).value
