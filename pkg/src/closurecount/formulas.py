"""Closed-form counts of closure systems for recognized shapes.

Each formula counts the closure systems containing a constraint set T. The
greatest element belongs to every closure system, so membership of the top
in T never changes a count; the formulas discount it up front.

Every formula here was frozen against brute-force enumeration over the full
constraint lattice of small instances, not transcribed on trust; the
diamond bottom-in-T case and the bottomless-diamond exponent in circulating
write-ups disagree with enumeration, and enumeration wins.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .bitset import ElementSet, bits, mask_of, size
from .poset import Poset, Shape, ShapeKind


def count_chain(n: int, t: ElementSet = 0) -> int:
    """Chain 0 < 1 < ... < n-1: each element below the top is free, so
    2^(n-1) systems, halved once per constrained non-top element."""
    if n < 1:
        raise ValueError("chain must have at least one element")
    assert t & ~((1 << n) - 1) == 0
    constrained = size(t & ~(1 << (n - 1)))
    return 1 << (n - 1 - constrained)


def count_diamond(width: int, t: ElementSet = 0) -> int:
    """Diamond with bottom 0, belt 1..width, top width+1.

    A subset containing the top is a closure system iff it contains the
    bottom whenever it contains two or more belt elements. With b = belt
    elements in T and n = width:
      bottom in T, or b >= 2:  2^(n-b)   (bottom forced or free-with-bottom)
      b == 1:                  2^(n-1) + 1
      T empty below the top:   2^n + n + 1
    """
    if width < 1:
        raise ValueError("diamond width must be at least 1")
    n = width
    belt = mask_of(range(1, width + 1))
    assert t & ~((1 << (width + 2)) - 1) == 0
    b = size(t & belt)
    if t & 1 or b >= 2:
        return 1 << (n - b)
    if b == 1:
        return (1 << (n - 1)) + 1
    return (1 << n) + n + 1


def count_bottomless_diamond(width: int, t: ElementSet = 0) -> int:
    """Belt 0..width-1 under top width: every belt subset together with the
    top is a closure system, so 2^width, halved per constrained belt
    element."""
    if width < 1:
        raise ValueError("bottomless diamond width must be at least 1")
    assert t & ~((1 << (width + 1)) - 1) == 0
    constrained = size(t & ~(1 << width))
    return 1 << (width - constrained)


@dataclass(frozen=True)
class ConstrainedCount:
    """A closed-form count plus how the constraint set touched the shape."""

    value: int
    shape: Shape
    contains_bottom: bool
    belt_hits: int
    contains_top: bool


def count_special(p: Poset, t: ElementSet = 0) -> Optional[ConstrainedCount]:
    """Dispatch to a shape formula, translating t into the shape's canonical
    coordinates. None when the poset has no recognized shape."""
    shape = p.detect_shape()
    if shape.kind is ShapeKind.OTHER:
        return None
    if shape.kind is ShapeKind.CHAIN:
        canonical = mask_of(size(p.down[x]) for x in bits(t))
        value = count_chain(shape.size, canonical)
        top = p.greatest_element()
        bot = p.least_element()
        interior = t & ~(1 << top) & ~(1 << bot) if p.n > 1 else 0
        return ConstrainedCount(value, shape,
                                contains_bottom=bool(p.n > 1 and (t >> bot) & 1),
                                belt_hits=size(interior),
                                contains_top=bool((t >> top) & 1))
    top = p.greatest_element()
    if shape.kind is ShapeKind.DIAMOND:
        bot = p.least_element()
        belt = sorted(bits(p.full_mask & ~(1 << bot) & ~(1 << top)))
        to_canonical = {bot: 0, top: shape.size + 1}
        to_canonical.update((x, i + 1) for i, x in enumerate(belt))
        canonical = mask_of(to_canonical[x] for x in bits(t))
        return ConstrainedCount(count_diamond(shape.size, canonical), shape,
                                contains_bottom=bool((t >> bot) & 1),
                                belt_hits=size(canonical & mask_of(range(1, shape.size + 1))),
                                contains_top=bool((t >> top) & 1))
    belt = sorted(bits(p.full_mask & ~(1 << top)))
    to_canonical = {top: shape.size}
    to_canonical.update((x, i) for i, x in enumerate(belt))
    canonical = mask_of(to_canonical[x] for x in bits(t))
    return ConstrainedCount(count_bottomless_diamond(shape.size, canonical), shape,
                            contains_bottom=False,
                            belt_hits=size(canonical & mask_of(range(shape.size))),
                            contains_top=bool((t >> top) & 1))


def count_disconnected(p: Poset, t: ElementSet,
                       component_counter: Callable[[Poset, ElementSet], int]) -> int:
    """Product of per-component counts: a closure system meets each
    component in a closure system of that component, independently.
    Components are passed to the callback in connected_components() order."""
    comps = p.connected_components()
    assert len(comps) >= 2, "poset is connected"
    total = 1
    for comp in comps:
        sub, idmap = p.restrict(comp)
        sub_t = mask_of(i for i, x in enumerate(idmap) if (t >> x) & 1)
        total *= component_counter(sub, sub_t)
    return total
