"""Recursive counting of constrained closure systems.

count_closures(p, t) returns |{closure systems C of p with t inside C}| by
preferring structure over enumeration, in this order:

  1. disconnected posets: product over components;
  2. recognized shapes (chain, diamond, bottomless diamond): closed formula;
  3. a useful summit suborder S' disjoint from t: the systems factor as
     (systems of the quotient) x (systems of S'), since C must meet S';
  4. a useful bottleneck suborder S' disjoint from t: systems that meet S'
     contribute (quotient systems containing the collapsed class) x
     (2 |C(S')| - 1), where the factor counts the nonempty preclosure
     systems of S' (C may meet S' without containing its top, and the
     bottleneck above rescues least majorizers); systems avoiding S'
     entirely are in bijection with quotient systems avoiding the class;
  5. brute force, refused above the cap unless forced.

Every path is validated against count_closure_systems_bruteforce in the
test suite; the decomposition is never trusted on its own.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import reduce
from typing import Iterator, Optional

from .bitset import ElementSet, bits, size
from .closures import (DEFAULT_BRUTE_CAP, bruteforce_search_space,
                       count_closure_systems_bruteforce)
from .errors import EmptyPosetError
from .formulas import count_disconnected, count_special
from .isolated import (IsolatedSuborder, find_max_bottleneck_isos,
                       find_max_summit_isos, project_set, quotient_by)
from .poset import Poset, Shape


@dataclass(frozen=True)
class DecompositionTrace:
    """One node of the decomposition tree.

    kind is one of "special", "components", "summit", "bottleneck", "brute".
    iso_original and t_original are masks in the ids of the original poset
    the count was asked about, so disjointness is auditable after nested
    quotients renumber everything; search_space is the number of candidate
    subsets a brute leaf examined.
    """

    kind: str
    value: int
    n: int
    children: tuple = ()
    shape: Optional[Shape] = None
    iso: Optional[IsolatedSuborder] = None
    iso_original: ElementSet = 0
    t_original: ElementSet = 0
    search_space: int = 0


@dataclass(frozen=True)
class CountResult:
    value: int
    trace: DecompositionTrace


def count_closures(p: Poset, t: ElementSet = 0, *,
                   cap: Optional[int] = DEFAULT_BRUTE_CAP,
                   force: bool = False) -> CountResult:
    """Count the closure systems of p containing t (an element mask).

    Exact arbitrary-precision result. Raises EmptyPosetError for n = 0 and
    TooLargeError when a brute-force leaf would exceed `cap` elements and
    `force` is not set.
    """
    if p.n == 0:
        raise EmptyPosetError("closure systems live on a nonempty poset")
    if t & ~p.full_mask:
        raise ValueError(f"constraint mask {t:#x} has bits outside the poset")
    origin = tuple(1 << x for x in range(p.n))
    trace = _count(p, t, origin, None if force else cap)
    return CountResult(trace.value, trace)


def _originals(origin: tuple, mask: ElementSet) -> ElementSet:
    return reduce(lambda acc, x: acc | origin[x], bits(mask), 0)


def _count(p: Poset, t: ElementSet, origin: tuple, cap: Optional[int]) -> DecompositionTrace:
    t &= ~p.maximal_mask  # every system contains every maximal element
    t_orig = _originals(origin, t)

    comps = p.connected_components()
    if len(comps) > 1:
        sub_origins = deque(tuple(origin[x] for x in bits(comp)) for comp in comps)
        children = []

        def counter(sub: Poset, sub_t: ElementSet) -> int:
            node = _count(sub, sub_t, sub_origins.popleft(), cap)
            children.append(node)
            return node.value

        value = count_disconnected(p, t, counter)
        return DecompositionTrace("components", value, p.n,
                                  children=tuple(children), t_original=t_orig)

    special = count_special(p, t)
    if special is not None:
        return DecompositionTrace("special", special.value, p.n,
                                  shape=special.shape, t_original=t_orig)

    for finder, kind in ((find_max_summit_isos, "summit"),
                         (find_max_bottleneck_isos, "bottleneck")):
        usable = [iso for iso in finder(p) if not iso.members & t]
        if not usable:
            continue
        iso = max(usable, key=lambda c: (c.n, -c.bottom))
        assert not iso.members & t
        qr = quotient_by(p, iso)
        assert qr.quotient.n < p.n and iso.n < p.n
        q_origin = tuple(_originals(origin, m) for m in qr.members)
        qt = project_set(qr, t)
        assert not (qt >> qr.collapsed) & 1
        sub, idmap = p.restrict(iso.members)
        sub_origin = tuple(origin[x] for x in idmap)
        iso_orig = _originals(origin, iso.members)
        inside = _count(sub, 0, sub_origin, cap)
        if kind == "summit":
            quot = _count(qr.quotient, qt, q_origin, cap)
            value = quot.value * inside.value
            children = (quot, inside)
        else:
            meeting = _count(qr.quotient, qt | (1 << qr.collapsed), q_origin, cap)
            avoiding = _count(qr.quotient, qt, q_origin, cap)
            value = meeting.value * 2 * (inside.value - 1) + avoiding.value
            children = (meeting, inside, avoiding)
        return DecompositionTrace(kind, value, p.n, children=children, iso=iso,
                                  iso_original=iso_orig, t_original=t_orig)

    space = bruteforce_search_space(p, t)
    value = count_closure_systems_bruteforce(p, t, cap=cap)
    return DecompositionTrace("brute", value, p.n,
                              t_original=t_orig, search_space=space)


def trace_nodes(trace: DecompositionTrace) -> Iterator[DecompositionTrace]:
    """All nodes of the tree, preorder."""
    yield trace
    for child in trace.children:
        yield from trace_nodes(child)


def bruteforce_candidates(trace: DecompositionTrace) -> int:
    """Total subsets examined by brute-force leaves under this node."""
    return sum(n.search_space for n in trace_nodes(trace) if n.kind == "brute")


def explain(trace: DecompositionTrace) -> str:
    """Human-readable rendering of the decomposition tree, one node per
    line, children indented under their parent."""
    out = []

    def walk(node: DecompositionTrace, depth: int) -> None:
        pad = "  " * depth
        t_note = f" [|T|={size(node.t_original)}]" if node.t_original else ""
        if node.kind == "special":
            out.append(f"{pad}{node.shape.label} -> {node.value}{t_note}")
        elif node.kind == "components":
            out.append(f"{pad}product over {len(node.children)} components"
                       f" -> {node.value}{t_note}")
        elif node.kind == "summit":
            q, s = node.children
            out.append(f"{pad}summit suborder [{node.iso.bottom},{node.iso.top}]"
                       f" of {node.iso.n} elements: {node.value}"
                       f" = {q.value} * {s.value}{t_note}")
        elif node.kind == "bottleneck":
            a, b, c = node.children
            out.append(f"{pad}bottleneck suborder [{node.iso.bottom},{node.iso.top}]"
                       f" of {node.iso.n} elements: {node.value}"
                       f" = {a.value} * 2*({b.value}-1) + {c.value}{t_note}")
        else:
            out.append(f"{pad}brute force over {node.search_space} candidates"
                       f" -> {node.value}{t_note}")
        for child in node.children:
            walk(child, depth + 1)

    walk(trace, 0)
    return "\n".join(out)
