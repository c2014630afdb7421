"""Isolated suborders: detection, separator tests, and quotients.

An isolated suborder is a nonempty S' with a least element bot and greatest
element top such that the rest of the poset interacts with S' only through
its endpoints: anything above some member is above top or below nothing of
S', and dually anything below some member is below bot. Such an S' is
automatically the interval [bot, top].

Two kinds support closed counting formulas: summit suborders (top is maximal
in the whole poset) and bottleneck suborders (top has a bottleneck, which in
a finite poset means exactly one upper cover). Detection reduces to vertex
separators in the Hasse graph augmented with artificial endpoints: [s1, s2]
is an isolated suborder iff the interval is nonempty, s1 separates the
artificial bottom from s2, and s2 separates s1 from the artificial top.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .bitset import ElementSet, bits, mask_of, size
from .errors import NotIsolatedError, SameNodeError
from .poset import AugmentedPoset, Poset


class IsoKind(Enum):
    BOTTLENECK = "bottleneck"
    SUMMIT = "summit"


@dataclass(frozen=True)
class IsolatedSuborder:
    bottom: int
    top: int
    members: ElementSet
    kind: IsoKind

    @property
    def n(self) -> int:
        return size(self.members)


def is_isolated_suborder(p: Poset, s: ElementSet) -> bool:
    """Direct definitional check (used as the oracle for separator-based
    detection): s has a least and a greatest member, any comparability from
    inside to the outside factors through them."""
    if not s:
        return False
    bot = p.least_element_of(s)
    top = p.greatest_element_of(s)
    if bot is None or top is None:
        return False
    outside = p.full_mask & ~s
    for y in bits(s):
        if p.up_incl[y] & outside & ~p.up_incl[top]:
            return False  # something above y escapes without passing top
        if p.down_incl[y] & outside & ~p.down_incl[bot]:
            return False
    return True


def least_bottleneck(p: Poset, x: int) -> Optional[int]:
    """Least bottleneck of x, or None.

    b is a bottleneck of x when b > x, [x, b] is a chain, and everything
    above x is in [x, b] or above b. In a finite poset this forces b to be
    the unique upper cover of x, and conversely the unique upper cover
    satisfies all three clauses, so only the cover needs checking.
    """
    ups = p.cover_succ[x]
    if len(ups) != 1:
        return None
    b = ups[0]
    assert p.is_chain(p.interval(x, b))
    assert not p.reach[x] & ~((1 << b) | p.reach[b]), "element escapes the unique cover"
    return b


def is_separator(aug: AugmentedPoset, u: int, s: int, t: int) -> bool:
    """True iff every directed path s -> t in the augmented Hasse graph
    passes through u (vacuously true when t is unreachable)."""
    if u == s or u == t:
        raise SameNodeError(f"separator candidate {u} equals an endpoint")
    return not aug.reachable_avoiding(s, t, removed=u)


def _max_isos(p: Poset, candidate_tops, kind: IsoKind) -> list:
    """Shared search: for each bottom v keep the last candidate top (in
    topological order) passing both separator tests, drop trivial or
    singleton results, then drop results contained in another."""
    aug = p.augment()
    best = {}
    for v in range(p.n):
        for b in candidate_tops:
            if not p.lt(v, b):
                continue
            if is_separator(aug, v, aug.bot, b) and is_separator(aug, b, v, aug.top):
                best[v] = b
    found = []
    for v, b in best.items():
        members = p.interval(v, b)
        if members != p.full_mask and size(members) >= 2:
            found.append(IsolatedSuborder(v, b, members, kind))
    kept = [
        iso for iso in found
        if not any(other.members != iso.members
                   and other.members | iso.members == other.members
                   for other in found)
    ]
    kept.sort(key=lambda iso: iso.bottom)
    for i, a in enumerate(kept):  # results of one kind never overlap
        for b in kept[i + 1:]:
            assert a.members & b.members == 0
    return kept


def find_max_bottleneck_isos(p: Poset) -> list:
    """Inclusion-maximal useful isolated suborders whose top has a
    bottleneck. Candidate tops are the nodes with exactly one upper cover,
    in topological order."""
    tops = [b for b in p.topo if len(p.cover_succ[b]) == 1]
    return _max_isos(p, tops, IsoKind.BOTTLENECK)


def find_max_summit_isos(p: Poset) -> list:
    """Inclusion-maximal useful isolated suborders whose top is maximal in
    the whole poset."""
    tops = [b for b in p.topo if (p.maximal_mask >> b) & 1]
    return _max_isos(p, tops, IsoKind.SUMMIT)


@dataclass(frozen=True)
class QuotientResult:
    """Quotient of a poset by one isolated suborder.

    quotient   the collapsed poset
    class_of   class_of[x]: quotient id of original element x
    members    members[q]: original-id mask of quotient element q (flat
               classes; the collapsed class is the suborder, all other
               classes are singletons)
    collapsed  quotient id of the collapsed class
    """

    quotient: Poset
    class_of: tuple
    members: tuple
    collapsed: int


def quotient_by(p: Poset, iso: IsolatedSuborder) -> QuotientResult:
    """Collapse an isolated suborder to a single element.

    Each class is represented by one original id (the suborder's bottom for
    the collapsed class, the element itself otherwise) and quotient ids
    follow the sorted representatives, so results are stable. The quotient
    order is generated by the projected cover edges.
    """
    if not is_isolated_suborder(p, iso.members):
        raise NotIsolatedError(f"mask {iso.members:#x} is not an isolated suborder")
    rep = [x if not (iso.members >> x) & 1 else iso.bottom for x in range(p.n)]
    reps = sorted(set(rep))
    q_id = {r: i for i, r in enumerate(reps)}
    class_of = tuple(q_id[rep[x]] for x in range(p.n))
    edges = {(class_of[u], class_of[v]) for u, v in p.covers if class_of[u] != class_of[v]}
    members = tuple(iso.members if r == iso.bottom else 1 << r for r in reps)
    labels = None
    if p.labels is not None:
        labels = tuple("+".join(p.labels[x] for x in bits(members[i]))
                       for i in range(len(reps)))
    return QuotientResult(
        quotient=Poset(len(reps), edges, labels),
        class_of=class_of,
        members=members,
        collapsed=q_id[iso.bottom],
    )


def project_set(qr: QuotientResult, s: ElementSet) -> ElementSet:
    """Image of an original-element mask in the quotient."""
    return mask_of(qr.class_of[x] for x in bits(s))
