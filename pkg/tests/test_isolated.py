"""Isolated suborder detection, separators, and quotients.

The detection pipeline is cross-checked two independent ways: separator
tests against the raw definition for every interval, and the returned
maximal suborders against an exhaustive scan over all intervals.
"""

from __future__ import annotations

import pytest

from closurecount import (IsoKind, IsolatedSuborder, NotIsolatedError, Poset,
                          SameNodeError, bits, chain, diamond,
                          find_max_bottleneck_isos, find_max_summit_isos,
                          is_isolated_suborder, is_separator, least_bottleneck,
                          mask_of, powerset_lattice, project_set, quotient_by,
                          size)
from conftest import random_posets

DIAMOND_TOP = Poset(5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)])
SHARED_DIAMONDS = Poset(7, [(0, 1), (0, 2), (1, 3), (2, 3),
                            (3, 4), (3, 5), (4, 6), (5, 6)])
CHAIN_TWO_TOPS = Poset(5, [(0, 1), (1, 2), (2, 3), (2, 4)])


class TestDefinition:
    def test_chain_interval(self):
        assert is_isolated_suborder(chain(5), mask_of([0, 1, 2, 3]))
        assert is_isolated_suborder(chain(5), mask_of([1, 2]))

    def test_whole_poset_and_singletons_qualify(self):
        p = chain(3)
        assert is_isolated_suborder(p, p.full_mask)
        assert is_isolated_suborder(p, mask_of([1]))

    def test_rejections(self):
        p = diamond(2)
        assert not is_isolated_suborder(p, 0)
        assert not is_isolated_suborder(p, mask_of([1, 2]))     # no least/greatest
        assert not is_isolated_suborder(p, mask_of([1, 3]))     # 0 < 3 bypasses bottom 1
        assert not is_isolated_suborder(p, mask_of([0, 1, 3]))  # 2 above 0, not above top 3
        assert is_isolated_suborder(p, p.full_mask)

    def test_suborders_are_convex_intervals(self):
        for _, p in random_posets(seed=17, count=40, max_n=8):
            for a in range(p.n):
                for b in range(p.n):
                    if not p.lt(a, b):
                        continue
                    m = p.interval(a, b)
                    if is_isolated_suborder(p, m):
                        assert p.is_convex(m)
                        assert p.least_element_of(m) == a
                        assert p.greatest_element_of(m) == b


class TestSeparators:
    def test_endpoint_raises(self):
        aug = chain(3).augment()
        with pytest.raises(SameNodeError):
            is_separator(aug, 1, 1, aug.top)
        with pytest.raises(SameNodeError):
            is_separator(aug, 1, aug.bot, 1)

    def test_chain_separators(self):
        aug = chain(3).augment()
        assert is_separator(aug, 1, 0, 2)
        assert is_separator(aug, 1, aug.bot, aug.top)

    def test_diamond_belt_is_no_separator(self):
        aug = diamond(2).augment()
        assert not is_separator(aug, 1, 0, 3)

    def test_equivalence_with_definition(self):
        # interval [a, b] is an isolated suborder iff a separates bottom
        # from b and b separates a from top
        mismatches = 0
        for _, p in random_posets(seed=29, count=40, max_n=8):
            aug = p.augment()
            for a in range(p.n):
                for b in range(p.n):
                    if not p.lt(a, b):
                        continue
                    by_def = is_isolated_suborder(p, p.interval(a, b))
                    by_sep = (is_separator(aug, a, aug.bot, b)
                              and is_separator(aug, b, a, aug.top))
                    mismatches += by_def != by_sep
        assert mismatches == 0


class TestLeastBottleneck:
    def test_chain(self):
        p = chain(3)
        assert least_bottleneck(p, 0) == 1
        assert least_bottleneck(p, 1) == 2
        assert least_bottleneck(p, 2) is None

    def test_diamond(self):
        p = diamond(2)
        assert least_bottleneck(p, 0) is None  # two covers
        assert least_bottleneck(p, 1) == 3
        assert least_bottleneck(p, 3) is None  # maximal

    def test_matches_direct_definition(self):
        # b is a bottleneck of x iff x < b, [x, b] is a chain, and anything
        # above x sits in [x, b] or above b; the least such b must agree
        for _, p in random_posets(seed=41, count=40, max_n=8):
            for x in range(p.n):
                found = [b for b in bits(p.reach[x])
                         if p.is_chain(p.interval(x, b))
                         and not p.reach[x] & ~(p.interval(x, b) | p.reach[b])]
                least = None
                for b in found:
                    if all(p.leq(b, other) for other in found):
                        least = b
                assert least_bottleneck(p, x) == least


def _kinds(isos):
    return [(iso.bottom, iso.top, iso.kind) for iso in isos]


class TestDetection:
    def test_five_chain(self):
        assert _kinds(find_max_bottleneck_isos(chain(5))) == [(0, 3, IsoKind.BOTTLENECK)]
        assert _kinds(find_max_summit_isos(chain(5))) == [(1, 4, IsoKind.SUMMIT)]

    def test_three_chain_summit_keeps_the_useful_candidate(self):
        # [0, 2] is the whole poset and is dropped; nested [1, 2] survives
        assert _kinds(find_max_summit_isos(chain(3))) == [(1, 2, IsoKind.SUMMIT)]

    def test_tiny_posets(self):
        assert find_max_bottleneck_isos(chain(1)) == []
        assert find_max_summit_isos(chain(2)) == []
        assert _kinds(find_max_bottleneck_isos(chain(3))) == [(0, 1, IsoKind.BOTTLENECK)]

    def test_diamond_has_no_useful_isos(self):
        assert find_max_bottleneck_isos(diamond(2)) == []
        assert find_max_summit_isos(diamond(2)) == []

    def test_diamond_with_extra_top(self):
        # the diamond part [0, 3] has the extra element as its bottleneck
        isos = find_max_bottleneck_isos(DIAMOND_TOP)
        assert _kinds(isos) == [(0, 3, IsoKind.BOTTLENECK)]
        assert least_bottleneck(DIAMOND_TOP, isos[0].top) == 4
        assert _kinds(find_max_summit_isos(DIAMOND_TOP)) == [(3, 4, IsoKind.SUMMIT)]

    def test_shared_diamonds_summit_is_the_upper_diamond(self):
        isos = find_max_summit_isos(SHARED_DIAMONDS)
        assert _kinds(isos) == [(3, 6, IsoKind.SUMMIT)]
        assert isos[0].members == mask_of([3, 4, 5, 6])

    def test_chain_under_two_tops_is_bottleneck_kind_only(self):
        assert find_max_summit_isos(CHAIN_TWO_TOPS) == []
        assert _kinds(find_max_bottleneck_isos(CHAIN_TWO_TOPS)) == [(0, 1, IsoKind.BOTTLENECK)]

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_powerset_has_none(self, k):
        p = powerset_lattice(k)
        assert find_max_bottleneck_isos(p) == []
        assert find_max_summit_isos(p) == []

    def test_results_satisfy_their_contracts(self):
        for _, p in random_posets(seed=53, count=60, max_n=9):
            for kind, isos in ((IsoKind.SUMMIT, find_max_summit_isos(p)),
                               (IsoKind.BOTTLENECK, find_max_bottleneck_isos(p))):
                for i, iso in enumerate(isos):
                    assert is_isolated_suborder(p, iso.members)
                    assert iso.members != p.full_mask and iso.n >= 2
                    assert iso.members == p.interval(iso.bottom, iso.top)
                    if kind is IsoKind.SUMMIT:
                        assert (p.maximal_elements() >> iso.top) & 1
                    else:
                        assert least_bottleneck(p, iso.top) is not None
                    for other in isos[i + 1:]:
                        assert iso.members & other.members == 0

    def test_exactly_the_maximal_useful_suborders(self):
        # exhaustive cross-check: scan every interval for useful isolated
        # suborders of each kind, keep the inclusion-maximal ones, and
        # demand detection returns exactly that collection
        for _, p in random_posets(seed=59, count=60, max_n=8):
            for kind, finder in ((IsoKind.SUMMIT, find_max_summit_isos),
                                 (IsoKind.BOTTLENECK, find_max_bottleneck_isos)):
                kind_ok = {
                    IsoKind.SUMMIT: lambda b: bool((p.maximal_elements() >> b) & 1),
                    IsoKind.BOTTLENECK: lambda b: least_bottleneck(p, b) is not None,
                }[kind]
                pool = []
                for a in range(p.n):
                    for b in range(p.n):
                        if p.lt(a, b) and kind_ok(b):
                            m = p.interval(a, b)
                            if m != p.full_mask and is_isolated_suborder(p, m):
                                pool.append(m)
                maximal = {m for m in pool
                           if not any(m != o and m | o == o for o in pool)}
                assert {iso.members for iso in finder(p)} == maximal

    def test_overlapping_isos_union_and_endpoint_chains(self):
        # two overlapping isolated suborders have an isolated union, and
        # their bottoms and tops are comparable
        for _, p in random_posets(seed=61, count=30, max_n=7):
            pool = [(a, b, p.interval(a, b))
                    for a in range(p.n) for b in range(p.n)
                    if p.lt(a, b) and is_isolated_suborder(p, p.interval(a, b))]
            for i, (a1, b1, m1) in enumerate(pool):
                for a2, b2, m2 in pool[i + 1:]:
                    if m1 & m2:
                        assert is_isolated_suborder(p, m1 | m2)
                        assert p.leq(a1, a2) or p.leq(a2, a1)
                        assert p.leq(b1, b2) or p.leq(b2, b1)


class TestQuotient:
    def test_collapse_diamond_under_top(self):
        iso = find_max_bottleneck_isos(DIAMOND_TOP)[0]
        qr = quotient_by(DIAMOND_TOP, iso)
        assert qr.quotient == Poset(2, [(0, 1)])
        assert qr.class_of == (0, 0, 0, 0, 1)
        assert qr.members == (mask_of([0, 1, 2, 3]), mask_of([4]))
        assert qr.collapsed == 0

    def test_not_isolated_raises(self):
        p = diamond(2)
        bogus = IsolatedSuborder(1, 3, mask_of([1, 3]), IsoKind.SUMMIT)
        with pytest.raises(NotIsolatedError):
            quotient_by(p, bogus)

    def test_project_set(self):
        iso = find_max_bottleneck_isos(DIAMOND_TOP)[0]
        qr = quotient_by(DIAMOND_TOP, iso)
        assert project_set(qr, mask_of([1, 2])) == mask_of([0])
        assert project_set(qr, mask_of([4])) == mask_of([1])

    def test_labels_joined(self):
        p = Poset(3, [(0, 1), (1, 2)], labels=["a", "b", "c"])
        iso = find_max_bottleneck_isos(p)[0]  # [0, 1]
        qr = quotient_by(p, iso)
        assert qr.quotient.labels == ("a+b", "c")

    def test_quotient_order_matches_projected_order(self):
        # [x] <= [y] in the quotient iff some members x' <= y' in the original
        for _, p in random_posets(seed=67, count=40, max_n=8):
            for iso in find_max_summit_isos(p) + find_max_bottleneck_isos(p):
                qr = quotient_by(p, iso)
                q = qr.quotient
                for qx in range(q.n):
                    for qy in range(q.n):
                        original = any(p.leq(x, y)
                                       for x in bits(qr.members[qx])
                                       for y in bits(qr.members[qy]))
                        assert q.leq(qx, qy) == original

    def test_isos_found_in_the_quotient_lift(self):
        for _, p in random_posets(seed=71, count=40, max_n=8):
            for iso in find_max_summit_isos(p) + find_max_bottleneck_isos(p):
                qr = quotient_by(p, iso)
                for kind, finder in ((IsoKind.SUMMIT, find_max_summit_isos),
                                     (IsoKind.BOTTLENECK, find_max_bottleneck_isos)):
                    for inner in finder(qr.quotient):
                        flat = 0
                        for qx in bits(inner.members):
                            flat |= qr.members[qx]
                        assert is_isolated_suborder(p, flat)
                        top = p.greatest_element_of(flat)
                        if kind is IsoKind.SUMMIT:
                            assert (p.maximal_elements() >> top) & 1
                        else:
                            assert least_bottleneck(p, top) is not None

    def test_quotient_shrinks(self):
        for _, p in random_posets(seed=73, count=30, max_n=8):
            for iso in find_max_summit_isos(p) + find_max_bottleneck_isos(p):
                qr = quotient_by(p, iso)
                assert qr.quotient.n == p.n - iso.n + 1
                assert size(qr.members[qr.collapsed]) == iso.n
