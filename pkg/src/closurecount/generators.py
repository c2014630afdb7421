"""Poset families used by tests, demos and the command line.

Canonical element layouts (tests rely on these ids):
  chain(n)               0 < 1 < ... < n-1
  diamond(w)             bottom 0, belt 1..w, top w+1
  bottomless_diamond(w)  belt 0..w-1, top w
  antichain(n)           0..n-1, no relations
  powerset_lattice(k)    element ids are the subset bitmasks 0..2^k-1
  stacked(base, k)       level j occupies ids j*base.n..(j+1)*base.n-1,
                         everything in level j below everything in level j+1
"""

from __future__ import annotations

import random

from .bitset import bits
from .poset import Poset


def chain(n: int) -> Poset:
    return Poset(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> Poset:
    return Poset(n, [])


def diamond(width: int) -> Poset:
    """Bottom, `width` pairwise incomparable belt elements, top."""
    if width < 1:
        raise ValueError("diamond width must be at least 1")
    top = width + 1
    edges = [(0, b) for b in range(1, width + 1)]
    edges += [(b, top) for b in range(1, width + 1)]
    return Poset(width + 2, edges)


def bottomless_diamond(width: int) -> Poset:
    """`width` pairwise incomparable belt elements under a single top."""
    if width < 1:
        raise ValueError("bottomless diamond width must be at least 1")
    return Poset(width + 1, [(b, width) for b in range(width)])


def powerset_lattice(k: int) -> Poset:
    """Subsets of a k-element set ordered by inclusion."""
    if k < 0:
        raise ValueError("powerset exponent must be nonnegative")
    n = 1 << k
    edges = [(s, s | (1 << i)) for s in range(n) for i in range(k) if not (s >> i) & 1]
    return Poset(n, edges)


def stacked(base: Poset, levels: int) -> Poset:
    """`levels` copies of `base`, each level entirely below the next."""
    if levels < 1:
        raise ValueError("need at least one level")
    m = base.n
    edges = []
    for j in range(levels):
        off = j * m
        edges += [(u + off, v + off) for (u, v) in base.covers]
        if j + 1 < levels:
            edges += [(u + off, v + off + m) for u in range(m) for v in range(m)]
    return Poset(m * levels, edges)


def random_connected_poset(rng: random.Random, n: int) -> Poset:
    """Random connected poset: a DAG over a random linear order with edge
    probability 3/n, transitively reduced; resampled until connected."""
    if n < 1:
        raise ValueError("need at least one element")
    p_edge = 3.0 / n
    while True:
        order = rng.sample(range(n), n)
        edges = [(order[i], order[j])
                 for i in range(n) for j in range(i + 1, n)
                 if rng.random() < p_edge]
        poset = Poset(n, edges)
        if len(poset.connected_components()) == 1:
            return poset


def random_submask(rng: random.Random, universe: int, max_size: int) -> int:
    """Random subset of `universe` with at most max_size members."""
    pool = list(bits(universe))
    k = rng.randint(0, min(max_size, len(pool)))
    out = 0
    for x in rng.sample(pool, k):
        out |= 1 << x
    return out


def family(spec: str) -> Poset:
    """Parse a generator spec like 'chain:7' or 'stacked:3:diamond:2'.

    Families: chain:n, antichain:n, diamond:w, bottomless:w, powerset:k,
    random:n (optionally random:n:seed, seed 0 otherwise),
    stacked:k (k levels of powerset:2), stacked:k:FAMILY:ARG.
    """
    parts = spec.split(":")
    name = parts[0]
    makers = {
        "chain": chain,
        "antichain": antichain,
        "diamond": diamond,
        "bottomless": bottomless_diamond,
        "powerset": powerset_lattice,
    }
    try:
        if name in makers:
            if len(parts) != 2:
                raise ValueError(f"expected {name}:N")
            return makers[name](int(parts[1]))
        if name == "random":
            if len(parts) not in (2, 3):
                raise ValueError("expected random:N or random:N:SEED")
            seed = int(parts[2]) if len(parts) == 3 else 0
            return random_connected_poset(random.Random(seed), int(parts[1]))
        if name == "stacked":
            if len(parts) == 2:
                return stacked(powerset_lattice(2), int(parts[1]))
            if len(parts) >= 3:
                return stacked(family(":".join(parts[2:])), int(parts[1]))
            raise ValueError("expected stacked:K or stacked:K:FAMILY:ARG")
    except ValueError as exc:
        raise ValueError(f"bad generator spec {spec!r}: {exc}") from None
    raise ValueError(f"unknown generator family {name!r} in {spec!r}")
