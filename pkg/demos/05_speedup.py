#!/usr/bin/env python3
"""How much work the decomposition avoids, measured two ways.

Stacked posets (k copies of a base, every element of one level below every
element of the next) decompose completely, so the counter never brute
forces more than one level at a time. Direct enumeration examines
2^(free elements) candidate subsets; the decomposition's brute-force
leaves examine far fewer. Subset-membership checks are the honest metric
here; wall clock is reported alongside for flavor.

Run: python demos/05_speedup.py [--levels N]
"""

import argparse
import time

from closurecount import (bruteforce_candidates, bruteforce_search_space,
                          count_closure_systems_bruteforce, count_closures,
                          powerset_lattice, stacked)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--levels", type=int, default=4,
                    help="largest stack height to try (default 4)")
    args = ap.parse_args()

    base = powerset_lattice(2)
    print(f"{'levels':>6} {'n':>4} {'count':>12} {'direct checks':>14} "
          f"{'decomp checks':>14} {'direct s':>9} {'decomp s':>9}")
    for k in range(1, args.levels + 1):
        p = stacked(base, k)
        t0 = time.perf_counter()
        # force=True lifts the size cap; fine at these sizes
        brute = count_closure_systems_bruteforce(p, cap=None)
        brute_s = time.perf_counter() - t0
        t0 = time.perf_counter()
        result = count_closures(p)
        decomp_s = time.perf_counter() - t0
        assert result.value == brute
        print(f"{k:>6} {p.n:>4} {result.value:>12,} "
              f"{bruteforce_search_space(p):>14,} "
              f"{bruteforce_candidates(result.trace):>14,} "
              f"{brute_s:>9.4f} {decomp_s:>9.4f}")

    print()
    print("every row is cross-checked: decomposition == enumeration.")
    print("direct checks grow like 2^n; the decomposition's stay flat")
    print("because each level collapses before the next is considered.")


if __name__ == "__main__":
    main()
