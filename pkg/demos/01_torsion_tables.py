#!/usr/bin/env python3
"""Integral homology tables for the small bipartite and diamond posets.

Prints the full torsion tables for K_{2,2}, K_{3,2}, K_{4,2} and the
diamond with 2 and 3 middle elements.  Each takes seconds; the wider
columns (K_{3,3}, K_{5,2}, diamond:4 and up) work the same way but run
for minutes -- pass --wide to include them.
"""

import argparse
import time

from posetlie import PosetLieAlgebra, REFLEXIVE, family, poset_homology_Z

QUICK = ["complete-bipartite:2,2", "complete-bipartite:3,2",
         "complete-bipartite:4,2", "diamond:2", "diamond:3"]
WIDE = ["complete-bipartite:3,3", "complete-bipartite:5,2", "diamond:4"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--wide", action="store_true",
                    help="include the dim-15..17 columns (minutes)")
    args = ap.parse_args()

    for key in QUICK + (WIDE if args.wide else []):
        p = family(key)
        g = PosetLieAlgebra(p, REFLEXIVE)
        t0 = time.perf_counter()
        table = poset_homology_Z(g)
        dt = time.perf_counter() - t0
        print(f"== {key}  (dim {g.dim}, {dt:.1f}s)")
        print(table.text())
        print()


if __name__ == "__main__":
    main()
