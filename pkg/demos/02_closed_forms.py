#!/usr/bin/env python3
"""Closed-form Hilbert-Poincare series next to the homology engine.

For each family with a known modular series, print both answers side by
side.  The right-hand column is computed from scratch (weight blocks +
modular ranks); equality is what the test suite enforces, this is just
the human-readable view.
"""

from posetlie import (
    HPSeries,
    PosetLieAlgebra,
    REFLEXIVE,
    cycle_poset,
    diamond,
    fork,
    hp_cycle_Z2,
    hp_diamond_Z2,
    hp_diamond_Z3,
    hp_fork_Z2,
    hp_umbrella_Z2,
    poset_homology_field,
    umbrella,
)

CASES = [
    ("crown cycle:2, GF(2)", cycle_poset(2), 2, hp_cycle_Z2(2)),
    ("crown cycle:3, GF(2)", cycle_poset(3), 2, hp_cycle_Z2(3)),
    ("fork:2, GF(2)", fork(2), 2, hp_fork_Z2(2)),
    ("umbrella:3, GF(2)", umbrella(3), 2, hp_umbrella_Z2(3)),
    ("diamond:3, GF(2)", diamond(3), 2, hp_diamond_Z2(3)),
    ("diamond:3, GF(3)", diamond(3), 3, hp_diamond_Z3(3)),
]


def main():
    for label, p, char, formula in CASES:
        g = PosetLieAlgebra(p, REFLEXIVE)
        engine = HPSeries(poset_homology_field(g, char))
        mark = "OK " if engine == formula else "XXX"
        print(f"[{mark}] {label}")
        print(f"      formula {list(formula.coeffs)}")
        print(f"      engine  {list(engine.coeffs)}")
        print()


if __name__ == "__main__":
    main()
