"""Pinned integral homology tables for the bipartite and diamond families.

Each entry lists (free rank, torsion factors) per homological degree for the
reflexive algebra of the named poset.  The torsion tuples are given in
primary form (prime powers, repetition = multiplicity); HomologyGroup
normalizes them to invariant-factor chains, so e.g. (2, 3) and (6,) pin the
same group.  These values are frozen here as an external reference; the
tests recompute every table from scratch and demand exact equality.
"""


def _m(q, k):
    return (q,) * k


Z2 = lambda k: _m(2, k)
Z3 = lambda k: _m(3, k)
Z4 = lambda k: _m(4, k)
Z5 = lambda k: _m(5, k)
Z7 = lambda k: _m(7, k)

TABLES = {
    "complete-bipartite:2,2": [
        (1, ()), (4, ()), (6, ()), (4, ()),
        (1, Z2(1)), (0, Z2(3)), (0, Z2(3)), (0, Z2(1)), (0, ()),
    ],
    "complete-bipartite:3,2": [
        (1, ()), (5, ()), (10, ()), (10, ()),
        (5, Z2(3)), (1, Z2(12)), (0, Z2(18)), (0, Z2(12)), (0, Z2(3)),
        (0, ()), (0, ()), (0, ()),
    ],
    "complete-bipartite:4,2": [
        (1, ()), (6, ()), (15, ()), (20, ()),
        (15, Z2(6)), (6, Z2(30)), (1, Z2(60)), (0, Z2(60)), (0, Z2(31)),
        (0, Z2(11)), (0, Z2(10)), (0, Z2(10)), (0, Z2(5)), (0, Z2(1)),
        (0, ()),
    ],
    "complete-bipartite:3,3": [
        (1, ()), (6, ()), (15, ()), (20, ()),
        (15, Z2(9)), (6, Z2(45)), (1, Z2(96)), (0, Z2(120)), (0, Z2(105)),
        (0, Z2(69) + Z3(1)), (0, Z2(30) + Z3(5)), (0, Z2(6) + Z3(10)),
        (0, Z3(10)), (0, Z3(5)), (0, Z3(1)), (0, ()),
    ],
    "complete-bipartite:5,2": [
        (1, ()), (7, ()), (21, ()), (35, ()),
        (35, Z2(10)), (21, Z2(60)), (7, Z2(150)), (1, Z2(200)),
        (0, Z2(155)), (0, Z2(90)), (0, Z2(85)), (0, Z2(100)), (0, Z2(75)),
        (0, Z2(30)), (0, Z2(5)), (0, ()), (0, ()), (0, ()),
    ],
    "complete-bipartite:4,3": [
        (1, ()), (7, ()), (21, ()), (35, ()),
        (35, Z2(18)), (21, Z2(108)), (7, Z2(294)), (1, Z2(504)),
        (0, Z2(651)), (0, Z2(714) + Z3(4)), (0, Z2(693) + Z3(24)),
        (0, Z2(564) + Z3(60)), (0, Z2(339) + Z3(80)), (0, Z2(126) + Z3(60)),
        (0, Z2(21) + Z3(24)), (0, Z3(4)), (0, ()), (0, ()), (0, ()), (0, ()),
    ],
    "diamond:2": [
        (1, ()), (4, ()), (6, ()), (4, Z2(1)),
        (1, Z2(3)), (0, Z2(3) + Z3(1)), (0, Z2(1) + Z3(3)), (0, Z3(3)),
        (0, Z3(1)), (0, ()),
    ],
    "diamond:3": [
        (1, ()), (5, ()), (10, ()), (10, Z2(1)),
        (5, Z2(5)), (1, Z2(10) + Z3(2)), (0, Z2(10) + Z3(8)),
        (0, Z2(5) + Z4(1) + Z3(12)), (0, Z2(1) + Z4(4) + Z3(8)),
        (0, Z4(6) + Z3(2)), (0, Z4(4)), (0, Z4(1)), (0, ()),
    ],
    "diamond:4": [
        (1, ()), (6, ()), (15, ()), (20, Z2(1)),
        (15, Z2(8)), (6, Z2(25) + Z3(2)), (1, Z2(40) + Z3(10)),
        (0, Z2(35) + Z4(3) + Z3(20)), (0, Z2(16) + Z4(15) + Z3(20)),
        (0, Z2(3) + Z4(30) + Z3(10) + Z5(1)), (0, Z4(30) + Z3(2) + Z5(5)),
        (0, Z4(15) + Z5(10)), (0, Z4(3) + Z5(10)), (0, Z5(5)), (0, Z5(1)),
        (0, ()),
    ],
    "diamond:5": [
        (1, ()), (7, ()), (21, ()), (35, Z2(1)),
        (35, Z2(12)), (21, Z2(51) + Z3(1)), (7, Z2(110) + Z3(7)),
        (1, Z2(136) + Z4(5) + Z3(21)), (0, Z2(103) + Z4(30) + Z3(35)),
        (0, Z2(58) + Z4(75) + Z3(35) + Z5(4)),
        (0, Z2(41) + Z4(100) + Z3(21) + Z5(24)),
        (0, Z2(36) + Z4(75) + Z3(8) + Z5(60)),
        (0, Z2(27) + Z4(30) + Z3(7) + Z5(80)),
        (0, Z2(22) + Z4(5) + Z3(15) + Z5(60)),
        (0, Z2(21) + Z3(20) + Z5(24)), (0, Z2(15) + Z3(15) + Z5(4)),
        (0, Z2(6) + Z3(6)), (0, Z2(1) + Z3(1)), (0, ()),
    ],
    "diamond:6": [
        (1, ()), (8, ()), (28, ()), (56, Z2(1)),
        (70, Z2(17)), (56, Z2(91) + Z3(1)), (28, Z2(245) + Z3(13)),
        (8, Z2(390) + Z4(5) + Z3(63)), (1, Z2(411) + Z4(35) + Z3(161)),
        (0, Z2(357) + Z4(105) + Z3(245) + Z5(9)),
        (0, Z2(351) + Z4(175) + Z3(231) + Z5(63)),
        (0, Z2(365) + Z4(175) + Z3(138) + Z5(189)),
        (0, Z2(315) + Z4(105) + Z3(78) + Z5(315)),
        (0, Z2(245) + Z4(35) + Z3(111) + Z5(315) + Z7(1)),
        (0, Z2(215) + Z4(5) + Z3(175) + Z5(189) + Z7(7)),
        (0, Z2(180) + Z3(175) + Z5(63) + Z7(21)),
        (0, Z2(105) + Z3(105) + Z5(9) + Z7(35)),
        (0, Z2(35) + Z3(35) + Z7(35)), (0, Z2(5) + Z3(5) + Z7(21)),
        (0, Z7(7)), (0, Z7(1)), (0, ()),
    ],
}

# runtime class per table: the heavy ones only run when the stretch flag is on
STRETCH = {"complete-bipartite:4,3", "diamond:5", "diamond:6"}
