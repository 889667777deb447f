"""Algebraic Morse theory: matchings, validity checks, zig-zag reduction.

A matching pairs cells across adjacent degrees along unit (+-1) boundary
entries.  If reversing the matched edges leaves the degree-pair digraphs
acyclic, the complex retracts onto its unmatched ("critical") cells with a
boundary summing signed zig-zag paths; homology is unchanged.
"""

from __future__ import annotations

import random

from . import chevalley
from .chevalley import GradedComplex, boundary_mask, wedge_mask, masks_with_weight
from .liealg import PosetLieAlgebra, REFLEXIVE, STRICT
from . import poset as P


class MorseMatching:
    """Pairs (upper, lower) of cell masks with deg(upper) = deg(lower) + 1."""

    def __init__(self, pairs):
        self.pairs = tuple(pairs)
        self.up_of = {}    # lower mask -> upper mask
        self.down_of = {}  # upper mask -> lower mask
        for u, v in self.pairs:
            if u.bit_count() != v.bit_count() + 1:
                raise ValueError("pair degrees are not adjacent")
            if u in self.down_of or v in self.up_of or u in self.up_of or v in self.down_of:
                raise ValueError("cell used twice in matching")
            self.down_of[u] = v
            self.up_of[v] = u

    def __len__(self):
        return len(self.pairs)


def _bdry(c: GradedComplex, mask):
    fn = c._boundary_fn
    return fn(mask) if fn else boundary_mask(c.g, mask)


def matching_problems(c: GradedComplex, m: MorseMatching):
    """Human-readable list of violations; empty iff the matching is valid."""
    problems = []
    cell_sets = {k: set(v) for k, v in c.cells.items()}
    deg = {mask: k for k, v in c.cells.items() for mask in v}
    coeff = {}
    for u, v in m.pairs:
        if u not in deg or v not in deg:
            problems.append(f"cell {u:#x} or {v:#x} not in complex")
            continue
        cu = _bdry(c, u).get(v, 0)
        if cu not in (1, -1):
            problems.append(f"coefficient {cu} of pair ({u:#x},{v:#x}) is not a unit")
            continue
        coeff[u] = cu
    if problems:
        return problems
    # acyclicity, one degree pair at a time: nodes are matched pairs,
    # edge (u,v) -> (u',v') when d(u) also hits v'
    by_deg = {}
    for u, v in m.pairs:
        by_deg.setdefault(deg[u], []).append((u, v))
    for k, pairs in by_deg.items():
        lower_pair = {v: (u, v) for u, v in pairs}
        succ = {}
        for u, v in pairs:
            succ[(u, v)] = [lower_pair[v2] for v2 in _bdry(c, u)
                            if v2 != v and v2 in lower_pair]
        state = {}
        order = []

        def visit(node, trail):
            state[node] = 1
            trail.append(node)
            for nxt in succ[node]:
                if state.get(nxt) == 1:
                    cyc = trail[trail.index(nxt):]
                    names = " -> ".join(f"{u:#x}" for u, _ in cyc)
                    problems.append(f"zig-zag cycle in degrees ({k},{k-1}): {names}")
                    return False
                if nxt not in state and not visit(nxt, trail):
                    return False
            state[node] = 2
            trail.pop()
            return True

        for node in pairs:
            if node not in state and not visit(node, []):
                break
    return problems


def verify_matching(c: GradedComplex, m: MorseMatching):
    return not matching_problems(c, m)


class ReducedComplex(GradedComplex):
    """Critical cells of a matching with the zig-zag boundary."""

    def __init__(self, parent, matching, flows):
        cells = {}
        for k, masks in parent.cells.items():
            crit = [w for w in masks
                    if w not in matching.up_of and w not in matching.down_of]
            if crit:
                cells[k] = crit
        super().__init__(parent.g, cells, weight=parent.weight,
                         cell_names=parent.cell_names)
        self.parent = parent
        self.matching = matching
        self._flows = flows

        def reduced_boundary(mask):
            out = {}
            for v, cv in _bdry(parent, mask).items():
                for w, g in flows[v].items():
                    nv = out.get(w, 0) + cv * g
                    if nv:
                        out[w] = nv
                    elif w in out:
                        del out[w]
            return out

        self._boundary_fn = reduced_boundary


def reduce(c: GradedComplex, m: MorseMatching):
    """Retract onto critical cells; requires verify_matching(c, m).

    Each cell v gets a "flow" vector: the signed sum over zig-zag paths from
    v down to critical cells, with matched edges traversed backward at weight
    -1/c (integer, since c = +-1).  The reduced boundary of a critical cell u
    pushes d(u) through these flows.
    """
    critical = set()
    for masks in c.cells.values():
        for w in masks:
            if w not in m.up_of and w not in m.down_of:
                critical.add(w)
    flows = {}
    IN_PROGRESS = object()

    def flow(v0):
        stack = [v0]
        while stack:
            v = stack[-1]
            got = flows.get(v)
            if got is not None and got is not IN_PROGRESS:
                stack.pop()
                continue
            if v in critical:
                flows[v] = {v: 1}
                stack.pop()
                continue
            if v not in m.up_of:  # upper half of a pair: paths stop dead
                flows[v] = {}
                stack.pop()
                continue
            u = m.up_of[v]
            img = _bdry(c, u)
            deps = [v2 for v2 in img if v2 != v]
            pending = [v2 for v2 in deps if v2 not in flows]
            if got is None:
                flows[v] = IN_PROGRESS
                if pending:
                    stack.extend(pending)
                    continue
            elif pending:
                raise ValueError("matching is not acyclic")
            s = -img[v]  # -1/c for c = +-1
            acc = {}
            for v2 in deps:
                c2 = img[v2]
                for w, g in flows[v2].items():
                    acc[w] = acc.get(w, 0) + c2 * g
            flows[v] = {w: s * val for w, val in acc.items() if val}
            stack.pop()

    for k in sorted(c.cells):
        for mask in c.cells[k]:
            for v in _bdry(c, mask):
                flow(v)
    return ReducedComplex(c, m, flows)


def greedy_matching(c: GradedComplex, rng: random.Random | None = None):
    """Maximal unit-coefficient matching found greedily; always valid.

    Candidate edges are tried in canonical (or shuffled) order; an edge is
    kept if both cells are free and reversing it keeps the degree-pair
    digraph acyclic.
    """
    edges = []
    for k in sorted(c.cells):
        if k == 0:
            continue
        for u in c.cells[k]:
            for v, cv in _bdry(c, u).items():
                if cv in (1, -1):
                    edges.append((u, v))
    if rng is not None:
        rng.shuffle(edges)
    used = set()
    chosen = []
    lower_of = {}
    for u, v in edges:
        if u in used or v in used:
            continue
        chosen.append((u, v))
        matching = MorseMatching(chosen)
        if matching_problems(c, matching):
            chosen.pop()
            continue
        used.add(u)
        used.add(v)
    return MorseMatching(chosen)


# -- the three concrete constructions -----------------------------------------


def _pair_mask(g, *pairs):
    return wedge_mask(sorted(g.index[p] for p in pairs))


def interval_matching(g: PosetLieAlgebra, a, b, middles):
    """Torsion-witness matching inside the weight block of an interval.

    `middles` are m-1 distinct elements strictly between a and b; the block
    of weight (-m at a, +m at b) contains the cycle v = e_ab /\ e_ax_i /\
    e_x_ib whose class generates a Z_m summand.  Returns (block complex,
    matching, named cells).
    """
    p = g.poset
    if g.mode != REFLEXIVE:
        raise ValueError("interval construction lives in the reflexive algebra")
    if not p.less(a, b):
        raise ValueError("need a strictly below b")
    middles = list(middles)
    open_int = [x for x in p.interval(a, b) if x not in (a, b)]
    for x in middles:
        if x not in open_int:
            raise ValueError(f"{x} is not strictly between {a} and {b}")
    if len(set(middles)) != len(middles):
        raise ValueError("middles must be distinct")
    m = len(middles) + 1

    weight = [0] * p.n
    weight[a - 1] = -m
    weight[b - 1] = m
    target = tuple(weight)
    cells = {}
    for mask in masks_with_weight(g, target):
        cells.setdefault(mask.bit_count(), []).append(mask)

    chain_pairs = [(a, b)]
    for x in middles:
        chain_pairs += [(a, x), (x, b)]
    v = _pair_mask(g, *chain_pairs)
    names = {v: "v", _pair_mask(g, (a, a), *chain_pairs): "e_aa^v",
             _pair_mask(g, (b, b), *chain_pairs): "e_bb^v"}
    unused = [x for x in open_int if x not in middles]
    pairs = []
    criticals = []
    for x in unused:
        upper = _pair_mask(g, (a, x), (x, b), *chain_pairs[1:])
        names[upper] = f"v'_{x}"
        if m >= 2:
            lower = _pair_mask(g, (a, b), (a, x), (x, b),
                               *(q for i in range(1, m - 1) for q in chain_pairs[2 * i + 1: 2 * i + 3]))
            names[lower] = f"v_{x}"
            pairs.append((upper, lower))
        else:
            criticals.append(upper)
    for r in range(1, m):          # 1-indexed positions of middles
        xr = middles[r - 1]
        rest = [q for i in range(1, m) if i != r
                for q in ((a, middles[i - 1]), (middles[i - 1], b))]
        for y in open_int:
            if y in middles:
                continue
            below = p.less(a, y) and p.less(y, xr)
            above = p.less(xr, y) and p.less(y, b)
            for is_below in ([True] if below else []) + ([False] if above else []):
                if is_below:
                    upper = _pair_mask(g, (a, b), (a, y), (y, xr), (xr, b), *rest)
                    names_u, names_l = f"v'_{r},{y}", f"v_{r},{y}"
                else:
                    upper = _pair_mask(g, (a, b), (a, xr), (xr, y), (y, b), *rest)
                    names_u, names_l = f"v'~{r},{y}", f"v~{r},{y}"
                lower = _pair_mask(g, (a, b), (a, y), (y, b), *rest)
                names[upper] = names_u
                names[lower] = names_l
                if r != 1:
                    pairs.append((upper, lower))
                else:
                    criticals.append(upper)
    block = GradedComplex(g, cells, weight=target, cell_names=names)
    marked = {"v": v, "m": m, "critical_primed": tuple(criticals)}
    return block, MorseMatching(pairs), marked


def nil_matching(n):
    """Matching on the weight (-1, 3-n, 1, .., 1) block of the strict chain.

    Two critical cells remain: alpha = e_12 /\ e_23 .. e_2n and beta = e_1n /\
    e_23 .. e_2,n-1, with reduced boundary d(alpha) = +-(n-2) beta.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    g = PosetLieAlgebra(P.chain(n), STRICT)
    target = tuple([-1, 3 - n] + [1] * (n - 2))
    cells = {}
    for mask in masks_with_weight(g, target):
        cells.setdefault(mask.bit_count(), []).append(mask)
    alpha = _pair_mask(g, (1, 2), *((2, i) for i in range(3, n + 1)))
    beta = _pair_mask(g, (1, n), *((2, i) for i in range(3, n)))
    e2n = g.index[(2, n)]
    pairs = []
    for masks in cells.values():
        for u in masks:
            if (u >> e2n) & 1 or u == beta:
                continue
            hits = [i for i in range(3, n) if (u >> g.index[(i, n)]) & 1]
            assert len(hits) == 1, "block structure: unique e_in factor"
            i = hits[0]
            assert (u >> g.index[(2, i)]) & 1
            v = (u & ~(1 << g.index[(2, i)]) & ~(1 << g.index[(i, n)])) | (1 << e2n)
            pairs.append((u, v))
    names = {alpha: "alpha", beta: "beta"}
    block = GradedComplex(g, cells, weight=target, cell_names=names)
    marked = {"alpha": alpha, "beta": beta}
    return block, MorseMatching(pairs), marked


def diamond_matching(n, p):
    """Matching on the p-complex of the strict diamond algebra.

    Cells are e''_s = /\_{i in s} e_ab_i e_b_ic (|s| in pN) and e'_s = e_ac /\
    e''_s (|s|+1 in pN); the matching sends e''_{s+{n}} -> e'_s.  All critical
    reduced-boundary coefficients are even, so over Z_2 the retract has zero
    boundary.
    """
    g = PosetLieAlgebra(P.diamond(n), STRICT)
    c = chevalley.p_complex(g, p)
    bot, top = 1, n + 2

    def e2(sigma, with_ac):
        pairs = [(bot, top)] if with_ac else []
        for i in sigma:
            pairs += [(bot, 1 + i), (1 + i, top)]
        return _pair_mask(g, *pairs)

    names = {}
    for k, masks in c.cells.items():
        for mask in masks:
            sigma = sorted(i for i in range(1, n + 1)
                           if (mask >> g.index[(bot, 1 + i)]) & 1)
            tag = "e'" if (mask >> g.index[(bot, top)]) & 1 else "e''"
            names[mask] = f"{tag}_{{{','.join(map(str, sigma))}}}"
    c.cell_names = names
    pairs = []
    for sigma_mask in range(1 << (n - 1)):
        sigma = [i + 1 for i in range(n - 1) if (sigma_mask >> i) & 1]
        if (len(sigma) + 1) % p:
            continue
        pairs.append((e2(sigma + [n], False), e2(sigma, True)))
    return c, MorseMatching(pairs), names


reduce_complex = reduce  # package-level alias; `reduce` alone reads too generic
