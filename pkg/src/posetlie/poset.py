"""Finite posets on {1..n}: construction, closure, named families, file formats.

Elements are always the integers 1..n.  A poset is stored canonically as the
set of strict comparable pairs (the full transitive closure), so two posets
built from different edge lists describing the same order compare equal.
"""

from __future__ import annotations

import json
from functools import lru_cache
from itertools import combinations

MAX_ELEMENTS = 64  # bitset rows; nothing in this package needs more


class CycleError(ValueError):
    """Raised when input edges would force x < x."""


class Poset:
    __slots__ = ("n", "strict_pairs", "_up", "_down", "_hasse")

    def __init__(self, n, strict_pairs):
        if n < 0 or n > MAX_ELEMENTS:
            raise ValueError(f"element count {n} outside 0..{MAX_ELEMENTS}")
        self.n = n
        self.strict_pairs = frozenset(strict_pairs)
        # bitset rows of the closure: _up[i] has bit (j-1) iff i < j
        up = [0] * (n + 1)
        down = [0] * (n + 1)
        for i, j in self.strict_pairs:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"pair ({i},{j}) outside 1..{n}")
            if i == j:
                raise CycleError(f"reflexive pair ({i},{i}) in strict relation")
            up[i] |= 1 << (j - 1)
            down[j] |= 1 << (i - 1)
        self._up = tuple(up)
        self._down = tuple(down)
        for i, j in self.strict_pairs:
            if self._up[j] & (1 << (i - 1)):
                raise CycleError(f"both {i}<{j} and {j}<{i}")
            # transitivity of the stored relation
            if self._up[j] & ~self._up[i]:
                raise ValueError("strict_pairs is not transitively closed")
        self._hasse = None

    # -- relation queries ------------------------------------------------

    def less(self, i, j):
        return bool(self._up[i] & (1 << (j - 1)))

    def leq(self, i, j):
        return i == j or self.less(i, j)

    def comparable(self, i, j):
        return i != j and (self.less(i, j) or self.less(j, i))

    def up_set(self, i):
        """Elements strictly above i, as a sorted tuple."""
        return _bits(self._up[i])

    def down_set(self, i):
        return _bits(self._down[i])

    @property
    def hasse_edges(self):
        """Covering pairs (i,j): i<j with nothing strictly between."""
        if self._hasse is None:
            edges = []
            for i, j in sorted(self.strict_pairs):
                if not (self._up[i] & self._down[j]):
                    edges.append((i, j))
            self._hasse = tuple(edges)
        return self._hasse

    def height(self):
        """Length (edge count) of a longest chain."""
        n = self.n
        order = _topo_order(n, self.strict_pairs)
        h = [0] * (n + 1)
        best = 0
        for j in order:
            d = self._down[j]
            for i in _bits(d):
                if h[i] + 1 > h[j]:
                    h[j] = h[i] + 1
            best = max(best, h[j])
        return best

    def interval(self, a, b):
        """All x with a <= x <= b (sorted tuple); empty unless a <= b."""
        if not self.leq(a, b):
            return ()
        inner = self._up[a] & self._down[b]
        return tuple(sorted((a, b) + _bits(inner))) if a != b else (a,)

    def is_convex(self, subset):
        """True iff a<x<b with a,b in subset forces x in subset."""
        s = set(subset)
        for a in s:
            for b in s:
                if a != b and self.less(a, b):
                    for x in _bits(self._up[a] & self._down[b]):
                        if x not in s:
                            return False
        return True

    def opposite(self):
        return Poset(self.n, frozenset((j, i) for i, j in self.strict_pairs))

    def disjoint_union(self, other):
        k = self.n
        pairs = set(self.strict_pairs)
        pairs.update((i + k, j + k) for i, j in other.strict_pairs)
        return Poset(k + other.n, pairs)

    def is_bounded(self):
        """Has a unique minimum and a unique maximum."""
        if self.n == 0:
            return False
        full = (1 << self.n) - 1
        has_bot = any(self._up[i] | (1 << (i - 1)) == full for i in range(1, self.n + 1))
        has_top = any(self._down[i] | (1 << (i - 1)) == full for i in range(1, self.n + 1))
        return has_bot and has_top

    def is_forest_height_le1(self):
        """Height <= 1 and the Hasse diagram (undirected) is acyclic."""
        if self.height() > 1:
            return False
        edges = self.hasse_edges
        comps = _component_count(self.n, edges)
        return len(edges) == self.n - comps

    def is_connected(self):
        return _component_count(self.n, self.hasse_edges) <= 1

    def restrict(self, subset):
        """Induced subposet on `subset`, relabeled 1..k preserving order.

        Returns (poset, old_to_new dict).
        """
        keep = sorted(set(subset))
        relab = {v: i + 1 for i, v in enumerate(keep)}
        pairs = {(relab[i], relab[j]) for i, j in self.strict_pairs
                 if i in relab and j in relab}
        return Poset(len(keep), pairs), relab

    # -- dunderia ----------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Poset) and self.n == other.n
                and self.strict_pairs == other.strict_pairs)

    def __hash__(self):
        return hash((self.n, self.strict_pairs))

    def __repr__(self):
        return f"Poset(n={self.n}, hasse={list(self.hasse_edges)})"

    # -- file formats ------------------------------------------------------

    def to_text(self):
        lines = [str(self.n)]
        lines += [f"{i} {j}" for i, j in self.hasse_edges]
        return "\n".join(lines) + "\n"

    def to_json(self):
        return json.dumps({"n": self.n, "hasse": [list(e) for e in self.hasse_edges]})


def _bits(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def _topo_order(n, pairs):
    indeg = [0] * (n + 1)
    succ = [[] for _ in range(n + 1)]
    for i, j in pairs:
        indeg[j] += 1
        succ[i].append(j)
    queue = [v for v in range(1, n + 1) if indeg[v] == 0]
    order = []
    while queue:
        v = queue.pop()
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if len(order) != n:
        raise CycleError("relation contains a directed cycle")
    return order


def _component_count(n, edges):
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            comps -= 1
    return comps


def from_pairs(n, pairs):
    """Poset from arbitrary strict relations (transitive closure taken here)."""
    pairs = set(map(tuple, pairs))
    for i, j in pairs:
        if i == j:
            raise CycleError(f"reflexive pair ({i},{i})")
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"pair ({i},{j}) outside 1..{n}")
    _topo_order(n, pairs)  # raises CycleError on cycles
    up = [0] * (n + 1)
    for i, j in pairs:
        up[i] |= 1 << (j - 1)
    # Warshall on bitset rows
    for k in range(1, n + 1):
        kb = 1 << (k - 1)
        row = up[k]
        for i in range(1, n + 1):
            if up[i] & kb:
                up[i] |= row
    closed = {(i, j) for i in range(1, n + 1) for j in _bits(up[i])}
    return Poset(n, closed)


def from_hasse(n, edges):
    return from_pairs(n, edges)


def parse_text(text):
    lines = [ln for ln in (s.strip() for s in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty poset file")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        i, j = ln.split()
        edges.append((int(i), int(j)))
    return from_hasse(n, edges)


def parse_json(text):
    data = json.loads(text)
    return from_hasse(int(data["n"]), [tuple(e) for e in data["hasse"]])


def load(path):
    """Read a poset file; JSON if it parses as JSON, else the text format."""
    with open(path) as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_json(text)
    return parse_text(text)


# -- named families --------------------------------------------------------

def chain(n):
    return from_hasse(n, [(i, i + 1) for i in range(1, n)])


def antichain(n):
    return Poset(n, frozenset())


def cycle_poset(n):
    """Height-1 poset whose Hasse diagram is a 2n-cycle.

    Minimal elements 1..n, maximal n+1..2n; i is covered by n+i and by
    n+i-1 (wrapping).  Needs n >= 2, else the cycle degenerates.
    """
    if n < 2:
        raise ValueError("cycle_poset needs n >= 2")
    edges = []
    for i in range(1, n + 1):
        edges.append((i, n + i))
        edges.append((i, n + (i - 1) if i > 1 else 2 * n))
    return from_hasse(2 * n, edges)


def complete_bipartite(m, n):
    """m minimal elements 1..m, each below all of the n maximal m+1..m+n."""
    return from_hasse(m + n, [(i, m + j) for i in range(1, m + 1)
                              for j in range(1, n + 1)])


def fork(n):
    """Element 1 below b_i = 1+i, each b_i below its own top c_i = 1+n+i."""
    edges = [(1, 1 + i) for i in range(1, n + 1)]
    edges += [(1 + i, 1 + n + i) for i in range(1, n + 1)]
    return from_hasse(2 * n + 1, edges)


def umbrella(n):
    """1 < 2 < each of the n tops 3..n+2."""
    edges = [(1, 2)] + [(2, 2 + i) for i in range(1, n + 1)]
    return from_hasse(n + 2, edges)


def diamond(n):
    """Bounded height-2 poset: 1 < middles 2..n+1 < n+2."""
    edges = [(1, 1 + i) for i in range(1, n + 1)]
    edges += [(1 + i, n + 2) for i in range(1, n + 1)]
    return from_hasse(n + 2, edges)


FAMILIES = {
    "chain": (chain, 1),
    "antichain": (antichain, 1),
    "cycle": (cycle_poset, 1),
    "complete-bipartite": (complete_bipartite, 2),
    "fork": (fork, 1),
    "umbrella": (umbrella, 1),
    "diamond": (diamond, 1),
}


def family(spec):
    """Parse 'name:params' (e.g. 'complete-bipartite:3,2') into a Poset."""
    name, _, params = spec.partition(":")
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; know {sorted(FAMILIES)}")
    fn, arity = FAMILIES[name]
    args = [int(x) for x in params.split(",") if x] if params else []
    if len(args) != arity:
        raise ValueError(f"family {name} takes {arity} integer parameter(s)")
    return fn(*args)


# -- exhaustive enumeration (for the verification suites) -------------------

@lru_cache(maxsize=None)
def all_posets(n):
    """Every labeled poset on {1..n}, as a tuple of Posets.

    Element k+1 is attached to each poset on {1..k} by choosing a down-set D
    and an up-set U with D x U already comparable; this hits each labeled
    poset exactly once since the restriction to {1..k} is determined.
    Counts match the classical sequence 1, 1, 3, 19, 219, 4231, 130023.
    """
    if n == 0:
        return (Poset(0, frozenset()),)
    out = []
    for p in all_posets(n - 1):
        ideals = [d for _, d in _down_sets(p)]
        filters = [f for _, f in _down_sets(p.opposite())]
        newbit = n
        for d in ideals:
            for u in filters:
                if d & u:
                    continue
                ok = True
                for i in d:
                    for j in u:
                        if not p.less(i, j):
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    continue
                pairs = set(p.strict_pairs)
                pairs.update((i, newbit) for i in d)
                pairs.update((newbit, j) for j in u)
                out.append(Poset(n, pairs))
    return tuple(out)


def _down_sets(p):
    """(mask, set) for every down-closed subset of p."""
    n = p.n
    down = p._down
    out = []
    for mask in range(1 << n):
        ok = True
        for j in range(1, n + 1):
            if (mask >> (j - 1)) & 1 and (down[j] & ~mask):
                ok = False
                break
        if ok:
            out.append((mask, {j for j in range(1, n + 1) if (mask >> (j - 1)) & 1}))
    return out


def connected_posets(n):
    return tuple(p for p in all_posets(n) if p.is_connected())
