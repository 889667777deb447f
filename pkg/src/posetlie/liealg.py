"""Matrix-unit Lie algebras attached to a finite poset.

For a poset P on {1..n} the reflexive algebra has basis e_ij for i <= j
(diagonals included), the strict one e_ij for i < j only.  The bracket is
the matrix-unit commutator

    [e_ij, e_kl] = delta_jk e_il - delta_li e_kj,

closed because the relation is transitive; structure constants are 0, +-1.
"""

from __future__ import annotations

from .poset import Poset

REFLEXIVE = "reflexive"
STRICT = "strict"


class BasisMatrix(tuple):
    """A matrix unit e_ij, stored as the pair (row, col)."""

    __slots__ = ()

    def __new__(cls, row, col):
        return tuple.__new__(cls, (row, col))

    @property
    def row(self):
        return self[0]

    @property
    def col(self):
        return self[1]

    def __repr__(self):
        return f"e({self[0]},{self[1]})"


class PosetLieAlgebra:
    """Basis order: diagonals e_11..e_nn first, then strict pairs in lex order.

    Brackets are computed on demand from the poset relation and memoized as a
    pair -> result cache; no structure-constant table is ever materialized.
    """

    def __init__(self, poset: Poset, mode=REFLEXIVE):
        if mode not in (REFLEXIVE, STRICT):
            raise ValueError(f"mode must be {REFLEXIVE!r} or {STRICT!r}")
        self.poset = poset
        self.mode = mode
        basis = []
        if mode == REFLEXIVE:
            basis.extend(BasisMatrix(i, i) for i in range(1, poset.n + 1))
        basis.extend(BasisMatrix(i, j) for i, j in sorted(poset.strict_pairs))
        self.basis = tuple(basis)
        self.index = {pair: k for k, pair in enumerate(self.basis)}
        self.dim = len(basis)
        self._cache = {}

    def __repr__(self):
        return f"PosetLieAlgebra(n={self.poset.n}, mode={self.mode}, dim={self.dim})"

    def contains(self, i, j):
        return (i, j) in self.index

    def degree(self, k):
        """Z-grading: deg e_ij = i - j."""
        i, j = self.basis[k]
        return i - j

    def bracket(self, a, b):
        """[basis[a], basis[b]] as a tuple of (coeff, basis index)."""
        key = (a, b)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        i, j = self.basis[a]
        k, l = self.basis[b]
        terms = []
        if j == k and (i, l) in self.index:
            terms.append((1, self.index[(i, l)]))
        if l == i and (k, j) in self.index:
            terms.append((-1, self.index[(k, j)]))
        if len(terms) == 2 and terms[0][1] == terms[1][1]:
            terms = []  # e_il and e_kj coincide only if the coefficients cancel
        result = tuple(terms)
        self._cache[key] = result
        self._cache[(b, a)] = tuple((-c, t) for c, t in result)
        return result

    def check_unimodular(self):
        """True iff tr ad(x) = 0 for every basis element x."""
        for a in range(self.dim):
            tr = 0
            for b in range(self.dim):
                for coeff, t in self.bracket(a, b):
                    if t == b:
                        tr += coeff
            if tr:
                return False
        return True


def transpose_map(g_op: PosetLieAlgebra, g: PosetLieAlgebra):
    """Index map of the anti-isomorphism e_ij -> e_ji between gl of opposite
    posets; raises KeyError if the algebras do not correspond."""
    out = {}
    for k, (i, j) in enumerate(g_op.basis):
        out[k] = g.index[(j, i)]
    return out
