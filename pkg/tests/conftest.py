"""Shared brute-force oracles, written independently of the library code.

The oracles here recompute small cases from first principles: dense
integer Smith forms by naive row/column reduction, boundaries straight from
the bracket definition, and mod-p ranks by plain Gaussian elimination.
They are deliberately simple and slow.
"""

import os
from fractions import Fraction

import pytest

from posetlie.liealg import PosetLieAlgebra


RUN_STRETCH = os.environ.get("POSETLIE_RUN_STRETCH") == "1"

stretch = pytest.mark.skipif(
    not RUN_STRETCH, reason="set POSETLIE_RUN_STRETCH=1 to run")


def oracle_snf_diagonal(rows):
    """Invariant factors of an integer matrix by naive reduction."""
    a = [list(r) for r in rows]
    n = len(a)
    m = len(a[0]) if n else 0
    out = []
    top = 0
    while top < n and top < m:
        # find the entry of least nonzero magnitude
        best = None
        for i in range(top, n):
            for j in range(top, m):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        a[top], a[bi] = a[bi], a[top]
        for r in a:
            r[top], r[bj] = r[bj], r[top]
        piv = a[top][top]
        dirty = False
        for i in range(top + 1, n):
            q = a[i][top] // piv
            if q:
                for j in range(top, m):
                    a[i][j] -= q * a[top][j]
            dirty = dirty or a[i][top] != 0
        for j in range(top + 1, m):
            q = a[top][j] // piv
            if q:
                for i in range(top, n):
                    a[i][j] -= q * a[i][top]
            dirty = dirty or a[top][j] != 0
        if dirty:
            continue
        # pivot must divide the rest of the block; if not, fold the offending
        # row into the pivot row and reduce again
        bad = None
        for i in range(top + 1, n):
            if any(a[i][j] % piv for j in range(top + 1, m)):
                bad = i
                break
        if bad is not None:
            for j in range(top, m):
                a[top][j] += a[bad][j]
            continue
        out.append(abs(piv))
        top += 1
    return [d for d in out if d != 0]


def oracle_rank_mod_p(rows, p):
    a = [[x % p for x in r] for r in rows]
    rank = 0
    col = 0
    m = len(a[0]) if a else 0
    while rank < len(a) and col < m:
        piv = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if piv is None:
            col += 1
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for i in range(len(a)):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
        col += 1
    return rank


def oracle_rank_Q(rows):
    a = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    col = 0
    m = len(a[0]) if a else 0
    while rank < len(a) and col < m:
        piv = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if piv is None:
            col += 1
            continue
        a[rank], a[piv] = a[piv], a[rank]
        lead = a[rank][col]
        a[rank] = [x / lead for x in a[rank]]
        for i in range(len(a)):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
        col += 1
    return rank


def oracle_homology_dims(c, char):
    """Field dims of a GradedComplex via dense elimination only."""
    top = c.max_degree
    rank = {}
    for k in range(1, top + 1):
        dense = c.matrix(k).to_dense()
        if not dense or not dense[0]:
            rank[k] = 0
        elif char == 0:
            rank[k] = oracle_rank_Q(dense)
        else:
            rank[k] = oracle_rank_mod_p(dense, char)
    return [c.dim(k) - rank.get(k, 0) - rank.get(k + 1, 0)
            for k in range(top + 1)]


def oracle_bracket(g: PosetLieAlgebra, a, b):
    """[e_a, e_b] straight from the matrix-unit commutator definition."""
    (i, j), (k, l) = g.basis[a], g.basis[b]
    out = {}
    if j == k and (i, l) in g.index:
        out[g.index[(i, l)]] = out.get(g.index[(i, l)], 0) + 1
    if l == i and (k, j) in g.index:
        out[g.index[(k, j)]] = out.get(g.index[(k, j)], 0) - 1
    return {x: v for x, v in out.items() if v}


def table_from_pairs(pairs):
    """Build a HomologyTable from (free rank, invariant factors) rows."""
    from posetlie.homology import HomologyGroup, HomologyTable
    return HomologyTable([HomologyGroup(f, t) for f, t in pairs])
