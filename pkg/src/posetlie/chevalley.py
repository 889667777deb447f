"""Chevalley-Eilenberg chain complexes over the poset algebras.

A wedge of basis elements is stored as a bitmask over algebra basis indices
(dim <= 64), with tuple views at the API edges.  The boundary is

    d(x_1 ^ .. ^ x_k) = sum_{r<s} (-1)^{r+s} [x_r,x_s] ^ x_1 ^ .. x_r^ .. x_s^ .. x_k,

with the bracket result re-sorted into the wedge (insertion parity sign).
Entries of every boundary matrix are plain Python ints, so all downstream
arithmetic is exact.
"""

from __future__ import annotations

import os
from itertools import combinations
from math import gcd

import numpy as np

from .liealg import PosetLieAlgebra, REFLEXIVE, STRICT


class SizeError(RuntimeError):
    """Complex would exceed the wedge/memory budget."""


class ConvexityError(ValueError):
    pass


DEFAULT_DIM_CAP = 24


def mask_budget():
    """Maximum number of wedges we are willing to enumerate at once."""
    mb = int(os.environ.get("POSETLIE_MEMORY_MB", "512"))
    return max(1 << 16, (mb * (1 << 20)) // 48)


def wedge_mask(wedge):
    m = 0
    for k in wedge:
        m |= 1 << k
    return m


def mask_wedge(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def boundary_mask(g, mask):
    """Boundary of one wedge (as mask) -> {mask: coeff}."""
    idxs = mask_wedge(mask)
    out = {}
    bracket = g.bracket
    for r in range(len(idxs)):
        xr = idxs[r]
        for s in range(r + 1, len(idxs)):
            xs = idxs[s]
            terms = bracket(xr, xs)
            if not terms:
                continue
            rest = mask & ~((1 << xr) | (1 << xs))
            sign_rs = -1 if (r + s) & 1 else 1
            for coeff, t in terms:
                tb = 1 << t
                if rest & tb:
                    continue  # repeated factor
                below = (rest & (tb - 1)).bit_count()
                c = coeff * sign_rs * (-1 if below & 1 else 1)
                new = rest | tb
                acc = out.get(new, 0) + c
                if acc:
                    out[new] = acc
                else:
                    del out[new]
    return out


def boundary(g, wedge):
    """Tuple-level boundary: strictly increasing index tuple -> {tuple: coeff}."""
    if list(wedge) != sorted(set(wedge)):
        raise ValueError("wedge must be a strictly increasing index tuple")
    return {mask_wedge(m): c for m, c in boundary_mask(g, wedge_mask(wedge)).items()}


def weight_vector(g, wedge_or_mask):
    """w_i = #{a : e_ai in v} - #{b : e_ib in v}; diagonals cancel."""
    mask = wedge_or_mask if isinstance(wedge_or_mask, int) else wedge_mask(wedge_or_mask)
    w = [0] * (g.poset.n + 1)
    for k in mask_wedge(mask):
        i, j = g.basis[k]
        w[j] += 1
        w[i] -= 1
    return tuple(w[1:])


class GradedComplex:
    """Cells per degree plus exact integer boundary matrices.

    `cells[k]` is a sorted tuple of masks; `matrix(k)` returns the boundary
    C_k -> C_{k-1} as a list of columns, each a list of (row, coeff).
    """

    def __init__(self, g, cells, weight=None, cell_names=None):
        self.g = g
        self.cells = {k: tuple(sorted(v)) for k, v in cells.items() if len(v)}
        self.weight = weight
        self.cell_names = cell_names  # optional {mask-or-id: label} for reduced complexes
        self._index = {k: {m: i for i, m in enumerate(v)} for k, v in self.cells.items()}
        self._matrices = {}
        self._boundary_fn = None  # filled for reduced complexes

    @property
    def max_degree(self):
        return max(self.cells, default=-1)

    def dim(self, k):
        return len(self.cells.get(k, ()))

    def dims(self):
        top = self.max_degree
        return [self.dim(k) for k in range(top + 1)]

    def total_cells(self):
        return sum(len(v) for v in self.cells.values())

    def index_of(self, k, mask):
        return self._index[k][mask]

    def boundary_of(self, mask):
        """Boundary chain of one cell, as {mask: coeff}."""
        fn = self._boundary_fn or (lambda m: boundary_mask(self.g, m))
        return fn(mask)

    def matrix(self, k):
        """Boundary C_k -> C_{k-1}; columns over sorted degree-(k-1) cells."""
        if k in self._matrices:
            return self._matrices[k]
        rows = self._index.get(k - 1, {})
        cols = []
        for mask in self.cells.get(k, ()):
            image = self.boundary_of(mask)
            col = []
            for m2, c in image.items():
                if m2 in rows:
                    col.append((rows[m2], c))
                elif not self._boundary_fn and c:
                    # cells form a subcomplex: the image must stay inside
                    raise ValueError("boundary leaves the cell set; not a subcomplex")
            col.sort()
            cols.append(col)
        mat = BoundaryMatrix(len(rows), cols)
        self._matrices[k] = mat
        return mat

    def check_d_squared(self):
        """Assert d o d = 0 on every degree; cheap at desk scale."""
        for k in sorted(self.cells):
            if k < 2:
                continue
            mk = self.matrix(k)
            mk1 = self.matrix(k - 1)
            for col in mk.cols:
                acc = {}
                for row, c in col:
                    for r2, c2 in mk1.cols[row]:
                        acc[r2] = acc.get(r2, 0) + c * c2
                if any(acc.values()):
                    return False
        return True


class BoundaryMatrix:
    __slots__ = ("nrows", "cols")

    def __init__(self, nrows, cols):
        self.nrows = nrows
        self.cols = cols

    @property
    def ncols(self):
        return len(self.cols)

    def transpose(self):
        cols = [[] for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, c in col:
                cols[i].append((j, c))
        return BoundaryMatrix(self.ncols, cols)

    def to_dense(self):
        a = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, c in col:
                a[i][j] = c
        return a


# -- full complex -----------------------------------------------------------


def build_complex(g, max_degree=None):
    """All wedges of g, grouped by degree; SizeError over budget."""
    if g.dim > DEFAULT_DIM_CAP:
        raise SizeError(f"dim {g.dim} exceeds cap {DEFAULT_DIM_CAP}; "
                        "use weight blocks or a p-complex")
    if (1 << g.dim) > mask_budget():
        raise SizeError(f"2^{g.dim} wedges exceed the POSETLIE_MEMORY_MB budget")
    top = g.dim if max_degree is None else min(max_degree, g.dim)
    cells = {k: [] for k in range(top + 1)}
    for mask in range(1 << g.dim):
        k = mask.bit_count()
        if k <= top:
            cells[k].append(mask)
    return GradedComplex(g, cells)


# -- weight machinery ---------------------------------------------------------


def _weight_deltas(g):
    n = g.poset.n
    deltas = []
    for i, j in g.basis:
        d = [0] * n
        d[j - 1] += 1
        d[i - 1] -= 1
        deltas.append(d)
    return deltas


def weight_blocks(g, max_degree=None):
    """All wedges of g bucketed by weight vector -> {weight: GradedComplex}.

    Streams through the 2^dim masks with a vectorized weight table instead of
    materializing a full complex first.
    """
    d = g.dim
    if (1 << d) > mask_budget():
        raise SizeError(f"2^{d} wedges exceed the POSETLIE_MEMORY_MB budget")
    n = g.poset.n
    if d == 0 or n == 0:
        zero = (0,) * n
        return {zero: GradedComplex(g, {0: [0]}, weight=zero)}
    deltas = np.array(_weight_deltas(g), dtype=np.int8)
    w = np.zeros((1 << d, n), dtype=np.int8)
    for b in range(d):
        half = 1 << b
        w[half:2 * half] = w[:half] + deltas[b]
    uniq, inverse = np.unique(w, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    order = np.argsort(inverse, kind="stable")
    inv_sorted = inverse[order]
    boundaries = np.searchsorted(inv_sorted, np.arange(len(uniq)))
    out = {}
    top = d if max_degree is None else max_degree
    for u in range(len(uniq)):
        lo = boundaries[u]
        hi = boundaries[u + 1] if u + 1 < len(uniq) else (1 << d)
        masks = order[lo:hi]
        weight = tuple(int(x) for x in uniq[u])
        cells = {}
        for m in masks.tolist():
            k = m.bit_count()
            if k <= top:
                cells.setdefault(k, []).append(m)
        out[weight] = GradedComplex(g, cells, weight=weight)
    return out


def block_decompose(c):
    """Split an existing complex into its weight blocks (list, sorted by weight)."""
    buckets = {}
    for k, masks in c.cells.items():
        for m in masks:
            w = weight_vector(c.g, m)
            buckets.setdefault(w, {}).setdefault(k, []).append(m)
    return [GradedComplex(c.g, cells, weight=w)
            for w, cells in sorted(buckets.items())]


def gcd_prune(blocks):
    """Drop blocks with w != 0 and gcd(w) = 1 (acyclic in reflexive mode).

    Opt-in: callers must have cross-checked this on their poset class; the
    test suite does so for every family we prune.
    """
    kept = []
    for b in blocks:
        if b.g.mode != REFLEXIVE:
            raise ValueError("gcd pruning applies to reflexive-mode blocks only")
        w = b.weight
        if w is None:
            raise ValueError("block has no weight tag")
        if any(w) and gcd(*(abs(x) for x in w)) == 1:
            continue
        kept.append(b)
    return kept


def masks_with_weight(g, target=None, mod=None, nonzero_only=False):
    """DFS-enumerate wedges whose weight equals `target` (exact) or is
    congruent to it mod `mod` (componentwise).  target=None with mod=p means
    all components = 0 mod p.  Never touches the full 2^dim space."""
    n = g.poset.n
    d = g.dim
    if target is None:
        target = (0,) * n
    basis = g.basis
    # suffix capacities: how much each vertex weight can still move
    rp = [[0] * (d + 1) for _ in range(n + 1)]  # +1 capacity (right index)
    rm = [[0] * (d + 1) for _ in range(n + 1)]
    for k in range(d - 1, -1, -1):
        i, j = basis[k]
        for v in range(1, n + 1):
            rp[v][k] = rp[v][k + 1] + (1 if (v == j and i != j) else 0)
            rm[v][k] = rm[v][k + 1] + (1 if (v == i and i != j) else 0)
    w = [0] * (n + 1)
    out = []

    def feasible(k):
        for v in range(1, n + 1):
            need = target[v - 1] - w[v]
            lo, hi = -rm[v][k], rp[v][k]
            if mod is None:
                if need < lo or need > hi:
                    return False
            else:
                if (need - lo) % mod > hi - lo:
                    return False
        return True

    def rec(k, mask):
        if not feasible(k):
            return
        if k == d:
            out.append(mask)
            return
        i, j = basis[k]
        # exclude basis[k]
        rec(k + 1, mask)
        # include it
        w[j] += 1
        w[i] -= 1
        rec(k + 1, mask | (1 << k))
        w[j] -= 1
        w[i] += 1

    rec(0, 0)
    if nonzero_only:
        out = [m for m in out if m]
    return sorted(out)


def p_complex_nonempty(g, p):
    """True iff some nonempty wedge has every weight divisible by p.

    Same pruned search as masks_with_weight(mod=p), but include-first and
    stopping at the first hit, so it stays cheap across large poset scans.
    """
    n = g.poset.n
    d = g.dim
    basis = g.basis
    for i, j in basis:
        if i == j:
            return True  # a lone diagonal wedge has weight zero
    rp = [[0] * (d + 1) for _ in range(n + 1)]
    rm = [[0] * (d + 1) for _ in range(n + 1)]
    for k in range(d - 1, -1, -1):
        i, j = basis[k]
        for v in range(1, n + 1):
            rp[v][k] = rp[v][k + 1] + (1 if v == j else 0)
            rm[v][k] = rm[v][k + 1] + (1 if v == i else 0)
    w = [0] * (n + 1)

    def feasible(k):
        for v in range(1, n + 1):
            lo, hi = -rm[v][k], rp[v][k]
            if (-w[v] - lo) % p > hi - lo:
                return False
        return True

    def rec(k, size):
        if not feasible(k):
            return False
        if k == d:
            return size > 0
        i, j = basis[k]
        w[j] += 1
        w[i] -= 1
        hit = rec(k + 1, size + 1)
        w[j] -= 1
        w[i] += 1
        if hit:
            return True
        return rec(k + 1, size)

    return rec(0, 0)


def p_complex(g, p, max_degree=None):
    """Subcomplex of wedges all of whose weights are divisible by p.

    Only meaningful (and only allowed) in strict mode, where the boundary
    preserves weights componentwise.
    """
    if g.mode != STRICT:
        raise ValueError("p_complex wants a strict-mode algebra")
    masks = masks_with_weight(g, mod=p)
    top = g.dim if max_degree is None else max_degree
    cells = {}
    for m in masks:
        k = m.bit_count()
        if k <= top:
            cells.setdefault(k, []).append(m)
    return GradedComplex(g, cells)


def convex_summand(g, subset):
    """Subcomplex spanned by wedges with every index inside `subset`."""
    if not g.poset.is_convex(subset):
        raise ConvexityError(f"{sorted(subset)} is not convex")
    allowed = 0
    for k, (i, j) in enumerate(g.basis):
        if i in subset and j in subset:
            allowed |= 1 << k
    if allowed.bit_count() > DEFAULT_DIM_CAP:
        raise SizeError("restricted algebra still exceeds the degree cap")
    positions = mask_wedge(allowed)
    cells = {}
    for r in range(1 << len(positions)):
        m = 0
        rr = r
        for pos in positions:
            if rr & 1:
                m |= 1 << pos
            rr >>= 1
        cells.setdefault(m.bit_count(), []).append(m)
    return GradedComplex(g, cells)
