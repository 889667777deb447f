"""Closed-form Hilbert-Poincare series for the named poset families.

All arithmetic is exact: integer coefficient lists, integer divisions that
must leave zero remainder.  Root-of-unity averages are replaced by plain
coefficient filters (keep every p-th coefficient), which is what those sums
compute anyway.
"""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from math import comb


def _trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


class HPSeries:
    """Polynomial Sum dim H_k t^k with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(_trim(coeffs))

    @classmethod
    def one_plus_t_pow(cls, k):
        return cls([comb(k, i) for i in range(k + 1)])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, x):
        r = 0
        for c in reversed(self.coeffs):
            r = r * x + c
        return r

    def __mul__(self, other):
        if isinstance(other, int):
            return HPSeries([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return HPSeries(out)

    __rmul__ = __mul__

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return HPSeries([self.coefficient(k) + other.coefficient(k) for k in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return HPSeries([self.coefficient(k) - other.coefficient(k) for k in range(n)])

    def __pow__(self, k):
        out = HPSeries([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exact_div(self, d):
        for c in self.coeffs:
            if c % d:
                raise ArithmeticError(f"coefficient {c} not divisible by {d}")
        return HPSeries([c // d for c in self.coeffs])

    def shift(self, l):
        return HPSeries([0] * l + list(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, HPSeries):
            return self.coeffs == other.coeffs
        return list(self.coeffs) == _trim(other)

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"HPSeries({list(self.coeffs)})"

    def dims(self):
        return list(self.coeffs)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["degree", "coefficient"])
        for k, c in enumerate(self.coeffs):
            w.writerow([k, c])
        return buf.getvalue()

    def normalized_rows(self):
        """(degree, coefficient / max coefficient) as exact fractions."""
        m = max(self.coeffs, default=0)
        return [(k, Fraction(c, m)) for k, c in enumerate(self.coeffs)]

    def normalized_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["degree", "normalized"])
        for k, frac in self.normalized_rows():
            w.writerow([k, f"{frac.numerator}/{frac.denominator}"])
        return buf.getvalue()


def _p1(k):
    return HPSeries.one_plus_t_pow(k)


def filter_every_pth(f: HPSeries, p, j=1, l=0):
    """Sum_{k in pN} c_k t^{jk+l}: keep every p-th coefficient, re-spread.

    This equals the root-of-unity average (t^l/p) Sum_i f(eps^i t^j) but is
    computed by plain index selection, no complex numbers involved.
    """
    out = {}
    for k in range(0, len(f.coeffs), p):
        out[j * k + l] = f.coeffs[k]
    size = max(out, default=0) + 1
    return HPSeries([out.get(i, 0) for i in range(size)])


def hp_reflexive_char0(n):
    """Any n-element poset, any field of characteristic 0 or > n."""
    return _p1(n)


def hp_cycle_Z2(n):
    if n < 2:
        raise ValueError("cycle needs n >= 2")
    return _p1(2 * n) * HPSeries([1] + [0] * (2 * n - 1) + [1])


def hp_cycle_Zp(n, p):
    if n < 2:
        raise ValueError("cycle needs n >= 2")
    if p <= 2:
        raise ValueError("p > 2")
    return _p1(2 * n)


def hp_complete_bipartite_pnp(p, n):
    """Bipartite p x n over Z_p: only all-or-nothing top rows survive."""
    body = filter_every_pth(_p1(n), p, j=p)
    return _p1(p + n) * body


def hp_complete_bipartite_Z2_stanley(m, n):
    total = HPSeries([0])
    minus = HPSeries([1, -1])
    for i in range(m + 1):
        for j in range(n + 1):
            term = _p1((m - i) * (n - j) + i * j) * (minus ** ((m - i) * j + (n - j) * i))
            total = total + comb(m, i) * comb(n, j) * term
    return (_p1(m + n) * total).exact_div(2 ** (m + n))


def hp_complete_bipartite_Z2_konvalinka(m, n):
    total = HPSeries([0])
    for k in range(n + 1):
        inner = [0] * (2 * (n // 2) + 1)
        for i in range(n // 2 + 1):
            c = -comb(n, 2 * i)
            c += 2 * sum(comb(k, 2 * j) * comb(n - k, 2 * i - 2 * j)
                         for j in range(i + 1) if 2 * i - 2 * j <= n - k)
            inner[2 * i] = c
        total = total + comb(n, k) * (HPSeries(inner) ** m)
    return (_p1(m + n) * total).exact_div(2 ** n)


def hp_fork_Z2(n):
    return _p1(2 * n + 1) * (HPSeries([1, 0, 0, 1]) ** n)


def hp_fork_Zp(n, p):
    if p < 3:
        raise ValueError("p >= 3")
    return _p1(2 * n + 1)


def hp_umbrella_Z2(n):
    a = _p1(n + 3) * (HPSeries([1, 0, 1]) ** n)
    b = _p1(n + 1) * (HPSeries([1, 0, -1]) ** (n + 1))
    return (a + b).exact_div(2)


def hp_diamond_Z2(n):
    if n < 1:
        raise ValueError("n >= 1")
    half = (HPSeries([1, 0, 1]) ** (n - 1)) + (HPSeries([1, 0, -1]) ** (n - 1))
    return (_p1(n + 2) * HPSeries([1, 0, 0, 1]) * half).exact_div(2)


def subset_incidence_rank_Z3(n, k):
    """rank over Z_3 of the inclusion matrix (k-1)-subsets x k-subsets of [n]."""
    total = 0
    j = 0
    while n - 2 * j - 1 >= 0:
        a, b = n - 2 * j - 1, k - j - 1
        if 0 <= b <= a:
            total += comb(a, b)
        j += 1
    return total


def subset_incidence_matrix(n, k):
    """0/1 matrix, rows = (k-1)-subsets, cols = k-subsets, 1 iff contained."""
    from itertools import combinations
    rows = list(combinations(range(n), k - 1))
    cols = list(combinations(range(n), k))
    ri = {s: i for i, s in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for cj, s in enumerate(cols):
        for drop in range(k):
            sub = s[:drop] + s[drop + 1:]
            mat[ri[sub]][cj] = 1
    return mat


def incidence_rank_series(n):
    """F(t) = Sum_k rank_Z3(incidence n,k) t^k as an exact polynomial."""
    return HPSeries([subset_incidence_rank_Z3(n, k) for k in range(n + 1)])


def hp_diamond_Z3(n):
    """Exact coefficient route: survivors of the subset-boundary mod 3.

    core = Sum_{k in 3N} (binom(n,k) - r_k) t^{2k} + (binom(n,k-1) - r_k) t^{2k-1}
    with r_k the Z_3 incidence rank; multiplied by (1+t)^{n+2}.
    """
    top = 2 * (n + 1) + 1
    core = [0] * top
    k = 0
    while k <= n + 1:
        rk = subset_incidence_rank_Z3(n, k)
        if k <= n:
            core[2 * k] += comb(n, k) - rk
        if k >= 1:
            core[2 * k - 1] += comb(n, k - 1) - rk
        k += 3
    return _p1(n + 2) * HPSeries(core)


def hp_tree_height1(n):
    """Any height-1 forest Hasse diagram: torsion-free, so (1+t)^n everywhere."""
    return _p1(n)


# named specializations quoted for small m (cross-checks for the general forms)
def hp_bipartite_Z2_small_m(m, n):
    t2p = HPSeries([1, 0, 1])
    t2m = HPSeries([1, 0, -1])
    if m == 2:
        return (_p1(n + 2) * ((t2m ** n) + (t2p ** n))).exact_div(2)
    if m == 3:
        return (_p1(n + 3) * (3 * (t2m ** n) + (HPSeries([1, 0, 3]) ** n))).exact_div(4)
    if m == 4:
        return (_p1(n + 4) * (3 * (t2m ** (2 * n)) + 4 * (HPSeries([1, 0, 0, 0, -1]) ** n)
                              + (HPSeries([1, 0, 6, 0, 1]) ** n))).exact_div(8)
    if m == 5:
        return (_p1(n + 5) * (10 * (t2m ** (2 * n)) + 5 * (HPSeries([1, 0, 2, 0, -3]) ** n)
                              + (HPSeries([1, 0, 10, 0, 5]) ** n))).exact_div(16)
    raise ValueError("specializations quoted for m in 2..5")
