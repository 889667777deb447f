"""Cup products on cohomology realized by wedge bases.

Whenever homology over a field is carried by a subcomplex with zero
boundary whose basis consists of wedges (or small integer combinations of
wedges), the cup product of the dual cochains is just a signed wedge
concatenation, re-expanded in the chosen basis.  This module constructs
such bases for three situations -- height-1 posets, the two-step "umbrella"
posets, and the bounded "diamond" posets over GF(2) -- builds product
tables, and checks presentation relations against them.
"""

import itertools
import json
from collections import defaultdict
from fractions import Fraction

from .chevalley import boundary_mask, mask_wedge
from .families import (HPSeries, hp_diamond_Z2, hp_umbrella_Z2)
from .liealg import REFLEXIVE, PosetLieAlgebra
from .poset import diamond, umbrella
from .subgraphs import HeightError, iter_p_plus_regular


class BasisError(ValueError):
    """A product left the span of the declared basis."""


def _norm(c, p):
    return c % p if p else c


def wedge_concat(m1, m2):
    """Signed product of two wedges given as index masks.

    Returns (sign, union mask), or None when a factor repeats.  The sign is
    the parity of the permutation that sorts the concatenation.
    """
    if m1 & m2:
        return None
    inv = 0
    for j in mask_wedge(m2):
        inv += (m1 >> (j + 1)).bit_count()
    return (-1 if inv & 1 else 1), m1 | m2


def chain_product(c1, c2, p):
    """Bilinear extension of wedge_concat to integer combinations."""
    out = {}
    for w1, a in c1.items():
        for w2, b in c2.items():
            sw = wedge_concat(w1, w2)
            if sw is None:
                continue
            s, w = sw
            acc = _norm(out.get(w, 0) + s * a * b, p)
            if acc:
                out[w] = acc
            else:
                out.pop(w, None)
    return out


class BasisCell:
    """One basis element of the zero-boundary subcomplex.

    `chain` is the element itself, {wedge mask: coefficient}.  `lead` is a
    wedge appearing (with coefficient 1) in this cell and in no other, so
    the dual cochain of the cell is the dual of its lead wedge.
    """

    __slots__ = ("name", "degree", "chain", "lead")

    def __init__(self, name, degree, chain, lead):
        self.name = name
        self.degree = degree
        self.chain = chain
        self.lead = lead
        assert chain.get(lead) == 1
        assert all(w.bit_count() == degree for w in chain)

    def __repr__(self):
        return f"BasisCell({self.name!r}, deg={self.degree})"


class CohomologyBasis:
    """Wedge basis of a zero-boundary subcomplex carrying all of H_*.

    generators: alias -> cell name, the distinguished generators whose
    products and relations get reported.
    """

    def __init__(self, g, char, cells, generators, expect_dims=None):
        self.algebra = g
        self.char = char
        self.cells = list(cells)
        self.generators = dict(generators)
        self.by_name = {c.name: c for c in self.cells}
        assert len(self.by_name) == len(self.cells)
        self._by_degree = defaultdict(list)
        for c in self.cells:
            self._by_degree[c.degree].append(c)
        for alias, name in self.generators.items():
            assert name in self.by_name, alias
        self._check_zero_boundary()
        self._check_duality()
        if expect_dims is not None:
            assert self.dims() == list(expect_dims), (self.dims(), expect_dims)

    def dims(self):
        top = max(self._by_degree, default=0)
        return [len(self._by_degree.get(k, ())) for k in range(top + 1)]

    def cells_of_degree(self, k):
        return self._by_degree.get(k, ())

    def _check_zero_boundary(self):
        p = self.char
        for c in self.cells:
            acc = {}
            for w, coeff in c.chain.items():
                for w2, c2 in boundary_mask(self.algebra, w).items():
                    acc[w2] = _norm(acc.get(w2, 0) + coeff * c2, p)
            assert not any(acc.values()), f"cell {c.name} is not a cycle"

    def _check_duality(self):
        # the dual of each cell must vanish on every other cell
        owner = {}
        for c in self.cells:
            for w in c.chain:
                owner.setdefault(w, []).append(c.name)
        for c in self.cells:
            assert owner[c.lead] == [c.name], f"lead of {c.name} is shared"

    def expand(self, chain, degree):
        """Write a chain as a combination of basis cells; BasisError if not."""
        p = self.char
        residual = {w: _norm(c, p) for w, c in chain.items() if _norm(c, p)}
        out = {}
        for cell in self.cells_of_degree(degree):
            c = residual.get(cell.lead, 0)
            if not c:
                continue
            out[cell.name] = c
            for w, cf in cell.chain.items():
                acc = _norm(residual.get(w, 0) - c * cf, p)
                if acc:
                    residual[w] = acc
                else:
                    residual.pop(w, None)
        if residual:
            raise BasisError(f"product has {len(residual)} wedge(s) outside "
                             f"the basis span in degree {degree}")
        return out

    def monomial_chain(self, aliases):
        """Chain-level product of generator representatives, left to right."""
        acc = {0: 1}
        for a in aliases:
            cell = self.by_name[self.generators.get(a, a)]
            acc = chain_product(acc, cell.chain, self.char)
            if not acc:
                return {}
        return acc


class ProductTable:
    """Products of the dual generators, expanded back in the cell basis."""

    def __init__(self, basis):
        self.basis = basis
        self.products = {}   # (alias_a, alias_b) -> {cell name: coeff}
        self._cell_prod = {}  # memo for arbitrary cell pairs

    def product_of_cells(self, name_a, name_b):
        key = (name_a, name_b)
        got = self._cell_prod.get(key)
        if got is None:
            b = self.basis
            ca, cb = b.by_name[name_a], b.by_name[name_b]
            chain = chain_product(ca.chain, cb.chain, b.char)
            got = b.expand(chain, ca.degree + cb.degree) if chain else {}
            self._cell_prod[key] = got
        return got

    def mul(self, e1, e2):
        """Multiply two elements given as {cell name: coeff} dicts."""
        p = self.basis.char
        out = {}
        for a, ca in e1.items():
            for b, cb in e2.items():
                for name, c in self.product_of_cells(a, b).items():
                    acc = _norm(out.get(name, 0) + ca * cb * c, p)
                    if acc:
                        out[name] = acc
                    else:
                        out.pop(name, None)
        return out

    def degree_of(self, alias):
        b = self.basis
        return b.by_name[b.generators.get(alias, alias)].degree

    def check_graded_commutative(self):
        p = self.basis.char
        for (a, b), prod in self.products.items():
            sign = -1 if (self.degree_of(a) * self.degree_of(b)) & 1 else 1
            flipped = self.products[(b, a)]
            want = {k: _norm(sign * v, p) for k, v in flipped.items()}
            if prod != want:
                return False
        return True

    def check_associative(self, triples=None):
        gens = sorted(self.basis.generators)
        if triples is None:
            triples = itertools.product(gens, repeat=3)
        b = self.basis
        for x, y, z in triples:
            ex = {b.generators[x]: 1}
            ey = {b.generators[y]: 1}
            ez = {b.generators[z]: 1}
            if self.mul(self.mul(ex, ey), ez) != self.mul(ex, self.mul(ey, ez)):
                return False
        return True

    def to_json(self):
        b = self.basis
        gens = {a: {"cell": n, "degree": b.by_name[n].degree}
                for a, n in sorted(b.generators.items())}
        prods = [{"a": a, "b": bb, "result": dict(sorted(r.items()))}
                 for (a, bb), r in sorted(self.products.items())]
        return json.dumps({"char": b.char, "generators": gens,
                           "products": prods}, indent=1)


def wedge_basis_cup(basis):
    """Product table over all ordered pairs of declared generators."""
    table = ProductTable(basis)
    gens = sorted(basis.generators)
    for a, b in itertools.product(gens, repeat=2):
        na, nb = basis.generators[a], basis.generators[b]
        table.products[(a, b)] = table.product_of_cells(na, nb)
    return table


def verify_presentation(table, relations):
    """Check relations (each: name, [(coeff, alias tuple), ...] summing to 0).

    Also checks that generator degrees equal their wedge lengths and that
    the generators multiplicatively span every basis cell, which together
    with the dimension count certifies the presented algebra surjects onto
    the cohomology with the right Hilbert series.
    """
    basis = table.basis
    report = {"relations": {}, "checked": 0}
    for name, combo in relations:
        acc = {}
        p = basis.char
        for coeff, aliases in combo:
            for w, c in basis.monomial_chain(aliases).items():
                v = _norm(acc.get(w, 0) + coeff * c, p)
                if v:
                    acc[w] = v
                else:
                    acc.pop(w, None)
        held = not acc
        report["relations"][name] = held
        report["checked"] += 1
    report["degrees_ok"] = all(
        basis.by_name[n].degree == next(iter(basis.by_name[n].chain)).bit_count()
        for n in basis.generators.values())
    report["generators_span"] = _generators_span(table)
    report["ok"] = (report["degrees_ok"] and report["generators_span"]
                    and all(report["relations"].values()))
    return report


def _row_reduce_insert(echelon, vec, p):
    """Insert vec (dict) into an echelon basis over GF(p); True if new."""
    vec = {k: _norm(v, p) for k, v in vec.items() if _norm(v, p)}
    for pivot, row in echelon.items():
        c = vec.get(pivot)
        if c:
            for k, v in row.items():
                acc = _norm(vec.get(k, 0) - c * v, p)
                if acc:
                    vec[k] = acc
                else:
                    vec.pop(k, None)
    if not vec:
        return False
    pivot = min(vec)
    if p:
        inv = pow(vec[pivot], -1, p)
        vec = {k: v * inv % p for k, v in vec.items()}
    else:
        lead = Fraction(vec[pivot])
        vec = {k: Fraction(v) / lead for k, v in vec.items()}
    echelon[pivot] = vec
    return True


def _closure(table, elements):
    """Echelon span of the subalgebra generated by the given cell duals.

    Monomials in the generators are reachable by repeatedly multiplying
    span rows by single generators, so each round only does that.
    """
    p = table.basis.char
    echelon = {}
    gens = [{n: 1} for n in elements]
    seeds = [{"1": 1}] if "1" in table.basis.by_name else []
    for e in seeds + gens:
        _row_reduce_insert(echelon, e, p)
    grew = True
    while grew:
        grew = False
        rows = [dict(r) for r in echelon.values()]
        for e1 in rows:
            for e2 in gens:
                prod = table.mul(e1, e2)
                if prod and _row_reduce_insert(echelon, prod, p):
                    grew = True
    return echelon

def _in_span(echelon, vec, p):
    vec = {k: _norm(v, p) for k, v in vec.items() if _norm(v, p)}
    for pivot, row in echelon.items():
        c = vec.get(pivot)
        if c:
            for k, v in row.items():
                acc = _norm(vec.get(k, 0) - c * v, p)
                if acc:
                    vec[k] = acc
                else:
                    vec.pop(k, None)
    return not vec


def _generators_span(table):
    basis = table.basis
    span = _closure(table, sorted(basis.generators.values()))
    return all(_in_span(span, {c.name: 1}, basis.char) for c in basis.cells)


def minimal_generator_probe(table):
    """Size of a greedily grown generating set -- an upper bound only.

    Scans cell duals by increasing degree and adopts each one that is not
    already a product of previously adopted ones.
    """
    basis = table.basis
    chosen = []
    span = _closure(table, chosen)
    for cell in sorted(basis.cells, key=lambda c: (c.degree, c.name)):
        if cell.degree == 0:
            continue
        if not _in_span(span, {cell.name: 1}, basis.char):
            chosen.append(cell.name)
            span = _closure(table, chosen)
    return len(chosen)


# -- basis constructors --------------------------------------------------------


def _pair_bit(g, i, j):
    return 1 << g.index[(i, j)]


def _diag_cells(g, strict_cells):
    """Tensor diagonal subsets with the given strict-part cells.

    strict_cells: list of (suffix name, chain dict).  Yields BasisCell for
    every (diagonal subset) x (strict cell) pair; leads multiply.
    """
    n = g.poset.n
    diag_bits = [_pair_bit(g, v, v) for v in range(1, n + 1)]
    out = []
    for r in range(1 << n):
        dmask = 0
        names = []
        for v in range(1, n + 1):
            if r >> (v - 1) & 1:
                dmask |= diag_bits[v - 1]
                names.append(f"x{v}")
        for suffix, chain in strict_cells:
            full = {}
            for w, c in chain.items():
                s, m = wedge_concat(dmask, w)
                full[m] = s * c
            name = "*".join(names + ([suffix] if suffix else [])) or "1"
            lead_s, lead = wedge_concat(dmask, _lead_of(chain))
            if full[lead] == -1:   # normalize so the lead carries +1
                full = {m: -c for m, c in full.items()}
            out.append(BasisCell(name, dmask.bit_count() + _deg_of(chain),
                                 full, lead))
    return out


def _lead_of(chain):
    return min(chain)   # smallest mask; constructors put the lead first anyway


def _deg_of(chain):
    return next(iter(chain)).bit_count()


def height1_basis(p, char):
    """Wedge basis for a height-1 poset over GF(char) (or Q for char 0).

    All strict brackets vanish, so diagonal subsets wedged with edge
    subsets whose degrees all lie in (char)Z are cycles; they carry the
    whole homology.
    """
    if p.height() > 1:
        raise HeightError(f"poset has height {p.height()}, need at most 1")
    g = PosetLieAlgebra(p, REFLEXIVE)
    strict = [("", {0: 1})]
    if char and p.hasse_edges:
        for sub in iter_p_plus_regular(p, char):
            if not sub.mask:
                continue
            m = 0
            for a, b in sub.edges:
                m |= _pair_bit(g, a, b)
            name = "y(" + ",".join(f"{a}-{b}" for a, b in sub.edges) + ")"
            strict.append((name, {m: 1}))
    cells = _diag_cells(g, strict)
    expect = HPSeries.one_plus_t_pow(1) ** p.n
    if char and p.hasse_edges:
        from .subgraphs import enumerate_p_plus_regular
        expect = expect * enumerate_p_plus_regular(p, char)
    gens = {f"x{v}": f"x{v}" for v in range(1, p.n + 1)}
    for suffix, chain in strict:
        if suffix:
            gens[suffix] = suffix
    return CohomologyBasis(g, char, cells, gens, expect.dims())


def umbrella_basis(n, char=2):
    """Wedge basis for the umbrella poset (1 < 2 < tops) over GF(char).

    Over GF(2) the mod-2 weight subcomplex of the strict part has zero
    boundary outright, with cells indexed by top subsets: pairs
    e_{1c}e_{2c} over the subset, with e_12 present iff the subset has odd
    size.  For char > 2 only the diagonal exterior algebra survives.
    """
    p = umbrella(n)
    g = PosetLieAlgebra(p, REFLEXIVE)
    a, b = 1, 2
    tops = list(range(3, n + 3))
    strict = [("", {0: 1})]
    gens = {}
    if char == 2:
        e_ab = _pair_bit(g, a, b)
        pair_bit = {c: _pair_bit(g, a, c) | _pair_bit(g, b, c) for c in tops}
        for r in range(1, 1 << n):
            sigma = [tops[i] for i in range(n) if r >> i & 1]
            m = 0
            for c in sigma:
                m |= pair_bit[c]
            if len(sigma) % 2:
                m |= e_ab
            tag = "z" if len(sigma) % 2 else "y"
            name = tag + "(" + ",".join(map(str, sigma)) + ")"
            strict.append((name, {m: 1}))
            if len(sigma) == 1:
                gens[f"z{sigma[0]}"] = name
            elif len(sigma) == 2:
                gens[name] = name
        expect = hp_umbrella_Z2(n)
    elif char >= 3:
        expect = HPSeries.one_plus_t_pow(1) ** (n + 2)
    else:
        raise ValueError("need a positive characteristic")
    cells = _diag_cells(g, strict)
    gens.update({f"x{v}": f"x{v}" for v in range(1, n + 3)})
    return CohomologyBasis(g, char, cells, gens, expect.dims())


def umbrella_relations(n):
    """All instances of the five umbrella relation families."""
    tops = list(range(3, n + 3))
    rels = []
    y = lambda i, j: f"y({min(i, j)},{max(i, j)})"
    z = lambda i: f"z{i}"
    for i, j, k in itertools.combinations(tops, 3):
        for a_, b_, c_ in ((i, j, k), (i, k, j), (j, k, i)):
            rels.append((f"{y(a_, b_)}*{y(b_, c_)}",
                         [(1, (y(a_, b_), y(b_, c_)))]))
    for i, j, k, l in itertools.combinations(tops, 4):
        rels.append((f"{y(i, j)}*{y(k, l)}-{y(i, k)}*{y(j, l)}",
                     [(1, (y(i, j), y(k, l))), (-1, (y(i, k), y(j, l)))]))
        rels.append((f"{y(i, k)}*{y(j, l)}-{y(i, l)}*{y(j, k)}",
                     [(1, (y(i, k), y(j, l))), (-1, (y(i, l), y(j, k)))]))
    for i, j in itertools.combinations(tops, 2):
        rels.append((f"{y(i, j)}*{z(i)}", [(1, (y(i, j), z(i)))]))
        rels.append((f"{y(i, j)}*{z(j)}", [(1, (y(i, j), z(j)))]))
    for i, j, k in itertools.combinations(tops, 3):
        rels.append((f"{y(i, j)}*{z(k)}-{y(i, k)}*{z(j)}",
                     [(1, (y(i, j), z(k))), (-1, (y(i, k), z(j)))]))
        rels.append((f"{y(i, k)}*{z(j)}-{y(j, k)}*{z(i)}",
                     [(1, (y(i, k), z(j))), (-1, (y(j, k), z(i)))]))
    for i, j in itertools.combinations(tops, 2):
        rels.append((f"{z(i)}*{z(j)}", [(1, (z(i), z(j)))]))
    return rels


def diamond_basis(n, char=2):
    """Combination wedge basis for the diamond poset over GF(2).

    Strict cells: for even subsets s of the first n-1 middles, the
    corrected even cell (sum of the plain pair-wedge over s and its
    variants trading one middle for middle n), and the odd cell with the
    long edge over s plus middle n.  Needs n >= 1 middles; char must be 2.
    """
    if char != 2:
        raise ValueError("the combination basis only has zero boundary mod 2")
    if n < 1:
        raise ValueError("need at least one middle element")
    p = diamond(n)
    g = PosetLieAlgebra(p, REFLEXIVE)
    a, c = 1, n + 2
    mids = list(range(2, n + 2))        # b_1 .. b_n
    last = mids[-1]                     # b_n, the traded-in middle
    pair_bit = {b: _pair_bit(g, a, b) | _pair_bit(g, b, c) for b in mids}
    e_ac = _pair_bit(g, a, c)

    def pairs_mask(subset):
        m = 0
        for b in subset:
            m |= pair_bit[b]
        return m

    strict = [("", {0: 1})]
    gens = {}
    for r in range(1 << (n - 1)):
        sigma = [mids[i] for i in range(n - 1) if r >> i & 1]
        if len(sigma) % 2 == 0:
            if sigma:
                chain = {pairs_mask(sigma): 1}
                for i in sigma:
                    swapped = [x for x in sigma if x != i] + [last]
                    chain[pairs_mask(swapped)] = 1
                name = "yy(" + ",".join(map(str, sigma)) + ")"
                strict.append((name, chain))
                if len(sigma) == 2:
                    gens[f"y({sigma[0]},{sigma[1]})"] = name
            odd = sigma + [last]
            chain = {e_ac | pairs_mask(odd): 1}
            name = "zz(" + ",".join(map(str, odd)) + ")"
            strict.append((name, chain))
            if not sigma:
                gens["z"] = name
    cells = _diag_cells(g, strict)
    gens.update({f"x{v}": f"x{v}" for v in range(1, n + 3)})
    return CohomologyBasis(g, 2, cells, gens, hp_diamond_Z2(n).dims())


def diamond_relations(n):
    """y_{ij} y_{jk} = 0 over middles that share an index."""
    mids = list(range(2, n + 1))        # b_1 .. b_{n-1}; b_n is traded in
    rels = []
    y = lambda i, j: f"y({min(i, j)},{max(i, j)})"
    for i, j, k in itertools.combinations(mids, 3):
        for a_, b_, c_ in ((i, j, k), (i, k, j), (j, k, i)):
            rels.append((f"{y(a_, b_)}*{y(b_, c_)}",
                         [(1, (y(a_, b_), y(b_, c_)))]))
    return rels
