import random

import pytest
from hypothesis import given, settings, strategies as st

from posetlie import chevalley as C
from posetlie import poset as P
from posetlie.liealg import PosetLieAlgebra, REFLEXIVE, STRICT


def test_mask_wedge_roundtrip():
    for wedge in [(), (0,), (0, 3, 5), (1, 2, 7)]:
        assert C.mask_wedge(C.wedge_mask(wedge)) == wedge
    with pytest.raises(ValueError):
        C.boundary(PosetLieAlgebra(P.chain(3), STRICT), (2, 1))


def test_boundary_smallest_case():
    # chain(3): basis e12, e13, e23 with [e12, e23] = e13
    g = PosetLieAlgebra(P.chain(3), STRICT)
    a, b, c = g.index[(1, 2)], g.index[(2, 3)], g.index[(1, 3)]
    img = C.boundary(g, tuple(sorted((a, b))))
    assert set(img) == {(c,)} and abs(img[(c,)]) == 1
    assert C.boundary(g, (a,)) == {}


def test_d_squared_zero_everywhere():
    for p in (P.chain(4), P.diamond(2), P.complete_bipartite(2, 2),
              P.fork(2), P.umbrella(2)):
        for mode in (REFLEXIVE, STRICT):
            g = PosetLieAlgebra(p, mode)
            if g.dim > 12:
                continue
            c = C.build_complex(g)
            c.check_d_squared()


def test_d_squared_on_random_boundaries():
    g = PosetLieAlgebra(P.complete_bipartite(2, 3), REFLEXIVE)
    rng = random.Random(7)
    for _ in range(300):
        mask = rng.getrandbits(g.dim)
        total = {}
        for m1, c1 in C.boundary_mask(g, mask).items():
            for m2, c2 in C.boundary_mask(g, m1).items():
                total[m2] = total.get(m2, 0) + c1 * c2
        assert not any(total.values())


def test_weight_vector_additive_under_boundary():
    g = PosetLieAlgebra(P.diamond(2), STRICT)
    for mask in range(1, 1 << g.dim):
        w = C.weight_vector(g, mask)
        for m2 in C.boundary_mask(g, mask):
            assert C.weight_vector(g, m2) == w


def test_weight_blocks_partition_everything():
    for p in (P.chain(3), P.fork(1), P.cycle_poset(2)):
        g = PosetLieAlgebra(p, STRICT)
        blocks = C.weight_blocks(g)
        assert sum(b.total_cells() for b in blocks.values()) == 1 << g.dim
        for w, b in blocks.items():
            assert b.weight == w
            for k in range(b.max_degree + 1):
                for m in b.cells.get(k, []):
                    assert C.weight_vector(g, m) == w


def test_block_decompose_matches_weight_blocks():
    g = PosetLieAlgebra(P.chain(4), STRICT)
    full = C.build_complex(g)
    blocks = C.block_decompose(full)
    assert sum(b.total_cells() for b in blocks) == full.total_cells()


def test_masks_with_weight_vs_enumeration():
    g = PosetLieAlgebra(P.complete_bipartite(2, 2), STRICT)
    for mod in (2, 3):
        want = sorted(m for m in range(1 << g.dim)
                      if all(x % mod == 0 for x in C.weight_vector(g, m)))
        got = sorted(C.masks_with_weight(g, mod=mod))
        assert got == want
    zero = tuple([0] * g.poset.n)
    want0 = sorted(m for m in range(1 << g.dim)
                   if C.weight_vector(g, m) == zero)
    assert sorted(C.masks_with_weight(g, target=zero)) == want0


def test_p_complex_membership():
    g = PosetLieAlgebra(P.complete_bipartite(2, 2), STRICT)
    sub = C.p_complex(g, 2)
    sub.check_d_squared()
    members = {m for ms in sub.cells.values() for m in ms}
    for m in range(1 << g.dim):
        inside = all(x % 2 == 0 for x in C.weight_vector(g, m))
        assert (m in members) == inside
    with pytest.raises(ValueError):
        C.p_complex(PosetLieAlgebra(P.chain(2), REFLEXIVE), 2)


def test_p_complex_nonempty_agrees():
    for n in range(2, 5):
        for p in P.all_posets(n):
            g = PosetLieAlgebra(p, STRICT)
            for q in (2, 3, 5, 7):
                flag = C.p_complex_nonempty(g, q)
                real = any(k > 0 and ms
                           for k, ms in C.p_complex(g, q).cells.items())
                assert flag == real, (p.strict_pairs, q)


def test_p_complex_nonempty_reflexive_trivial():
    # a lone diagonal generator always has weight zero
    g = PosetLieAlgebra(P.chain(2), REFLEXIVE)
    assert all(C.p_complex_nonempty(g, q) for q in (2, 3, 5, 997))


def test_matrix_shapes_and_boundary_of():
    g = PosetLieAlgebra(P.chain(3), STRICT)
    c = C.build_complex(g)
    for k in range(1, c.max_degree + 1):
        mat = c.matrix(k)
        assert mat.nrows == c.dim(k - 1)
        assert mat.ncols == c.dim(k)
    m = C.wedge_mask((0, 1, 2))
    assert c.boundary_of(m) == C.boundary_mask(g, m)


def test_convex_summand():
    d = P.diamond(2)
    g = PosetLieAlgebra(d, STRICT)
    sub = C.convex_summand(g, {2, 3})    # the middle antichain: no strict pairs
    assert sub.total_cells() == 1          # only the empty wedge survives
    sub2 = C.convex_summand(g, {2, 3, 4})  # join of two middles: 2 generators
    assert sub2.total_cells() == 4
    sub2.check_d_squared()
    with pytest.raises(C.ConvexityError):
        C.convex_summand(g, {1, 4})


def test_build_complex_degree_cap():
    g = PosetLieAlgebra(P.chain(4), STRICT)
    c = C.build_complex(g, max_degree=2)
    assert c.max_degree <= 2
    full = C.build_complex(g)
    assert c.dims() == full.dims()[:3]


@given(st.integers(0, 10**6))
@settings(max_examples=200, deadline=None)
def test_boundary_drops_degree_by_one(seed):
    g = PosetLieAlgebra(P.umbrella(2), STRICT)
    rng = random.Random(seed)
    mask = rng.getrandbits(g.dim)
    k = mask.bit_count()
    for m2 in C.boundary_mask(g, mask):
        assert m2.bit_count() == k - 1
