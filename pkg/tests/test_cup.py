import json

import pytest

from posetlie import cup as CUP
from posetlie import poset as P
from posetlie.families import HPSeries, hp_diamond_Z2, hp_umbrella_Z2


def test_chain_product_basics():
    # disjoint supports multiply, overlapping supports die
    assert CUP.chain_product({0b0011: 1}, {0b1100: 1}, 2) in ({0b1111: 1},)
    assert CUP.chain_product({0b0011: 1}, {0b0110: 1}, 2) == {}
    # sign bookkeeping stays in the field
    out = CUP.chain_product({0b01: 1}, {0b10: 1}, 3)
    assert set(out) == {0b11} and out[0b11] in (1, 2)


def test_wedge_concat_sign():
    s1, m = CUP.wedge_concat(0b0001, 0b0010)
    s2, _ = CUP.wedge_concat(0b0010, 0b0001)
    assert m == 0b0011
    assert s1 == -s2       # swapping two odd-degree factors flips the sign


def test_height1_basis_dims_match_series():
    for m, n in ((2, 2), (3, 2)):
        p = P.complete_bipartite(m, n)
        basis = CUP.height1_basis(p, 2)
        from posetlie.subgraphs import enumerate_p_plus_regular
        want = (HPSeries.one_plus_t_pow(m + n) *
                enumerate_p_plus_regular(p, 2)).dims()
        assert basis.dims() == want


def test_height1_disjoint_product_rule():
    # edge-cycle classes multiply iff their edge sets are disjoint
    p = P.complete_bipartite(3, 2)
    basis = CUP.height1_basis(p, 2)
    table = CUP.wedge_basis_cup(basis)
    edge_gens = [a for a in basis.generators if a.startswith("y(")]
    by_edges = {a: frozenset(e for e in a[2:-1].split(",")) for a in edge_gens}
    for a in edge_gens:
        for b in edge_gens:
            prod = table.products[(a, b)]
            if by_edges[a] & by_edges[b]:
                assert prod == {}, (a, b)
            else:
                assert prod, (a, b)     # disjoint unions survive as classes


def test_height1_vertex_classes_anticommute():
    basis = CUP.height1_basis(P.complete_bipartite(2, 2), 2)
    table = CUP.wedge_basis_cup(basis)
    assert table.check_graded_commutative()
    assert table.check_associative()
    # x_v^2 = 0
    for v in range(1, 5):
        assert table.mul({f"x{v}": 1}, {f"x{v}": 1}) == {}


def test_umbrella_presentation():
    for n in (2, 3):
        basis = CUP.umbrella_basis(n)
        assert basis.dims() == hp_umbrella_Z2(n).dims()
        table = CUP.wedge_basis_cup(basis)
        report = CUP.verify_presentation(table, CUP.umbrella_relations(n))
        assert report["ok"], report
        assert report["degrees_ok"] and report["generators_span"]
        assert all(report["relations"].values())


def test_diamond_presentation():
    for n in (2, 3):
        basis = CUP.diamond_basis(n)
        assert basis.dims() == hp_diamond_Z2(n).dims()
        table = CUP.wedge_basis_cup(basis)
        report = CUP.verify_presentation(table, CUP.diamond_relations(n))
        assert report["ok"], report


def test_minimal_generator_probe():
    basis = CUP.height1_basis(P.complete_bipartite(2, 2), 2)
    table = CUP.wedge_basis_cup(basis)
    # 4 vertex classes + the single 4-cycle class
    assert CUP.minimal_generator_probe(table) == 5


def test_char_guards():
    with pytest.raises(ValueError):
        CUP.diamond_basis(2, char=3)
    with pytest.raises(CUP.HeightError):
        CUP.height1_basis(P.chain(3), 2)


def test_table_json():
    basis = CUP.height1_basis(P.complete_bipartite(2, 2), 2)
    table = CUP.wedge_basis_cup(basis)
    doc = json.loads(table.to_json())
    assert doc["char"] == 2
    assert "x1" in doc["generators"]
    assert doc["products"]


def test_basis_rejects_wrong_dims():
    p = P.complete_bipartite(2, 2)
    g = CUP.PosetLieAlgebra(p, CUP.REFLEXIVE)
    with pytest.raises(AssertionError):
        CUP.CohomologyBasis(g, 2, [], {}, expect_dims=[5])


def test_expand_rejects_foreign_chain():
    basis = CUP.height1_basis(P.complete_bipartite(2, 2), 2)
    g = basis.algebra
    stray = 1 << g.index[(1, 3)]    # a lone edge generator: not a basis cell
    with pytest.raises(CUP.BasisError):
        basis.expand({stray: 1}, 1)
