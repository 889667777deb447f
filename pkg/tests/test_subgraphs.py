from itertools import combinations

import pytest

from posetlie import poset as P
from posetlie import subgraphs as S
from posetlie.families import HPSeries


def _brute_regular(p, q):
    """All edge subsets with every vertex degree divisible by q, by size."""
    edges = list(p.hasse_edges)
    counts = [0] * (len(edges) + 1)
    for r in range(len(edges) + 1):
        for sub in combinations(edges, r):
            deg = {}
            for a, b in sub:
                deg[a] = deg.get(a, 0) + 1
                deg[b] = deg.get(b, 0) + 1
            if all(d % q == 0 for d in deg.values()):
                counts[r] += 1
    return HPSeries(counts)


def test_height_guard():
    with pytest.raises(S.HeightError):
        S.enumerate_p_plus_regular(P.chain(3), 2)
    with pytest.raises(S.HeightError):
        S.count_eulerian_by_size(P.diamond(2))


def test_regular_counts_vs_brute_force():
    for p in (P.complete_bipartite(2, 2), P.complete_bipartite(2, 3),
              P.cycle_poset(3), P.umbrella(3).restrict([2, 3, 4, 5])[0]):
        for q in (2, 3):
            assert S.enumerate_p_plus_regular(p, q) == _brute_regular(p, q), \
                (p.strict_pairs, q)


def test_eulerian_total_is_cycle_space():
    # K_{3,3}: |E|=9, |V|=6, connected: 2^(9-6+1) = 16 even subgraphs
    f = S.count_eulerian_by_size(P.complete_bipartite(3, 3))
    assert sum(f.coeffs) == 16
    # crown on 8 vertices is a single 8-cycle: empty set + the cycle itself
    f = S.count_eulerian_by_size(P.cycle_poset(4))
    assert f == HPSeries([1] + [0] * 7 + [1])


def test_edge_subset_object():
    p = P.complete_bipartite(2, 2)
    subs = list(S.iter_p_plus_regular(p, 2))
    assert len(subs) == 2
    sizes = sorted(s.size for s in subs)
    assert sizes == [0, 4]
    big = max(subs, key=lambda s: s.size)
    assert set(big.edges) == set(p.hasse_edges)
    assert all(d == 2 for d in big.degrees().values())


def test_even_matrices_dp_vs_brute():
    for m in range(1, 4):
        for n in range(1, 4):
            want = [0] * (m * n + 1)
            for bits in range(1 << (m * n)):
                rows = [(bits >> (i * n)) & ((1 << n) - 1) for i in range(m)]
                if any(r.bit_count() % 2 for r in rows):
                    continue
                cols = [sum((r >> j) & 1 for r in rows) for j in range(n)]
                if all(c % 2 == 0 for c in cols):
                    want[bits.bit_count()] += 1
            got = S.enumerate_even_matrices(m, n, 2)
            assert got == HPSeries(want), (m, n)


def test_even_matrices_symmetry():
    assert S.enumerate_even_matrices(3, 4, 2) == S.enumerate_even_matrices(4, 3, 2)
    assert S.enumerate_even_matrices(2, 2, 3).coeffs == (1,)  # only the zero matrix


def test_even_matrices_match_bipartite_regular_subsets():
    # a 0/1 matrix with even line sums is exactly an even subgraph of K_{m,n}
    for m, n in ((2, 2), (2, 3), (3, 3)):
        assert S.enumerate_even_matrices(m, n, 2) == \
            S.enumerate_p_plus_regular(P.complete_bipartite(m, n), 2)


def test_torsion_witness_certificate():
    for q in (2, 3):
        p = P.complete_bipartite(q, q)
        cert = S.full_nondiagonal_torsion_witness(p, q)
        assert cert["ok"]
        assert cert["cycle_boundary_zero"]
        assert cert["cycle_degree"] == q * q
        assert all(abs(c) == q for c in cert["bounding"].values())
        assert len(cert["bounding"]) == 2 * q


def test_torsion_witness_rejects_wrong_shape():
    with pytest.raises(ValueError):
        S.full_nondiagonal_torsion_witness(P.complete_bipartite(2, 3), 2)


def test_counts_csv():
    rows = S.counts_csv(HPSeries([1, 0, 2])).strip().splitlines()
    assert rows[0] == "size,count"
    assert rows[1:] == ["0,1", "1,0", "2,2"]
