import time

import posetlie.poset as P
import posetlie.chevalley as C
import posetlie.homology as H
import posetlie.families as F
import posetlie.subgraphs as S
from posetlie.liealg import PosetLieAlgebra, STRICT

t0 = time.time()

# -- spec examples: p-plus-regular ------------------------------------------
k22 = P.complete_bipartite(2, 2)
assert S.enumerate_p_plus_regular(k22, 2) == F.HPSeries([1, 0, 0, 0, 1])
for n in (2, 3, 4, 6):
    cp = P.cycle_poset(n)
    f2 = S.enumerate_p_plus_regular(cp, 2)
    want = [0] * (2 * n + 1)
    want[0] = 1
    want[2 * n] = 1
    assert f2 == F.HPSeries(want), (n, f2.dims())
    assert S.enumerate_p_plus_regular(cp, 3) == F.HPSeries([1])
# trees: a star and a path, as height-1 hasse diagrams
star = P.from_hasse(5, [(1, 2), (1, 3), (1, 4), (1, 5)])
path = P.from_hasse(6, [(1, 2), (3, 2), (3, 4), (5, 4), (5, 6)])
for q in (2, 3, 5):
    assert S.enumerate_p_plus_regular(star, q) == F.HPSeries([1])
    assert S.enumerate_p_plus_regular(path, q) == F.HPSeries([1])
print("p-plus-regular examples ok", round(time.time() - t0, 2))

# iterator agrees with the counter, and degree vectors check out
subs = list(S.iter_p_plus_regular(k22, 2))
assert len(subs) == 2 and {s.size for s in subs} == {0, 4}
for s in subs:
    assert all(d % 2 == 0 for d in s.degrees().values())

# -- invariant: equals HP of the weight-divisible subcomplex (strict mode) ---
cases = [
    (P.complete_bipartite(2, 2), 2), (P.complete_bipartite(2, 2), 3),
    (P.complete_bipartite(2, 3), 2), (P.complete_bipartite(3, 3), 2),
    (P.complete_bipartite(3, 3), 3), (P.complete_bipartite(3, 4), 2),
    (P.cycle_poset(4), 2), (P.cycle_poset(5), 2), (P.cycle_poset(4), 3),
    (star, 2), (path, 2), (path, 3),
]
for p, q in cases:
    assert len(p.hasse_edges) <= 12
    gs = PosetLieAlgebra(p, STRICT)
    cplx = C.p_complex(gs, q)
    dims = H.homology_over_field(cplx, q)
    f = S.enumerate_p_plus_regular(p, q)
    assert f == F.HPSeries(dims), (p, q, f.dims(), dims)
print("p-complex comparison ok", round(time.time() - t0, 2))

# -- eulerian counts ---------------------------------------------------------
assert S.count_eulerian_by_size(k22) == F.HPSeries([1, 0, 0, 0, 1])
conv = F.HPSeries.one_plus_t_pow(1) ** 4 * S.count_eulerian_by_size(k22)
assert conv == F.hp_complete_bipartite_Z2_stanley(2, 2)
assert S.count_eulerian_by_size(path) == F.HPSeries([1])
# totals vs cycle-space dimension run as built-in asserts; exercise a few
for p in (P.complete_bipartite(3, 4), P.cycle_poset(6), star,
          P.from_hasse(7, [(1, 4), (2, 4), (3, 4), (1, 5), (2, 6), (3, 7)])):
    S.count_eulerian_by_size(p)
disc = k22.disjoint_union(P.cycle_poset(3))
assert sum(S.count_eulerian_by_size(disc).coeffs) == 4  # two independent cycles
print("eulerian ok", round(time.time() - t0, 2))

# -- even matrices -----------------------------------------------------------
assert S.enumerate_even_matrices(2, 2, 2) == F.HPSeries([1, 0, 0, 0, 1])
assert S.enumerate_even_matrices(1, 4, 2) == F.HPSeries([1])
assert S.enumerate_even_matrices(3, 2, 3) == F.HPSeries([1])  # q > min side
assert S.enumerate_even_matrices(4, 2, 3) == F.HPSeries([1])
for m in range(1, 5):
    for n in range(1, 5):
        f = S.enumerate_even_matrices(m, n, 2)
        assert sum(f.coeffs) == 1 << ((m - 1) * (n - 1)), (m, n, f.dims())
        lhs = F.HPSeries.one_plus_t_pow(1) ** (m + n) * f
        assert lhs == F.hp_complete_bipartite_Z2_stanley(m, n), (m, n)
# against the strict p-complex of K_{m,n} for q=3 too
for m, n in [(3, 3), (3, 4)]:
    gs = PosetLieAlgebra(P.complete_bipartite(m, n), STRICT)
    dims = H.homology_over_field(C.p_complex(gs, 3), 3)
    assert S.enumerate_even_matrices(m, n, 3) == F.HPSeries(dims), (m, n)
print("even matrices ok", round(time.time() - t0, 2))

# -- K_{q,q} torsion witness ---------------------------------------------------
for q in (2, 3, 5):
    cert = S.full_nondiagonal_torsion_witness(P.complete_bipartite(q, q), q)
    assert cert["ok"] and cert["cycle_boundary_zero"], cert
    assert cert["cycle_degree"] == q * q
    assert all(abs(c) == q for c in cert["bounding"].values())
print("witness q=2,3,5 ok", round(time.time() - t0, 2))

# sub-poset witnesses inside K_{5,5}
k55 = P.complete_bipartite(5, 5)
for q, keep in [(2, [1, 2, 6, 7]), (3, [1, 2, 3, 6, 7, 8])]:
    sub, _ = k55.restrict(keep)
    cert = S.full_nondiagonal_torsion_witness(sub, q)
    assert cert["ok"], (q, cert)
print("sub-poset witnesses ok", round(time.time() - t0, 2))

# -- error paths ---------------------------------------------------------------
try:
    S.enumerate_p_plus_regular(P.chain(3), 2)
    raise AssertionError("no HeightError")
except S.HeightError:
    pass
try:
    S.full_nondiagonal_torsion_witness(P.complete_bipartite(2, 3), 2)
    raise AssertionError("no ValueError")
except ValueError:
    pass

# csv surface
f = S.enumerate_even_matrices(3, 3, 2)
text = S.counts_csv(f)
assert text.splitlines()[0] == "size,count"
assert len(text.splitlines()) == len(f.coeffs) + 1
assert text.splitlines()[1] == "0,1"

print("SUBGRAPHS OK", round(time.time() - t0, 2))
