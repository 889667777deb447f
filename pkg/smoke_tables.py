import time
from posetlie import poset as P
from posetlie.liealg import PosetLieAlgebra, REFLEXIVE, STRICT
from posetlie import homology as H

def show(name, p, want):
    t0 = time.time()
    g = PosetLieAlgebra(p, REFLEXIVE)
    table = H.poset_homology_Z(g)
    dt = time.time() - t0
    got = list(table.groups)
    want = [H.HomologyGroup(f, t) for f, t in want]
    ok = got == want
    print(f"{name}: dim={g.dim} {dt:.2f}s {'MATCH' if ok else 'MISMATCH'}")
    if not ok:
        for k, (grp, w) in enumerate(zip(table.groups, want)):
            flag = "" if grp == w else "   <-- want " + w.text()
            print(f"  H_{k} = {grp.text()}{flag}")
    return ok

Z2 = lambda k: tuple([2] * k)
ok = True
# K_{3,2}
want = [(1, ()), (5, ()), (10, ()), (10, ()), (5, Z2(3)), (1, Z2(12)),
        (0, Z2(18)), (0, Z2(12)), (0, Z2(3)), (0, ()), (0, ()), (0, ())]
ok &= show("K32", P.complete_bipartite(3, 2), want)

# diamond(2)
want = [(1, ()), (4, ()), (6, ()), (4, (2,)), (1, (2, 2, 2)),
        (0, (2, 2, 2, 3)), (0, (2, 3, 3, 3)), (0, (3, 3, 3)), (0, (3,)), (0, ())]
ok &= show("D2", P.diamond(2), want)

# diamond(3): has Z_4 entries
want = [(1, ()), (5, ()), (10, ()), (10, (2,)), (5, Z2(5)),
        (1, Z2(10) + (3, 3)), (0, Z2(10) + (3,) * 8), (0, Z2(5) + (4,) + (3,) * 12),
        (0, (2, 4, 4, 4, 4) + (3,) * 8), (0, (4,) * 6 + (3, 3)), (0, (4,) * 4),
        (0, (4,)), (0, ())]
ok &= show("D3", P.diamond(3), want)
print("ALL MATCH" if ok else "FAILURES")
