import time
from posetlie import poset as P
from posetlie.liealg import PosetLieAlgebra, REFLEXIVE
from posetlie import homology as H

for name, p in [("D5", P.diamond(5)), ("K43", P.complete_bipartite(4, 3))]:
    t0 = time.time()
    g = PosetLieAlgebra(p, REFLEXIVE)
    table = H.poset_homology_Z(g)
    print(f"{name}: dim={g.dim} {time.time()-t0:.1f}s", flush=True)
    print(table.text(), flush=True)
