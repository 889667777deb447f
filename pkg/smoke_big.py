import time
from posetlie import poset as P
from posetlie.liealg import PosetLieAlgebra, REFLEXIVE
from posetlie import homology as H

def run(name, p):
    t0 = time.time()
    g = PosetLieAlgebra(p, REFLEXIVE)
    table = H.poset_homology_Z(g)
    print(f"{name}: dim={g.dim} {time.time()-t0:.1f}s")
    print(table.text())
    return table

run("K42", P.complete_bipartite(4, 2))
run("D4", P.diamond(4))
run("K33", P.complete_bipartite(3, 3))
run("K52", P.complete_bipartite(5, 2))
