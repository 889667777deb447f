import time
from posetlie import poset as P
from posetlie.liealg import PosetLieAlgebra, REFLEXIVE, STRICT
from posetlie import homology as H

t0 = time.time()
g = PosetLieAlgebra(P.diamond(6), REFLEXIVE)
table = H.poset_homology_Z(g)
print(f"D6: dim={g.dim} {time.time()-t0:.1f}s", flush=True)
print(table.text(), flush=True)

t0 = time.time()
g = PosetLieAlgebra(P.chain(7), STRICT)
table = H.poset_homology_Z(g)
print(f"nil7: dim={g.dim} {time.time()-t0:.1f}s", flush=True)
print(table.text(), flush=True)
