"""
Ext modules and the arithmetic degree
=====================================

The arithmetic degree adds up the multiplicities e_r of Ext^{n-r}(F/U, S),
keeping only those Ext modules of the expected dimension r.  For monomial
ideals it also counts standard pairs, which gives an independent check.
"""

from seqcm_engine import bruteforce as bf
from seqcm_engine.corpus import ideal
from seqcm_engine.ext import ext_profile, free_resolution
from seqcm_engine.hilbert import monomial_components
from seqcm_engine.seqcm import adeg, semicontinuity_chain

# (x1^2, x1*x2) in k[x1, x2]: the line x1 = 0 with an embedded point.
U = ideal(2, lambda x: [x[1] ** 2, x[1] * x[2]])

res = free_resolution(U)
print("Betti numbers:", res.betti(), "twists:", [m.twists for m in res.modules])

prof = ext_profile(U)
for r in range(U.n, -1, -1):
    e = prof[r]
    print(f"Ext^{e.ext_index}: dim {e.dm.dim:2d}  e {e.dm.e}  adeg_{r} = {e.adeg}")

a = adeg(U)
print("adeg =", a.total, "per r:", a.per_r)
print("standard pairs:", bf.standard_pairs(monomial_components(U)[0], U.n))

# Degenerating to an initial module can only increase each adeg_r.  For a
# non-monomial ideal the three columns below are adeg_r of U, of its partial
# revlex initial module and of its revlex initial module.
V = ideal(3, lambda x: [x[1] * x[2] - x[3] ** 2, x[1] ** 2 * x[3]])
for r, triple in enumerate(semicontinuity_chain(V)):
    print("r =", r, triple)
