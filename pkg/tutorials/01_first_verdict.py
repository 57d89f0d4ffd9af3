"""
A first verdict
===============

Two squarefree monomial ideals in a polynomial ring over F_32003, checked for
sequential Cohen-Macaulayness by three independent criteria.
"""

from seqcm_engine import parse, seqcm_verdict

# An edge {x2, x3} together with an isolated vertex {x1}: the ideal is
# (x1) intersected with (x2, x3), a plane and a line of different dimensions.
edge_and_vertex = parse("""
ring 3 32003
module 1
twists 0
gen [x1*x2]
gen [x1*x3]
""")

report = seqcm_verdict(edge_and_vertex.submodule, mode="generic", seed=7)
print("edge and vertex")
print("  Ext test          :", report.peskine.verdict)
print("  Hilbert functions :", report.herzog_sbarra.verdict)
print("  arithmetic degree :", report.adeg.verdict, report.adeg.U.total, "vs", report.adeg.V.total)

# Each nonzero Ext^{n-i} comes with a certificate (i, dim, depth).
for i, j, dim, depth, ok in report.peskine.certificates:
    print(f"  Ext^{j}: dim {dim}, depth {depth}, expected {i} -> {'ok' if ok else 'bad'}")

# Two planes in 4-space meeting only at the origin.  The quotient has depth 1
# and dimension 2, and the defect shows up as a finite-length Ext^3.
two_planes = parse("""
ring 4
module 1
gen [x1*x3]
gen [x1*x4]
gen [x2*x3]
gen [x2*x4]
""")

report = seqcm_verdict(two_planes.submodule, mode="generic", seed=0)
print("two planes")
print("  verdicts (ext, hilbert, adeg):", report.verdicts)
print("  adeg per r of F/U  :", report.adeg.U.per_r)
print("  adeg per r of F/gin:", report.adeg.V.per_r)
print("  gin:", report.initial_module)
