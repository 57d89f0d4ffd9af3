"""
When coordinates matter
=======================

With the given coordinates, the Hilbert-function and arithmetic-degree
criteria need x_n, ..., x_1 to be a filter-regular sequence.  After a random
change of coordinates this holds, and the initial module becomes the generic
initial module.
"""

from seqcm_engine.checks import hf_recursion
from seqcm_engine.corpus import ideal
from seqcm_engine.genericity import gin_revlex, is_filter_regular_sequence
from seqcm_engine.seqcm import seqcm_verdict

planes = ideal(4, lambda x: [x[1] * x[3], x[1] * x[4], x[2] * x[3], x[2] * x[4]])

rep = is_filter_regular_sequence(planes)
print("as given:", rep.overall, "first failure at x%d" % rep.first_failure())
for i, dim, ok in rep.entries:
    print(f"  x{i}: dim of (U' : x{i})/U' = {dim}  {'ok' if ok else 'fails'}")

verdict = seqcm_verdict(planes, mode="as-given")
print("as-given report: ext test", verdict.peskine.verdict, "| other criteria applicable:", verdict.applicable)

g = gin_revlex(planes, seed=5)
print("after a random change:", is_filter_regular_sequence(g.transformed).overall)
print("gin:", g.module, "seeds tried:", len(g.seeds_tried))

# For sequentially Cohen-Macaulay modules in generic coordinates, cutting by
# x_n shifts each Ext down by one index and differentiates its Hilbert function.
line_and_point = ideal(3, lambda x: [x[1] * x[2], x[1] * x[3], x[2] * x[3] - x[3] ** 2])
gU = gin_revlex(line_and_point, seed=1).transformed
print("recursion mismatches:", hf_recursion(gU))
