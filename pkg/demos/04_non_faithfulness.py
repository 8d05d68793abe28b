"""
Non-faithfulness and the minimal DAG
====================================

Max-linear models satisfy every independence their DAG encodes, but on
graphs with parallel routes they satisfy *more*: whichever of the two
diamond routes carries the smaller weight product can be severed without
changing the joint law of the remaining coordinates.  The DAG itself stays
edge-minimal - no edge can be dropped globally - yet the distribution is
not faithful to it.
"""

import numpy as np

from maxlinbn import (
    Dag,
    MaxLinearModel,
    WeightKind,
    admissible_weights,
    d_separated,
    marginal_rows,
    minimal_dag,
)

g = Dag(4, [(1, 2), (1, 3), (2, 4), (3, 4)])
weights = {(1, 2): 0.5, (1, 3): 0.8, (2, 4): 0.6, (3, 4): 0.9}
model = MaxLinearModel(g, weights)

lo = weights[(2, 4)] * weights[(1, 2)]
hi = weights[(3, 4)] * weights[(1, 3)]
print(f"route products: via 2 = {lo}, via 3 = {hi}; the route via 3 dominates")

# Delete the edge 1 -> 2.  Only row 2 of the coefficient matrix changes, so
# the joint distribution of (X1, X3, X4) is identical in both models.
sub = Dag(4, [(1, 3), (2, 4), (3, 4)])
reduced = MaxLinearModel(sub, {e: weights[e] for e in sub.edges})
same = np.array_equal(marginal_rows(model.B, {1, 3, 4}), marginal_rows(reduced.B, {1, 3, 4}))
print("rows {1,3,4} of B unchanged after deleting 1 -> 2:", same)

# In the reduced DAG, 1 and 4 are separated by 3, so X1 _|_ X4 | X3 holds
# there - and therefore also in the full model, whose DAG does NOT separate
# 1 from 4 given 3.  That is the faithfulness violation.
print("1 _|_ 4 | 3 in reduced DAG:", d_separated(sub, {1}, {4}, {3}))
print("1 _|_ 4 | 3 in full DAG   :", d_separated(g, {1}, {4}, {3}))

# Still, no edge of the diamond is globally redundant.
g_min, w_min = minimal_dag(model.B)
print("\nminimal DAG equals the diamond:", g_min == g, "with weights", w_min)

# A DAG with the extra chord 1 -> 4 also represents the model; the chord's
# weight is free inside an open interval, the true edges are pinned.
chorded = Dag(4, [(1, 2), (1, 3), (2, 4), (3, 4), (1, 4)])
for edge, (kind, bound) in admissible_weights(model.B, chorded).items():
    tag = "fixed at" if kind is WeightKind.FIXED else "free in (0,"
    suffix = "" if kind is WeightKind.FIXED else ")"
    print(f"  edge {edge}: {tag} {bound}{suffix}")
