"""
Coefficient matrices over the max-times semiring
================================================

A recursive max-linear model on a DAG propagates shocks multiplicatively
along directed paths, and the value at each vertex is the *best* (largest)
weighted path product from any noise source.  This script builds the
four-vertex diamond, computes its coefficient matrix with the semiring
closure, and cross-checks against exhaustive path enumeration.
"""

import numpy as np

from maxlinbn import (
    Dag,
    MaxLinearModel,
    brute_force_coefficients,
    max_times_product,
    path_weight,
)

# The diamond: two routes from vertex 1 to vertex 4.
#
#        2
#      /   \
#    1       4
#      \   /
#        3
g = Dag(4, [(1, 2), (1, 3), (2, 4), (3, 4)])
weights = {(1, 2): 0.5, (1, 3): 0.8, (2, 4): 0.6, (3, 4): 0.9}
model = MaxLinearModel(g, weights)

print("edge-weight matrix C (row = target, column = source):")
print(model.C)

# The closure accumulates best path products; entry (4, 1) picks the better
# of the two routes: 0.6 * 0.5 = 0.30 via vertex 2, 0.9 * 0.8 = 0.72 via 3.
print("\ncoefficient matrix B = closure(C):")
print(model.B)
print("\nbest path weight 1 ~> 4:", model.B[3, 0])
print("route via 2:", path_weight(model.C, [1, 2, 4]))
print("route via 3:", path_weight(model.C, [1, 3, 4]))

# Exhaustive enumeration of all directed paths gives the same matrix.
oracle = brute_force_coefficients(g, model.C)
print("\nbrute-force enumeration agrees:", np.array_equal(model.B, oracle))

# The closure is a fixed point of the semiring product: composing best
# paths with best paths cannot improve on best paths.
print("B (x) B == B:", np.allclose(max_times_product(model.B, model.B), model.B))

# The sign pattern of B is exactly the reachability relation of the DAG.
print("sgn(B) == reachability:", np.array_equal(model.B > 0, np.asarray(g.reach)))
