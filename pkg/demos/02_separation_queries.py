"""
Separation queries: path blocking versus moralization
======================================================

Whether two vertex sets are graphically independent given a third can be
read off a DAG in two ways: by checking that every connecting path is
blocked, or by moralizing the ancestral part of the graph and testing
ordinary undirected separation.  Both answers always coincide.
"""

from maxlinbn import Dag, d_separated, enumerate_independences, m_separated, markov_statements

# Diamond with a tail hanging off the sink:
#
#        2
#      /   \
#    1       4 --- 5
#      \   /
#        3
g = Dag(5, [(1, 2), (1, 3), (2, 4), (3, 4), (4, 5)])

# Conditioning on the common source 1 blocks the top route 2 <- 1 -> 3,
# and the collider at 4 stays inactive, so 2 and 3 are separated.
print("2 _|_ 3 | {1}:")
print("  path blocking :", d_separated(g, {2}, {3}, {1}))
print("  moralization  :", m_separated(g, {2}, {3}, {1}))

# Adding the tail vertex 5 to the conditioning set activates the collider
# at 4 (it now has a conditioned descendant), reconnecting 2 and 3.
print("2 _|_ 3 | {1, 5}:")
print("  path blocking :", d_separated(g, {2}, {3}, {1, 5}))
print("  moralization  :", m_separated(g, {2}, {3}, {1, 5}))

# Per-vertex Markov statements.  The ordered variant conditions each vertex
# against its predecessors, the local one against all non-descendants.
h = Dag(6, [(1, 2), (1, 3), (2, 4), (3, 4), (4, 6), (2, 5)])
print("\nordered Markov statements:")
for st in markov_statements(h, "ordered"):
    print(" ", st)
print("local Markov statements:")
for st in markov_statements(h, "local"):
    print(" ", st)

# The full singleton independence model is small enough to enumerate.
stmts = enumerate_independences(h, max_cond=1)
holding = [st for st in stmts if st.holds]
print(f"\n{len(holding)} of {len(stmts)} singleton statements with |S| <= 1 hold, e.g.:")
for st in holding[:5]:
    print(" ", st)
