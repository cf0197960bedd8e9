"""
The special order on pairs
==========================

Pairs (i, j) are grouped by the rows holding i and j.  Singular pairs
(same content) are starred; each fused singular pair is underlined
together with the neighbour it absorbs.
"""

from hecke_fusion.coxeter import order_to_word
from hecke_fusion.diagram import enumerate_diagrams, parallel_data, parse_diagram, special_order

lam = parse_diagram("[1,2];[2,3];[2,3]")
order = special_order(lam)
print(order.table())
print("\nfused pairs:", order.R)
print("partners:   ", [order.partner(p) for p in order.R])

# the order is convex: reading it gives a reduced word of the longest element
word = order_to_word(order.pairs, lam.n)
print("word:", word)

# fused count is singular count minus parallel-row pairs, on every small diagram
bad = 0
for d in enumerate_diagrams(4, 4):
    pd = parallel_data(d)
    bad += len(special_order(d).R) != pd.d_lambda - pd.p_lambda
print("diagrams of degree 4 violating the count:", bad)
