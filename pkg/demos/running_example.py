"""
Computing a fusion element two ways
===================================

Three rows, the first two parallel.  We build the element with the
pair-by-pair recipe and with the row-block recipe and compare.
"""

from hecke_fusion.diagram import parse_diagram, render, w_lambda
from hecke_fusion.fusion import limiting_plan, shortening_plan
from hecke_fusion.hecke import leading_terms

lam = parse_diagram("[1,2];[2,3];[2,3]")
print(render(lam))
print("contents:", lam.filling.content)

# one factor per pair, singular pairs fused with a neighbour
lim = limiting_plan(lam)
print("\nlimiting  ", lim)

# row blocks collapse to sums over subgroups, parallel blocks to one scalar
short = shortening_plan(lam)
print("shortening", short)

E = lim.evaluate()
assert E == short.evaluate()
print("\n%d basis terms" % len(E))

# the top term sits at w_lambda, not at the longest element
word, w = w_lambda(lam)
(top, coeff), = leading_terms(E).items()
assert top == w
print("top term: (%s) * T_w with w =" % coeff, "".join("s%d" % k for k in word))
