"""
Checking against a limit
========================

The closed-form recipes avoid poles by fusing factors.  Independently,
we can take the full product of rational factors along a curve through
the evaluation point and let the curve parameter go to 1.
"""

from hecke_fusion.diagram import parse_diagram
from hecke_fusion.field import QQ
from hecke_fusion.fusion import (
    OracleError, admissible_q_values, compute_E_limiting, compute_E_oracle, specialize,
)

lam = parse_diagram("[1,2];[1,1]")
E = compute_E_limiting(lam)

# symbolic in q
print("symbolic oracle agrees:", compute_E_oracle(lam) == E)

# q replaced by random rationals, away from roots of unity
for q0 in admissible_q_values(3, lam.n, seed=1):
    print("q =", QQ.format(q0), "agrees:", compute_E_oracle(lam, q=q0) == specialize(E, q0))

# a row list breaking the diagram condition keeps a pole
try:
    compute_E_oracle([(1, 1), (2, 3)])
except OracleError as err:
    print("non-diagram:", err)
