"""
Stacks of parallel rows
=======================

For r parallel rows of length m the element factors into one scalar
power and a product of shifted row sums.
"""

from hecke_fusion.diagram import parse_diagram
from hecke_fusion.fusion import compute_E_shortening, f_scalar, shortening_plan
from hecke_fusion.hecke import e_sum, embed, generic_algebra

for m, r in [(1, 3), (2, 2), (3, 2)]:
    lam = parse_diagram(";".join("[%d,%d]" % (k, k + m - 1) for k in range(1, r + 1)))
    n = m * r
    A = generic_algebra(n)
    expected = A.scalar(f_scalar(m) ** (r * (r - 1) // 2))
    for h in range(0, n, m):
        expected = expected * embed(h, e_sum(m), n, A)
    print(lam, "->", shortening_plan(lam), " matches:", compute_E_shortening(lam, A) == expected)
