"""
Eigenvector and intertwiner
===========================

Right multiplication by the fusion element maps one induced module to
the one with reversed character.  The element is also a joint
eigenvector of the X_k.
"""

from hecke_fusion.diagram import parse_diagram
from hecke_fusion.fusion import compute_E_limiting
from hecke_fusion.induced import character_of, check_intertwiner, cyclic_dim, eigencheck, w0_twist

lam = parse_diagram("[1,2];[1,1]")
E = compute_E_limiting(lam)
chi = character_of(lam)
print("character:", chi, " reversed:", w0_twist(chi))

res = eigencheck(lam, E)
print("eigenvector:", res.ok, " eigenvalues", tuple(str(v) for v in res.eigenvalues))

print("intertwines:", check_intertwiner(E, chi, w0_twist(chi)).ok)

# the identity element does not
bad = check_intertwiner(E.algebra.one, chi, w0_twist(chi))
print("identity intertwines:", bad.ok, " first failure at", bad.counterexample)

print("dimension of the cyclic module:", cyclic_dim(lam))
