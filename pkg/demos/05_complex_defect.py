"""A place where the degree-0 to degree-2 composite is not zero.

For the adjoint module of sl2, the tensor part e (x) f of a 0-cochain maps to a
1-cochain whose image under the next differential is nonzero.  The Lie-center
part of the domain behaves.  Cohomology in degree 1 is therefore reported as
Z / (Z & B).
"""

from cdalg import QQ, catalog
from cdalg.cohomology import ZeroCochain, adjoint_module, cohomology, differential

L = catalog.sl2()
M = adjoint_module(L)
t = QQ.zeros((3, 3))
t[1, 2] = QQ(1)  # e (x) f
psi = differential("cd", 0, ZeroCochain(QQ.zeros(3), t), L, M)
print("psi(h) =", [str(x) for x in psi.tensor[0]])
print("d psi (h, e) =", [str(x) for x in differential("cd", 1, psi, L, M).tensor[0, 1]])

dims = cohomology("cd", L, M, 1)
print("H^1:", dims.as_dict(), "complex:", dims.is_complex)
