"""Operator spaces of a CD algebra: right multiplications, derivations, their brackets."""

from cdalg import catalog
from cdalg.operators import (
    commutator, derivation_algebra, is_cd_operator_test, right_mult_space, semidirect_r_der, summary,
)
from cdalg.varieties import holds

B = catalog.b61(-1)
print("dimensions for", B.name, summary(B).as_dict())

# In a CD algebra every [R_a, R_b] is a derivation.
print("operator test:", is_cd_operator_test(B))

# The malcev7 algebra fails it, and the first bad pair is reported.
print("malcev7 operator test:", is_cd_operator_test(catalog.malcev7()))

# With the bracket order flipped, [D, R_a] = R_{D(a)} for each derivation D.
R, der = right_mult_space(B), derivation_algebra(B)
D = der.matrices()[0]
a = B.basis(0)
print("[D, R_a] == R_{D(a)}:", (commutator(D, B.right_mult(a), flip=True) == B.right_mult(D.dot(a))).all())

S = semidirect_r_der(B)
print(f"R + Der has dimension {S.dim} and is Lie: {holds(S, 'lie')}")
