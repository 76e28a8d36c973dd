"""Which identities does an algebra satisfy, and where does each failure show up?

B61 is a six-dimensional nilpotent family that satisfies the CD identity but
not the Malcev identity.  The octonion commutator algebra goes the other way.
"""

from cdalg import catalog
from cdalg.varieties import satisfies, variety_report

for A in (catalog.sl2(), catalog.b61(1), catalog.malcev7()):
    print(variety_report(A).text(A.basis_names))
    print()

# Witnesses are the lexicographically first failing basis tuple.
ok, w = satisfies(catalog.b61(0), "malcev")
print("b61(0) Malcev?", ok, "first failure at", dict(zip(w.variables, w.indices)), "value", [str(x) for x in w.value])
