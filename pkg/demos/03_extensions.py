"""Second cohomology and central extensions.

A central extension by phi is CD exactly when phi is a CD 2-cocycle, and Lie
exactly when phi is a Chevalley-Eilenberg cocycle.  r2 + K has cochains that
give almost-Lie extensions which are not CD.
"""

import random

import numpy as np

from cdalg import catalog
from cdalg.cohomology import central_extension, cocycle_space, cohomology, random_cochain, trivial_module
from cdalg.varieties import holds

A = catalog.r2_plus_k()
M = trivial_module(A)
for theory in ("ce", "cd", "almost-lie"):
    print(f"{theory:>10}: {cohomology(theory, A, M).as_dict()}")

Zcd = cocycle_space("cd", A, M)
rng = random.Random(1)
for _ in range(4):
    phi = random_cochain(rng, A, M, 2)
    inside = np.array(phi.wedge_coords(), dtype=object) in Zcd
    E = central_extension(A, phi)
    print(f"phi={[str(x) for x in phi.wedge_coords()]}  cocycle={inside}  CD={holds(E, 'cd')}  almost-Lie={holds(E, 'almost-lie')}")
