"""Deciding implications between identities at a fixed degree.

The consequence space of a set of multilinear identities is spanned by all
substitutions and multiplications landing in the target degree.  Membership
is a linear-algebra question over the multilinear monomial basis.
"""

from cdalg.identities import check_consequence, is_consequence

for assume, target in [
    (["binary-lie", "almost-lie"], "cd"),
    (["cd"], "binary-lie"),
    (["almost-lie"], "cd"),
    (["malcev"], "msagle"),
]:
    print(f"{' + '.join(assume):>24} => {target:<10} {is_consequence(assume, target)}")

res = check_consequence(["binary-lie", "almost-lie"], "cd")
for g, cs, coords in res.components:
    print(f"component over {cs.variables}: consequence space {cs.dim} of {len(cs.basis)} monomials")
