import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cdalg import GF, QQ, catalog
from cdalg.identities import (
    BUILTINS, FreeElement, IdentitySyntaxError, NotHomogeneousError, canonical, check_consequence,
    consequence_space, expand, is_consequence, monomial_basis, monomials_up_to, multilinearize,
    parse_identity,
)
from cdalg.identities.monomials import degree, mul, to_str
from cdalg.identities.parser import Equation, Jac, Prod, Var
from cdalg.varieties import holds

import oracles


def X(name):
    return FreeElement.var(name)


# parsing ----------------------------------------------------------------

def test_parse_binary_lie():
    eq = parse_identity("((x*y)*x)*y = ((x*y)*y)*x")
    xy = Prod(Var("x"), Var("y"))
    assert eq == Equation(Prod(Prod(xy, Var("x")), Var("y")), Prod(Prod(xy, Var("y")), Var("x")))


def test_parse_jacobiator_macro():
    eq = parse_identity("J(x,y,z)")
    assert eq.lhs == Jac(Var("x"), Var("y"), Var("z")) and eq.rhs is None
    assert len(expand(eq)) == 3


@pytest.mark.parametrize("text", ["x*y*z", "(x*y", "J(x,y)", "x = ", "x + * y", "J(x,y,z,w)", "x @ y", ""])
def test_parse_errors(text):
    with pytest.raises(IdentitySyntaxError):
        parse_identity(text)


def test_parse_error_reports_position():
    with pytest.raises(IdentitySyntaxError) as info:
        parse_identity("(x*y)*z*w")
    assert info.value.pos > 0


def test_juxtaposition_and_coefficients():
    assert expand("2(x*y)*z") == expand("(x*y)*z + (x*y)*z")
    assert expand("3J(x,y,z) = 0") == expand("J(x,y,z)").scale(3)


# expansion ----------------------------------------------------------------

def test_expand_examples():
    assert not expand("(x*y) + (y*x)")
    assert not expand("x*x")
    cd = expand("cd")
    assert len(cd) == 6
    assert all(Counter(_leaves(t)) == Counter("abxy") for t in cd.terms)
    assert all(degree(t) == 4 for t in cd.terms)


def test_not_homogeneous_rejected():
    with pytest.raises(NotHomogeneousError):
        multilinearize("x*y + (x*y)*z")


def test_builtins_parse():
    for name in BUILTINS:
        assert expand(name)


# monomials ----------------------------------------------------------------

def test_monomial_basis_sizes():
    assert [to_str(t) for t in monomial_basis("xy")] == ["xy"]
    assert len(monomial_basis("xyz")) == 3
    b4 = monomial_basis("xyzw")
    assert len(b4) == 15
    shapes = Counter(isinstance(t[0], str) or isinstance(t[1], str) for t in b4)
    assert shapes[True] == 12 and shapes[False] == 3


@pytest.mark.parametrize("variables", ["xy", "xyz", "xyzw", "abcde"])
def test_multilinear_basis_matches_enumeration(variables):
    assert len(monomial_basis(variables)) == len(oracles.multilinear_monomials(variables))


@pytest.mark.parametrize("gens,d", [("xy", 4), ("xyz", 3), ("xyz", 4)])
def test_monomials_up_to_matches_enumeration(gens, d):
    assert len(monomials_up_to(gens, d)) == len(oracles.free_monomials(gens, d))


@st.composite
def trees(draw, depth=3):
    if depth == 0 or draw(st.booleans()):
        return draw(st.sampled_from("xyzw"))
    return (draw(trees(depth=depth - 1)), draw(trees(depth=depth - 1)))


@given(trees(), trees())
def test_mul_is_anticommutative(u, v):
    su, cu = canonical(u)
    sv, cv = canonical(v)
    if not su or not sv:
        return
    s1, t1 = mul(cu, cv)
    s2, t2 = mul(cv, cu)
    assert t1 == t2 and s1 == -s2


@given(trees())
def test_canonical_is_idempotent(t):
    s, c = canonical(t)
    if s:
        assert canonical(c) == (1, c)
    assert canonical((t, t))[0] == 0


@given(st.permutations(["(x*y)*z", "2(z*x)*y", "3(y*z)*x", "(x*z)*y"]))
def test_expand_ignores_summand_order(terms):
    a = expand("(x*y)*z + 2(z*x)*y + 3(y*z)*x + (x*z)*y")
    assert expand(" + ".join(terms)) == a


# multilinearization ---------------------------------------------------------

def _multilinear_part(f, variables):
    want = Counter(variables)
    return FreeElement({t: c for t, c in f.terms.items() if Counter(_leaves(t)) == want})


def _leaves(t):
    return [t] if isinstance(t, str) else _leaves(t[0]) + _leaves(t[1])


def test_binary_lie_polarization_matches_substitution():
    comps = multilinearize("binary-lie")
    assert len(comps) == 1
    g = comps[0]
    assert sorted(g.variables()) == ["x_1", "x_2", "y_1", "y_2"]
    f = expand("binary-lie")
    sub = f.substitute({"x": X("x_1") + X("x_2"), "y": X("y_1") + X("y_2")})
    assert g == _multilinear_part(sub, ["x_1", "x_2", "y_1", "y_2"])


def test_malcev_polarization_matches_substitution():
    comps = multilinearize("malcev")
    assert len(comps) == 1
    sub = expand("malcev").substitute({"x": X("x_1") + X("x_2")})
    assert comps[0] == _multilinear_part(sub, ["x_1", "x_2", "y", "z"])


def test_restitution():
    g = multilinearize("binary-lie")[0]
    back = g.rename({"x_1": "x", "x_2": "x", "y_1": "y", "y_2": "y"})
    assert back == expand("binary-lie").scale(4)


@pytest.mark.parametrize("name", ["lie", "cd", "sagle", "almost-lie", "eq4", "jj", "msagle"])
def test_multilinear_identities_are_fixed_points(name):
    assert multilinearize(name) == [expand(name)]


def test_polarization_needs_large_characteristic():
    with pytest.raises(ValueError):
        multilinearize("((((x*y)*x)*x)*x)*x", GF(5))
    assert multilinearize("binary-lie", GF(5))


# consequences ---------------------------------------------------------------

def test_consequence_space_examples():
    jac = expand("lie")
    cs = consequence_space([jac], ["x", "y", "z", "w"])
    assert expand("J(x,y,z)*w") in cs
    assert expand("J(x*w,y,z)") in cs

    malcev = multilinearize("malcev")
    cs = consequence_space(malcev, 4)
    assert expand("msagle").rename(dict(zip(["w", "x", "y", "z"], ["v01", "v02", "v03", "v04"]))) in cs

    cs = consequence_space([expand("cd")], ["a", "b", "x", "y"])
    assert expand("J(x,y,a)*b") in cs
    assert cs.dim < 15


def test_consequence_space_rejects_high_degree():
    with pytest.raises(ValueError):
        consequence_space([expand("cd")], 3)


@pytest.mark.parametrize("S,g,want", [
    (["lie"], "cd", True),
    (["binary-lie", "almost-lie"], "cd", True),
    (["cd"], "binary-lie", True),
    (["almost-lie"], "cd", False),
    (["lie"], "malcev", True),
    (["malcev"], "almost-lie", False),
    (["sagle"], "almost-lie", False),
])
def test_is_consequence_examples(S, g, want):
    assert is_consequence(S, g) is want


def test_certificate_reconstructs_target():
    res = check_consequence(["binary-lie", "almost-lie"], "cd")
    assert res.derivable
    for g, cs, coords in res.components:
        combo = [sum((c * v[k] for c, v in zip(coords, cs.space.vectors())), QQ.zero)
                 for k in range(len(cs.basis))]
        assert combo == g.coefficients(cs.basis)


def test_consequences_over_fp_agree():
    for S, g in [(["cd"], "almost-lie"), (["almost-lie"], "cd"), (["malcev"], "msagle")]:
        assert is_consequence(S, g, GF(7)) == is_consequence(S, g)


# soundness against algebras --------------------------------------------------

PAIRS = [(["cd"], "binary-lie"), (["cd"], "almost-lie"), (["malcev"], "msagle"),
         (["almost-lie", "eq4"], "malcev"), (["binary-lie", "almost-lie"], "jj"),
         (["malcev", "sagle"], "eq4"), (["lie"], "sagle")]


def test_derivable_implications_hold_on_catalog(everything):
    for S, g in PAIRS:
        assert is_consequence(S, g)
        for A in everything:
            if all(holds(A, s) for s in S):
                assert holds(A, g), (S, g, A.name)


def test_hand_written_identities_agree_with_engine(everything):
    rng = random.Random(11)
    for A in everything:
        if A.dim > 9:
            continue
        for name in oracles.HAND:
            assert oracles.hand_holds(A, name, rng) == holds(A, name), (A.name, name)
