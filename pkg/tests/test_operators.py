import numpy as np
import pytest
from hypothesis import given, strategies as st

from cdalg import GF, QQ, catalog
from cdalg.operators import (
    OperatorSpace, commutator, cd_derivations, derivation_algebra, inner_derivations,
    is_cd_operator_test, is_derivation, lie_center_operator_check, lie_multiplication_algebra,
    r_plus_der_dimension_check, right_mult_space, semidirect_r_der, summary,
)
from cdalg.varieties import holds


def test_right_multiplication_matrix():
    L = catalog.sl2()
    assert (L.right_mult(L.basis(0)) == np.diag(QQ.array([0, -2, 2]))).all()


def test_commutator_basics():
    L = catalog.sl2()
    f = L.right_mult(L.basis(1))
    g = L.right_mult(L.basis(2))
    assert not commutator(f, f).any()
    assert not commutator(QQ.eye(3), g).any()
    assert (commutator(f, g, flip=True) == -commutator(f, g)).all()
    with pytest.raises(ValueError):
        commutator(QQ.eye(2), QQ.eye(3))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_abelian(n):
    A = catalog.abelian(n)
    assert derivation_algebra(A).dim == n * n
    assert cd_derivations(A).dim == n * n
    assert right_mult_space(A).dim == 0


def test_sl2_spaces():
    L = catalog.sl2()
    assert derivation_algebra(L).dim == 3
    M, _ = lie_multiplication_algebra(L)
    assert M.dim == 3 and M.closed
    assert inner_derivations(L).dim == 3
    S = semidirect_r_der(L)
    assert S.dim == 6 and holds(S, "lie")


@pytest.mark.parametrize("alpha", [0, 1, -1])
def test_b61_operators(alpha):
    B = catalog.b61(alpha)
    ok, pair = is_cd_operator_test(B)
    assert ok and pair is None
    der = derivation_algebra(B)
    R = [B.right_mult(B.basis(i)) for i in range(6)]
    for i in range(6):
        for j in range(6):
            assert commutator(R[i], R[j]) in der
    cdd = cd_derivations(B)
    for r in R:
        assert r in cdd


def test_malcev7_fails_operator_test():
    ok, pair = is_cd_operator_test(catalog.malcev7())
    assert not ok and pair is not None


def test_derivations_checked_pointwise(everything):
    for A in everything:
        if A.dim > 7:
            continue
        der = derivation_algebra(A)
        for D in der.matrices():
            assert is_derivation(A, D)
        # the identity map is a derivation only when every product vanishes
        assert (A.field.eye(A.dim) in der) == A.is_abelian()


def test_convention_flip_keeps_subspaces():
    B = catalog.b61(1)
    R = [B.right_mult(B.basis(i)) for i in range(6)]
    ops = [commutator(R[i], R[j]) for i in range(6) for j in range(i + 1, 6)]
    flipped = [commutator(R[i], R[j], flip=True) for i in range(6) for j in range(i + 1, 6)]
    assert OperatorSpace.span(B, ops).space == OperatorSpace.span(B, flipped).space


def _bracket_rule_holds(A):
    """[D, R_a] = R_{D(a)} for every derivation D and basis vector a."""
    for D in derivation_algebra(A).matrices():
        for i in range(A.dim):
            a = A.basis(i)
            lhs = commutator(D, A.right_mult(a), flip=True)
            if (lhs != A.right_mult(D.dot(a))).any():
                return False
    return True


def test_derivation_bracket_with_right_multiplication(small_cd):
    for A in small_cd:
        assert _bracket_rule_holds(A), A.name


def test_operator_structure_on_cd_algebras(small_cd):
    for A in small_cd:
        R, der = right_mult_space(A), derivation_algebra(A)
        assert R.dim == A.dim - A.center().dim
        assert der.contains(inner_derivations(A))
        Rm = R.matrices()
        for f in Rm:
            for g in Rm:
                assert commutator(f, g) in der
            for D in der.matrices():
                assert commutator(D, f) in R
        lz_z, inter = lie_center_operator_check(A)
        assert lz_z == inter
        total, expected = r_plus_der_dimension_check(A)
        assert total == expected
        assert holds(semidirect_r_der(A), "lie")


def test_summary_document():
    s = summary(catalog.b61(1)).as_dict()
    assert s["Z"] == 1 and s["lemma_jz"]
    assert set(s) == {"Z", "LZ", "Der", "R", "M", "Inner", "R_cap_Der", "LZ_mod_Z", "lemma_jz"}


def test_over_fp():
    L = catalog.sl2(GF(7))
    assert derivation_algebra(L).dim == 3
    assert is_cd_operator_test(catalog.b61(1, GF(5)))[0]


@given(st.sampled_from(["sl2", "h3", "b61"]), st.lists(st.integers(-3, 3), min_size=12, max_size=12))
def test_commutator_is_antisymmetric_and_bilinear(name, xs):
    A = {"sl2": catalog.sl2, "h3": catalog.heisenberg3, "b61": catalog.b61}[name]()
    n = A.dim
    f = A.right_mult(A.element(xs[:n]))
    g = A.right_mult(A.element(xs[6:6 + n]))
    assert (commutator(f, g) == -commutator(g, f)).all()
    assert (commutator(f + g, g) == commutator(f, g)).all()
