import numpy as np
import pytest
from hypothesis import given, strategies as st

from cdalg import GF, QQ, Algebra, NotAnIdealError, Subspace, catalog
from cdalg.varieties import holds

import oracles


def vec(*xs, field=QQ):
    return field.array(list(xs))


def e(A, i):
    """1-based basis vector."""
    return A.basis(i - 1)


def test_products_from_tables():
    B = catalog.b61(1)
    assert (B.multiply(e(B, 4), e(B, 5)) == e(B, 6)).all()
    assert (B.multiply(e(B, 5), e(B, 4)) == -e(B, 6)).all()
    L = catalog.sl2()
    h, x, f = (L.basis(i) for i in range(3))
    assert (L.multiply(x, f) == h).all()
    assert (L.multiply(h, x) == 2 * x).all()
    assert (L.multiply(h, f) == -2 * f).all()


@pytest.mark.parametrize("alpha", [0, 1, -1])
def test_b61_jacobiators(alpha):
    B = catalog.b61(alpha)
    assert (B.jacobiator(e(B, 1), e(B, 2), e(B, 5)) == e(B, 6)).all()
    assert not any(B.jacobiator(e(B, 1), e(B, 2), e(B, 3)))


def test_jacobiator_tensor_matches_brute_force(everything):
    for A in everything[:8]:
        T = A.jacobiator_tensor()
        nz = {tuple(int(i) for i in t) for t in zip(*np.nonzero((T != 0).any(axis=-1)))}
        assert nz == set(oracles.jacobiator_nonzero_triples(A))


def test_centers():
    assert catalog.abelian(4).center().dim == 4
    assert catalog.sl2().center().dim == 0
    for alpha in (0, 1, -1):
        B = catalog.b61(alpha)
        assert B.center() == Subspace.span([e(B, 6)], 6, QQ)


def test_lie_centers():
    for L in (catalog.sl2(), catalog.heisenberg3(), catalog.abelian(2)):
        assert L.lie_center().dim == L.dim
    B = catalog.b61(1)
    lz = B.lie_center()
    assert e(B, 6) in lz and e(B, 5) not in lz
    M = catalog.malcev7()
    assert M.lie_center().dim < M.dim


@pytest.mark.parametrize("alpha", [0, 1, -1])
def test_quotient_by_center_is_lie(alpha):
    B = catalog.b61(alpha)
    Q = B.quotient(B.center())
    assert Q.dim == 5
    want = Algebra.from_products(QQ, 5, {(1, 2): {4: 1}, (1, 3): {5: 1}})
    assert Q.same_table(want)
    assert holds(Q, "lie")


def test_trivial_quotients():
    A = catalog.b61(1)
    assert A.quotient(Subspace.zero(6, QQ)).same_table(A)
    ab = catalog.abelian(4)
    Q = ab.quotient(Subspace.span([vec(1, 1, 0, 0)], 4, QQ))
    assert Q.dim == 3 and Q.is_abelian()


def test_quotient_rejects_non_ideal():
    L = catalog.sl2()
    with pytest.raises(NotAnIdealError):
        L.quotient(Subspace.span([L.basis(0)], 3, QQ))


def test_direct_sums():
    S = catalog.r2().direct_sum(catalog.abelian(1))
    assert S.dim == 3
    assert S.center() == Subspace.span([vec(0, 0, 1)], 3, QQ)
    assert S.same_table(catalog.r2_plus_k())
    A = catalog.sl2()
    assert A.direct_sum(catalog.abelian(0)).same_table(A)
    assert catalog.abelian(2).direct_sum(catalog.abelian(3)).is_abelian()


def test_free_algebra_dimensions():
    F = catalog.free_anticommutative(2, 2)
    assert F.dim == 3 and F.basis_names[:2] == ["x", "y"]
    assert catalog.free_anticommutative(3, 1).is_abelian()
    for g, c in [(2, 2), (2, 3), (3, 3), (2, 4)]:
        gens = "xyzw"[:g]
        assert catalog.free_anticommutative(g, c).dim == len(oracles.free_monomials(gens, c))


def test_malcev7_shape():
    M = catalog.malcev7()
    assert M.dim == 7 and M.center().dim == 0


def test_rejects_non_anticommutative():
    c = QQ.zeros((2, 2, 2))
    c[0, 1, 0] = QQ(1)
    with pytest.raises(ValueError):
        Algebra(c, QQ)
    c[1, 0, 0] = QQ(-1)
    c[0, 0, 1] = QQ(1)
    with pytest.raises(ValueError):
        Algebra(c, QQ)


def test_zero_dimensional_algebra():
    Z = catalog.abelian(0)
    assert Z.dim == 0 and Z.center().dim == 0
    assert holds(Z, "cd")


def test_catalog_over_fp():
    L = catalog.sl2(GF(5))
    h, x, f = (L.basis(i) for i in range(3))
    assert (L.multiply(h, f) == L.field.array([0, 0, 3])).all()


# invariants over the catalog ----------------------------------------------

def _antisymmetric(A):
    return all(A.c[i, j, k] == -A.c[j, i, k] for i in range(A.dim) for j in range(A.dim) for k in range(A.dim))


def test_constructions_stay_anticommutative(everything):
    for A in everything:
        assert _antisymmetric(A)
    B = catalog.b61(1)
    assert _antisymmetric(B.quotient(B.center()))
    assert _antisymmetric(B.direct_sum(catalog.r2()))


def test_center_inside_lie_center(everything):
    for A in everything:
        assert A.center() <= A.lie_center()


def test_cd_algebras_quotient_and_ideal(small_cd):
    for A in small_cd:
        assert holds(A.quotient(A.center()), "lie")
        assert A.is_ideal(A.lie_center())


@pytest.mark.parametrize("g,c", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_free_nilpotent_satisfies_high_degree_identities(g, c):
    F = catalog.free_anticommutative(g, c)
    degree = {"lie": 3, "binary-lie": 4, "malcev": 4, "sagle": 4, "almost-lie": 4, "cd": 4}
    for name, d in degree.items():
        if d > c:
            assert holds(F, name), name


@given(st.sampled_from(["sl2", "b61", "malcev7", "r2+K"]),
       st.lists(st.integers(-5, 5), min_size=21, max_size=21))
def test_multiply_is_bilinear(name, xs):
    A = {"sl2": catalog.sl2, "b61": catalog.b61, "malcev7": catalog.malcev7, "r2+K": catalog.r2_plus_k}[name]()
    n = A.dim
    u, v, w = (A.element(xs[k * 7:k * 7 + n]) for k in range(3))
    a, b = QQ(xs[-2]), QQ(xs[-1])
    assert (A.multiply(a * u + b * v, w) == a * A.multiply(u, w) + b * A.multiply(v, w)).all()
    assert (A.multiply(u, v) == -A.multiply(v, u)).all()
