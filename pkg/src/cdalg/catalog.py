"""Named algebras used throughout the package.

Every builder takes an optional ``field`` and returns a fresh :class:`Algebra`.
"""

from __future__ import annotations

import numpy as np

from .algebra import Algebra
from .exactlinalg import QQ, Field
from .identities.monomials import degree, monomials_up_to, mul, to_str

# sl2 in the basis (h, e, f)
_SL2 = {(1, 2): {2: 2}, (1, 3): {3: -2}, (2, 3): {1: 1}}


def sl2(field: Field = QQ) -> Algebra:
    """sl2 in the basis (h, e, f): he = 2e, hf = -2f, ef = h."""
    return Algebra.from_products(field, 3, _SL2, name="sl2", basis_names=["h", "e", "f"])


def heisenberg3(field: Field = QQ) -> Algebra:
    """Three-dimensional Heisenberg algebra, e1 e2 = e3."""
    return Algebra.from_products(field, 3, {(1, 2): {3: 1}}, name="heisenberg3")


def r2(field: Field = QQ) -> Algebra:
    """Two-dimensional nonabelian Lie algebra, e1 e2 = e1."""
    return Algebra.from_products(field, 2, {(1, 2): {1: 1}}, name="r2")


def r2_plus_k(field: Field = QQ) -> Algebra:
    """r2 plus a one-dimensional abelian summand."""
    return r2(field).direct_sum(Algebra.abelian(1, field), name="r2+K")


def abelian(n: int = 1, field: Field = QQ) -> Algebra:
    """Abelian algebra of dimension n."""
    return Algebra.abelian(n, field)


def b61(alpha=1, field: Field = QQ) -> Algebra:
    """The six-dimensional nilpotent family B_{6,1}^alpha (CD but not Malcev)."""
    a = field(alpha)
    table = {(1, 2): {4: 1}, (1, 3): {5: 1}, (4, 5): {6: 1}}
    if a:
        table[(2, 3)] = {6: a}
    return Algebra.from_products(field, 6, table, name="b61", params={"alpha": field.format(a)})


def free_anticommutative(generators: int, nil_class: int, field: Field = QQ) -> Algebra:
    """Free anticommutative algebra truncated above degree ``nil_class``.

    Products of more than ``nil_class`` generators are zero.  The basis is the list of canonical monomials of degree 1..nil_class.
    """
    if generators < 1 or nil_class < 1:
        raise ValueError("need at least one generator and class >= 1")
    letters = "xyzwuvst"
    names = list(letters[:generators]) if generators <= len(letters) else [f"x{i + 1}" for i in range(generators)]
    basis = monomials_up_to(names, nil_class)
    index = {t: i for i, t in enumerate(basis)}
    n = len(basis)
    c = field.zeros((n, n, n))
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            if degree(u) + degree(v) > nil_class:
                continue
            s, t = mul(u, v)
            if s:
                c[i, j, index[t]] = field(s)
    return Algebra(c, field, name="free",
                   params={"generators": generators, "class": nil_class},
                   basis_names=[to_str(t) for t in basis])


def _cd_double(mult, conj, gamma):
    """One Cayley-Dickson step: (a,b)(c,d) = (ac + gamma d*b, da + b c*)."""

    def m(x, y):
        h = len(x) // 2
        a, b, c, d = x[:h], x[h:], y[:h], y[h:]
        first = mult(a, c) + gamma * mult(conj(d), b)
        second = mult(d, a) + mult(b, conj(c))
        return np.concatenate([first, second])

    def cj(x):
        h = len(x) // 2
        return np.concatenate([conj(x[:h]), -x[h:]])

    return m, cj


def octonion_product(field: Field = QQ, params=(-1, -1, -1)):
    """Multiplication and conjugation on 8-vectors (real part first)."""
    mult = lambda x, y: x * y  # noqa: E731 -- the ground field, as 1-vectors
    conj = lambda x: x  # noqa: E731
    for g in params:
        mult, conj = _cd_double(mult, conj, field(g))
    return mult, conj


def malcev7(field: Field = QQ) -> Algebra:
    """Traceless octonions under the commutator ``xy - yx``: a simple 7-dim Malcev algebra."""
    mult, _ = octonion_product(field)
    units = [field.array([1 if k == i else 0 for k in range(8)]) for i in range(8)]
    c = field.zeros((7, 7, 7))
    for i in range(7):
        for j in range(7):
            u, v = units[i + 1], units[j + 1]
            w = mult(u, v) - mult(v, u)
            if w[0]:
                raise AssertionError("commutator of imaginary units left the traceless part")
            c[i, j, :] = w[1:]
    return Algebra(c, field, name="malcev7", basis_names=[f"i{k}" for k in range(1, 8)])


CATALOG = {
    "sl2": (sl2, {}),
    "heisenberg3": (heisenberg3, {}),
    "r2": (r2, {}),
    "r2k": (r2_plus_k, {}),
    "abelian": (abelian, {"n": 1}),
    "b61": (b61, {"alpha": 1}),
    "free": (free_anticommutative, {"generators": 3, "nil_class": 3}),
    "malcev7": (malcev7, {}),
}


def build(name: str, field: Field = QQ, **params) -> Algebra:
    """Build a catalog algebra by name; unknown keyword parameters are rejected."""
    try:
        builder, defaults = CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown algebra {name!r}; known: {', '.join(sorted(CATALOG))}") from None
    kw = dict(defaults)
    for k, v in params.items():
        if k not in defaults:
            raise TypeError(f"{name} takes no parameter {k!r}")
        if v is not None:
            kw[k] = v
    return builder(field=field, **kw)


def cd_examples(field: Field = QQ) -> list[Algebra]:
    """The CD algebras of the catalog (Lie ones included)."""
    return [
        sl2(field), heisenberg3(field), r2(field), r2_plus_k(field), abelian(3, field),
        b61(0, field), b61(1, field), b61(-1, field), free_anticommutative(3, 3, field),
    ]


def all_examples(field: Field = QQ) -> list[Algebra]:
    return cd_examples(field) + [malcev7(field), free_anticommutative(2, 4, field)]
