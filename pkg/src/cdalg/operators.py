"""Operator spaces attached to an algebra: R(A), Der(A), M(A) and friends.

Operators are n x n matrices acting on coordinate columns, so ``D[k, i]`` is
the ``e_k`` coordinate of ``D(e_i)``.  Operator spaces are subspaces of the
n^2-dimensional space of matrices, flattened row-major.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import lcm

import numpy as np

from .algebra import Algebra
from .exactlinalg import Subspace, kernel, matmul


def right_mult(A: Algebra, a) -> np.ndarray:
    """Matrix of ``x -> x a``."""
    return A.right_mult(a)


def commutator(f: np.ndarray, g: np.ndarray, flip: bool = False) -> np.ndarray:
    """``[f, g] = g∘f - f∘g`` where ``g∘f(a) = g(f(a))``.

    With ``flip=True`` the opposite order ``f∘g - g∘f`` is used; this is the
    order under which ``[D, R_a] = R_{D(a)}`` for a derivation ``D``.
    """
    f = np.asarray(f, dtype=object)
    g = np.asarray(g, dtype=object)
    if f.shape != g.shape:
        raise ValueError("operators of different sizes")
    out = matmul(g, f) - matmul(f, g)
    return -out if flip else out


@dataclass
class OperatorSpace:
    algebra: Algebra
    space: Subspace
    closed: bool | None = None  # verified closure under commutator, if checked

    @classmethod
    def span(cls, A: Algebra, ops, closed=None) -> "OperatorSpace":
        n = A.dim
        return cls(A, Subspace.span([np.asarray(o, dtype=object).reshape(-1) for o in ops], n * n, A.field), closed)

    @property
    def dim(self) -> int:
        return self.space.dim

    def matrices(self) -> list[np.ndarray]:
        n = self.algebra.dim
        return [v.reshape(n, n) for v in self.space.vectors()]

    def __contains__(self, op) -> bool:
        return np.asarray(op, dtype=object).reshape(-1) in self.space

    def contains(self, other: "OperatorSpace") -> bool:
        return self.space.contains(other.space)

    def __add__(self, other: "OperatorSpace") -> "OperatorSpace":
        return OperatorSpace(self.algebra, self.space + other.space)

    def __and__(self, other: "OperatorSpace") -> "OperatorSpace":
        return OperatorSpace(self.algebra, self.space & other.space)

    def is_closed(self) -> bool:
        mats = self.matrices()
        return all(commutator(f, g) in self for i, f in enumerate(mats) for g in mats[i + 1:])

    def coordinates(self, op):
        return self.space.coordinates(np.asarray(op, dtype=object).reshape(-1))

    def __repr__(self):
        return f"<OperatorSpace dim={self.dim} on {self.algebra!r}>"


def right_mult_space(A: Algebra) -> OperatorSpace:
    """R(A), the span of all right multiplications."""
    return OperatorSpace.span(A, [A.right_mult(A.basis(i)) for i in range(A.dim)])


# linear systems in the unknown operator ---------------------------------

def _scaled_c(A: Algebra):
    """Structure tensor as integers (mod p, or with denominators cleared)."""
    f = A.field
    flat = list(A.c.reshape(-1))
    if f.p is None:
        den = reduce(lcm, (x.denominator for x in flat), 1)
        ints = [int(x * den) for x in flat]
    else:
        ints = [int(x) for x in flat]
    big = max((abs(x) for x in ints), default=0)
    dtype = np.int64 if (big + 1) ** 2 * max(A.dim, 1) ** 3 * 8 < 2 ** 62 else object
    return np.array(ints, dtype=dtype).reshape(A.c.shape)


def _operator_batch(n: int, dtype) -> np.ndarray:
    """All matrix units E_{kt}, stacked: B[k*n + t, k, t] = 1."""
    B = np.zeros((n * n, n, n), dtype=dtype)
    for k in range(n):
        for t in range(n):
            B[k * n + t, k, t] = 1
    return B


def _solve_operators(A: Algebra, residual) -> Subspace:
    """Kernel of the linear map ``D -> residual(c, D)`` over all matrices D."""
    n = A.dim
    if n == 0:
        return Subspace.full(0, A.field)
    c = _scaled_c(A)
    B = _operator_batch(n, c.dtype)
    R = residual(c, B)  # batch axis first
    mat = R.reshape(n * n, -1).T
    if A.field.p is not None:
        mat = mat % A.field.p
    rows = [[A.field(int(x)) for x in row] for row in mat if any(row)]
    if not rows:
        return Subspace.full(n * n, A.field)
    return kernel(rows, A.field)


def _derivation_residual(c, B):
    # D(xy) - D(x)y - xD(y), indexed [batch, x, y, k]
    return (np.einsum(c, [0, 1, 20], B, [50, 2, 20], [50, 0, 1, 2], optimize=True)
            - np.einsum(B, [50, 20, 0], c, [20, 1, 2], [50, 0, 1, 2], optimize=True)
            - np.einsum(B, [50, 20, 1], c, [0, 20, 2], [50, 0, 1, 2], optimize=True))


def _cd_derivation_residual(c, B):
    # D((xy)a) - D(xy)a - D(xa)y + D(ya)x + (D(x)a)y - (D(y)a)x, indexed [batch, x, y, a, k]
    cc = np.einsum(c, [0, 1, 20], c, [20, 2, 3], [0, 1, 2, 3])
    x, y, a, k, s, t = 0, 1, 2, 3, 20, 21
    out = [50, x, y, a, k]

    def d_of_prod_times(u, v, w):  # D(uv) w
        return np.einsum(c, [u, v, t], B, [50, s, t], c, [s, w, k], out, optimize=True)

    def d_then(u, v, w):  # (D(u) v) w
        return np.einsum(B, [50, s, u], cc, [s, v, w, k], out, optimize=True)

    return (np.einsum(cc, [x, y, a, t], B, [50, k, t], out, optimize=True)
            - d_of_prod_times(x, y, a) - d_of_prod_times(x, a, y) + d_of_prod_times(y, a, x)
            + d_then(x, a, y) - d_then(y, a, x))


def derivation_algebra(A: Algebra) -> OperatorSpace:
    """Der(A): solutions of D(e_i e_j) = D(e_i) e_j + e_i D(e_j)."""
    space = OperatorSpace(A, _solve_operators(A, _derivation_residual))
    space.closed = space.is_closed()
    return space


def is_derivation(A: Algebra, D) -> bool:
    D = np.asarray(D, dtype=object)
    for i in range(A.dim):
        for j in range(A.dim):
            x, y = A.basis(i), A.basis(j)
            lhs = D.dot(A.multiply(x, y))
            rhs = A.multiply(D.dot(x), y) + A.multiply(x, D.dot(y))
            if any(lhs - rhs):
                return False
    return True


def cd_derivations(A: Algebra) -> OperatorSpace:
    """Linear maps D with D((xy)a) - D(xy)a - D(xa)y + D(ya)x + (D(x)a)y - (D(y)a)x = 0."""
    return OperatorSpace(A, _solve_operators(A, _cd_derivation_residual))


def is_cd_operator_test(A: Algebra) -> tuple[bool, tuple | None]:
    """Is every ``[R_{e_i}, R_{e_j}]`` a derivation?  Returns the first failing pair (0-based)."""
    der = derivation_algebra(A)
    R = [A.right_mult(A.basis(i)) for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            if commutator(R[i], R[j]) not in der:
                return False, (i, j)
    return True, None


def lie_multiplication_algebra(A: Algebra) -> tuple[OperatorSpace, int]:
    """M(A): the commutator closure of R(A), and the number of bracket rounds used."""
    n = A.dim
    R = right_mult_space(A).matrices()
    S = OperatorSpace.span(A, R)
    rounds = 0
    while rounds < max(n * n, 1):
        new = [commutator(s, r) for s in S.matrices() for r in R]
        T = S + OperatorSpace.span(A, new) if new else S
        if T.dim == S.dim:
            break
        S = T
        rounds += 1
    S.closed = S.is_closed()
    return S, rounds


def inner_derivations(A: Algebra) -> OperatorSpace:
    """Span of R_z (z in LZ(A)) and all [R_a, R_b]."""
    ops = [A.right_mult(z) for z in A.lie_center().vectors()]
    R = [A.right_mult(A.basis(i)) for i in range(A.dim)]
    ops += [commutator(R[i], R[j]) for i in range(A.dim) for j in range(i + 1, A.dim)]
    return OperatorSpace.span(A, ops)


def semidirect_r_der(A: Algebra) -> Algebra:
    """The formal sum R(A) + Der(A) as a Lie algebra.

    Basis: echelon basis of R(A), then echelon basis of Der(A).  Brackets of
    two R's land in the Der part, mixed brackets in the R part.
    """
    Rs = right_mult_space(A)
    Ds = derivation_algebra(A)
    rb, db = Rs.matrices(), Ds.matrices()
    r, d = len(rb), len(db)
    basis = [("R", m) for m in rb] + [("D", m) for m in db]
    f = A.field
    c = f.zeros((r + d, r + d, r + d))
    for i, (ki, mi) in enumerate(basis):
        for j, (kj, mj) in enumerate(basis):
            if j <= i:
                continue
            br = commutator(mi, mj)
            target, offset = (Rs, 0) if (ki, kj) in (("R", "D"), ("D", "R")) else (Ds, r)
            coords = target.coordinates(br)
            if coords is None:
                raise ValueError("A is not CD: a bracket leaves R(A) + Der(A)")
            for k, v in enumerate(coords):
                c[i, j, offset + k] = v
                c[j, i, offset + k] = -v
    names = [f"R{k + 1}" for k in range(r)] + [f"D{k + 1}" for k in range(d)]
    return Algebra(c, f, name=f"R+Der({A.name})" if A.name else None, basis_names=names)


def lie_center_operator_check(A: Algebra) -> tuple[int, int]:
    """``(dim LZ(A)/Z(A), dim R(A) ∩ Der(A))``; equal for CD algebras."""
    lz, z = A.lie_center(), A.center()
    inter = right_mult_space(A) & derivation_algebra(A)
    return lz.quotient_dim(z), inter.dim


def r_plus_der_dimension_check(A: Algebra) -> tuple[int, int]:
    """``(dim(R(A) + Der(A)), dim A - dim LZ(A) + dim Der(A))``."""
    der = derivation_algebra(A)
    total = right_mult_space(A) + der
    return total.dim, A.dim - A.lie_center().dim + der.dim


@dataclass(frozen=True)
class OperatorSummary:
    center: int
    lie_center: int
    derivations: int
    right_mult: int
    multiplication_algebra: int
    inner_derivations: int
    r_cap_der: int
    lz_mod_z: int

    @property
    def lemma_jz(self) -> bool:
        return self.lz_mod_z == self.r_cap_der

    def as_dict(self) -> dict:
        return {
            "Z": self.center, "LZ": self.lie_center, "Der": self.derivations, "R": self.right_mult,
            "M": self.multiplication_algebra, "Inner": self.inner_derivations,
            "R_cap_Der": self.r_cap_der, "LZ_mod_Z": self.lz_mod_z, "lemma_jz": self.lemma_jz,
        }


def summary(A: Algebra) -> OperatorSummary:
    lz_z, inter = lie_center_operator_check(A)
    return OperatorSummary(
        center=A.center().dim, lie_center=A.lie_center().dim,
        derivations=derivation_algebra(A).dim, right_mult=right_mult_space(A).dim,
        multiplication_algebra=lie_multiplication_algebra(A)[0].dim,
        inner_derivations=inner_derivations(A).dim, r_cap_der=inter, lz_mod_z=lz_z,
    )
