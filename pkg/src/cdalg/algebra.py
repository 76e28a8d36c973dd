"""Anticommutative algebras given by structure constants."""

from __future__ import annotations

from typing import Mapping, Sequence

import numpy as np

from .exactlinalg import QQ, Field, FieldMismatchError, Fp, Subspace, kernel


class NotAnIdealError(ValueError):
    pass


def _contract(a: np.ndarray, b: np.ndarray, axes) -> np.ndarray:
    return np.tensordot(a, b, axes=axes)


class Algebra:
    """Finite-dimensional anticommutative algebra over an exact field.

    ``c[i, j, k]`` is the k-th coordinate of ``e_i e_j``.  Indices are 0-based
    in the Python API; tables built with :meth:`from_products` and the text
    file format use the 1-based numbering of the usual multiplication tables.
    """

    def __init__(self, c, field: Field = QQ, name: str | None = None,
                 params: Mapping | None = None, basis_names: Sequence[str] | None = None):
        c = field.array(c)
        if c.size == 0:
            n = c.shape[0] if c.ndim == 3 else 0
            c = field.zeros((n, n, n))
        if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]):
            raise ValueError(f"structure tensor must be n x n x n, got {c.shape}")
        n = c.shape[0]
        for i in range(n):
            if any(c[i, i, :]):
                raise ValueError(f"e{i + 1} e{i + 1} != 0: not anticommutative")
            for j in range(i + 1, n):
                if any(x + y for x, y in zip(c[i, j, :], c[j, i, :])):
                    raise ValueError(f"e{i + 1} e{j + 1} != -e{j + 1} e{i + 1}: not anticommutative")
        self.c = c
        self.c.flags.writeable = False
        self.field = field
        self.name = name
        self.params = dict(params or {})
        self.basis_names = list(basis_names) if basis_names else [f"e{i + 1}" for i in range(n)]
        self._jt = None

    @classmethod
    def from_products(cls, field: Field, dim: int, products: Mapping, **kw) -> "Algebra":
        """Build from ``{(i, j): {k: coeff}}`` with 1-based ``i < j``; the rest follows by anticommutativity."""
        c = field.zeros((dim, dim, dim))
        for (i, j), out in products.items():
            if not (1 <= i < j <= dim):
                raise ValueError(f"bad product indices ({i}, {j})")
            for k, v in out.items():
                c[i - 1, j - 1, k - 1] = field(v)
                c[j - 1, i - 1, k - 1] = -field(v)
        return cls(c, field, **kw)

    @classmethod
    def abelian(cls, n: int, field: Field = QQ) -> "Algebra":
        return cls(field.zeros((n, n, n)), field, name=f"abelian{n}")

    @property
    def dim(self) -> int:
        return self.c.shape[0]

    def __repr__(self):
        label = self.name or "Algebra"
        return f"<{label} dim={self.dim} over {self.field}>"

    def products(self) -> dict:
        """Nonzero products ``{(i, j): {k: coeff}}``, 1-based, ``i < j``."""
        out = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                row = {k + 1: self.c[i, j, k] for k in range(self.dim) if self.c[i, j, k]}
                if row:
                    out[(i + 1, j + 1)] = row
        return out

    def same_table(self, other: "Algebra") -> bool:
        return (self.field == other.field and self.dim == other.dim
                and all(a == b for a, b in zip(self.c.reshape(-1), other.c.reshape(-1))))

    # elements -----------------------------------------------------------

    def element(self, coords) -> np.ndarray:
        v = self.field.array(coords)
        if v.shape != (self.dim,):
            raise ValueError(f"element must have {self.dim} coordinates, got {v.shape}")
        return v

    def basis(self, i: int) -> np.ndarray:
        v = self.field.zeros(self.dim)
        v[i] = self.field.one
        return v

    def zero(self) -> np.ndarray:
        return self.field.zeros(self.dim)

    def _elem(self, u) -> np.ndarray:
        u = np.asarray(u, dtype=object)
        if u.shape != (self.dim,):
            raise ValueError(f"element must have {self.dim} coordinates, got {u.shape}")
        for x in u:
            self.field(x)  # raises on foreign scalars
        return u

    def multiply(self, u, v) -> np.ndarray:
        u, v = self._elem(u), self._elem(v)
        if self.dim == 0:
            return self.zero()
        return _contract(v, _contract(u, self.c, (0, 0)), (0, 0)) + self.field.zero

    def jacobiator(self, x, y, z) -> np.ndarray:
        """``(xy)z + (zx)y + (yz)x``."""
        m = self.multiply
        return m(m(x, y), z) + m(m(z, x), y) + m(m(y, z), x)

    def jacobiator_tensor(self) -> np.ndarray:
        """``J[a, b, z, k]``: k-th coordinate of ``J(e_a, e_b, e_z)``."""
        if self._jt is None:
            c = self.c
            cc = _contract(c, c, (2, 0))  # cc[a,b,z,k] = ((e_a e_b) e_z)_k
            # (xy)z + (zx)y + (yz)x with x=a, y=b
            t1 = cc
            t2 = cc.transpose(1, 2, 0, 3)  # ((z a) b) -> index order a,b,z
            t3 = cc.transpose(2, 0, 1, 3)  # ((b z) a)
            self._jt = t1 + t2 + t3
        return self._jt

    def right_mult(self, a) -> np.ndarray:
        """Matrix of ``x -> x a`` (column j is ``e_j a``)."""
        a = self._elem(a)
        if self.dim == 0:
            return self.field.zeros((0, 0))
        # R[k, j] = sum_i a_i c[j, i, k]
        return _contract(a, self.c, (0, 1)).T + self.field.zero

    def left_mult(self, a) -> np.ndarray:
        """Matrix of ``x -> a x``."""
        return -self.right_mult(a)

    # subspaces ----------------------------------------------------------

    def center(self) -> Subspace:
        n = self.dim
        # rows (j, k), columns i: (e_i e_j)_k
        m = self.c.transpose(1, 2, 0).reshape(n * n, n)
        return kernel(m, self.field) if n else Subspace.zero(0, self.field)

    def lie_center(self) -> Subspace:
        """Elements z with J(a, b, z) = 0 for all a, b."""
        n = self.dim
        if n == 0:
            return Subspace.zero(0, self.field)
        jt = self.jacobiator_tensor()
        m = jt.transpose(0, 1, 3, 2).reshape(n * n * n, n)
        return kernel(m, self.field)

    def is_ideal(self, sub: Subspace) -> bool:
        for v in sub.vectors():
            for j in range(self.dim):
                if self.multiply(v, self.basis(j)) not in sub:
                    return False
        return True

    def quotient(self, ideal: Subspace, name: str | None = None) -> "Algebra":
        """Induced product on the standard basis vectors off the ideal's pivots."""
        if ideal.ambient_dim != self.dim:
            raise ValueError("ideal lives in a different space")
        if ideal.field != self.field:
            raise FieldMismatchError(f"{ideal.field} vs {self.field}")
        if not self.is_ideal(ideal):
            raise NotAnIdealError("subspace is not an ideal")
        keep = [i for i in range(self.dim) if i not in ideal.pivots]
        q = len(keep)
        c = self.field.zeros((q, q, q))
        for a, i in enumerate(keep):
            for b, j in enumerate(keep):
                w = self.c[i, j, :].copy()
                for r, p in enumerate(ideal.pivots):
                    if w[p]:
                        w = w - w[p] * ideal.basis[r]
                c[a, b, :] = [w[k] for k in keep]
        names = [self.basis_names[i] for i in keep]
        return Algebra(c, self.field, name=name or (f"{self.name}/I" if self.name else None),
                       basis_names=names)

    def direct_sum(self, other: "Algebra", name: str | None = None) -> "Algebra":
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        n, m = self.dim, other.dim
        c = self.field.zeros((n + m, n + m, n + m))
        c[:n, :n, :n] = self.c
        c[n:, n:, n:] = other.c
        if name is None and self.name and other.name:
            name = f"{self.name}+{other.name}"
        return Algebra(c, self.field, name=name)

    def with_field(self, field: Field) -> "Algebra":
        """Same table read in another field (entries must be representable)."""
        c = np.empty(self.c.shape, dtype=object)
        flat = c.reshape(-1)
        for i, x in enumerate(self.c.reshape(-1)):
            flat[i] = field(int(x) if isinstance(x, Fp) else x)
        return Algebra(c, field, name=self.name, params=self.params, basis_names=self.basis_names)

    def is_abelian(self) -> bool:
        return not any(self.c.reshape(-1))


def multiply(A: Algebra, u, v):
    return A.multiply(u, v)


def jacobiator(A: Algebra, x, y, z):
    return A.jacobiator(x, y, z)


def center(A: Algebra) -> Subspace:
    return A.center()


def lie_center(A: Algebra) -> Subspace:
    return A.lie_center()


def quotient(A: Algebra, ideal: Subspace) -> Algebra:
    return A.quotient(ideal)


def direct_sum(A: Algebra, B: Algebra) -> Algebra:
    return A.direct_sum(B)
