"""Exact scalars (Q and prime fields) and dense exact linear algebra.

Matrices are numpy object arrays whose entries are either
``fractions.Fraction`` (over Q) or :class:`Fp` (over GF(p)).  Plain Python
ints are accepted anywhere and coerced into the working field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Field",
    "FieldMismatchError",
    "Fp",
    "GF",
    "QQ",
    "Subspace",
    "field_of",
    "image",
    "kernel",
    "matmul",
    "rank",
    "rref",
    "solve",
]


class FieldMismatchError(ValueError):
    """Scalars from two different fields met in one computation."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Fp:
    """Residue class modulo a prime ``p``; value kept in ``0..p-1``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other.v
        if isinstance(other, (int, np.integer)):
            return int(other)
        if isinstance(other, Fraction):
            raise FieldMismatchError(f"GF({self.p}) vs Q")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Fp(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(o, self.p) / self

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return Fp(pow(self.v, -1, self.p), self.p) ** (-e)
        return Fp(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class Field:
    """Exact ground field: the rationals (``p is None``) or GF(p), p >= 5."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not _is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
            if self.p in (2, 3):
                raise ValueError("characteristic 2 and 3 are not supported")

    @property
    def kind(self) -> str:
        return "rationals" if self.p is None else "prime"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __call__(self, x):
        if self.p is None:
            if isinstance(x, Fp):
                raise FieldMismatchError(f"GF({x.p}) vs Q")
            if isinstance(x, str):
                return Fraction(x.strip())
            return Fraction(x)
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldMismatchError(f"GF({x.p}) vs GF({self.p})")
            return x
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return Fp(x.numerator, self.p) / x.denominator
        return Fp(int(x), self.p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def array(self, data) -> np.ndarray:
        """Object array with every entry converted into this field."""
        arr = np.array(data, dtype=object)
        flat = arr.reshape(-1)
        for i, x in enumerate(flat):
            flat[i] = self(x)
        return flat.reshape(arr.shape)

    def zeros(self, shape) -> np.ndarray:
        arr = np.empty(shape, dtype=object)
        arr.reshape(-1)[:] = [self.zero] * arr.size
        return arr

    def eye(self, n: int) -> np.ndarray:
        m = self.zeros((n, n))
        for i in range(n):
            m[i, i] = self.one
        return m

    def format(self, x) -> str:
        """Canonical text: ``p/q`` in lowest terms over Q, residue over GF(p)."""
        x = self(x)
        if self.p is None:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(x.v)

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"

    @classmethod
    def parse(cls, text: str) -> "Field":
        t = text.strip()
        if t in ("Q", "QQ"):
            return cls()
        if t.startswith("GF(") and t.endswith(")"):
            return cls(int(t[3:-1]))
        raise ValueError(f"unknown field {text!r}")


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


def field_of(entries: Iterable) -> Field:
    """Infer the field from the scalars present; ints alone mean Q."""
    p = None
    saw_fraction = False
    for x in entries:
        if isinstance(x, Fp):
            if p is not None and p != x.p:
                raise FieldMismatchError(f"GF({p}) vs GF({x.p})")
            p = x.p
        elif isinstance(x, Fraction):
            if x.denominator != 1:
                saw_fraction = True
        elif not isinstance(x, (int, np.integer)):
            raise TypeError(f"not an exact scalar: {x!r}")
    if p is not None and saw_fraction:
        raise FieldMismatchError(f"GF({p}) vs Q")
    return Field(p)


def _to_ints(a: np.ndarray, field: Field):
    """Integer array and scale ``d`` with ``a = ints / d`` (``d = 1`` over GF(p))."""
    flat = a.reshape(-1)
    if field.p is not None:
        return np.array([int(x) for x in flat], dtype=object).reshape(a.shape), 1
    pairs = [(x.numerator, x.denominator) if isinstance(x, Fraction) else (int(x), 1) for x in flat]
    den = lcm(*(d for _, d in pairs)) if pairs else 1
    return np.array([n * (den // d) for n, d in pairs], dtype=object).reshape(a.shape), den


def matmul(a, b, field: Field | None = None) -> np.ndarray:
    """Exact matrix product, computed on integers with denominators cleared."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if field is None:
        field = field_of(list(a.reshape(-1)) + list(b.reshape(-1)))
    ai, da = _to_ints(a, field)
    bi, db = _to_ints(b, field)
    prod = ai.dot(bi)
    if field.p is not None:
        return np.array([field(int(x)) for x in np.ravel(prod)], dtype=object).reshape(np.shape(prod))
    d = da * db
    return np.array([Fraction(int(x), d) for x in np.ravel(prod)], dtype=object).reshape(np.shape(prod))


def _prepare(m, field: Field | None) -> tuple[list[list], Field, int]:
    arr = np.array(m, dtype=object)
    if arr.ndim != 2:
        if arr.size == 0:
            arr = arr.reshape(0, 0)
        else:
            raise ValueError("expected a 2-d matrix")
    if field is None:
        field = field_of(arr.reshape(-1))
    rows = [[field(x) for x in row] for row in arr]
    return rows, field, arr.shape[1]


def _rref_rows(rows: list[list], ncols: int) -> list[int]:
    """In-place reduced row echelon form; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        support = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for j in support:
                        row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(m, field: Field | None = None) -> tuple[np.ndarray, int]:
    """Reduced row echelon form (same shape as ``m``) and the rank."""
    rows, field, ncols = _prepare(m, field)
    piv = _rref_rows(rows, ncols)
    out = field.zeros((len(rows), ncols))
    for i, row in enumerate(rows):
        out[i, :] = row
    return out, len(piv)


def rank(m, field: Field | None = None) -> int:
    return rref(m, field)[1]


def _distinct_rows(rows: list[list]) -> list[list]:
    """Drop zero rows and rows equal to another row up to sign."""
    seen = set()
    out = []
    for row in rows:
        key = tuple(row)
        if not any(key) or key in seen:
            continue
        seen.add(key)
        seen.add(tuple(-x for x in key))
        out.append(row)
    return out


def kernel(m, field: Field | None = None) -> "Subspace":
    """Right null space ``{v : m v = 0}`` as a canonical subspace."""
    rows, field, ncols = _prepare(m, field)
    rows = _distinct_rows(rows)
    piv = _rref_rows(rows, ncols)
    free = [c for c in range(ncols) if c not in set(piv)]
    vecs = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for r, pc in enumerate(piv):
            v[pc] = -rows[r][f]
        vecs.append(v)
    return Subspace.span(vecs, ncols, field)


def image(m, field: Field | None = None) -> "Subspace":
    """Column space of ``m``."""
    arr = np.array(m, dtype=object)
    if field is None:
        field = field_of(arr.reshape(-1))
    return Subspace.span(arr.T, arr.shape[0], field)


def solve(m, b, field: Field | None = None):
    """One solution of ``m x = b`` (free variables set to 0), or None."""
    arr = np.array(m, dtype=object)
    if field is None:
        field = field_of(list(arr.reshape(-1)) + list(b))
    nrows, ncols = arr.shape
    aug = np.empty((nrows, ncols + 1), dtype=object)
    aug[:, :ncols] = arr
    aug[:, ncols] = list(b)
    rows, field, _ = _prepare(aug, field)
    piv = _rref_rows(rows, ncols + 1)
    if piv and piv[-1] == ncols:
        return None
    x = [field.zero] * ncols
    for r, pc in enumerate(piv):
        x[pc] = rows[r][ncols]
    return field.array(x)


class Subspace:
    """Subspace of ``field^n`` held by its reduced echelon basis.

    Two subspaces are equal iff their echelon bases coincide entrywise.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, basis: np.ndarray, ambient_dim: int, field: Field, pivots: Sequence[int]):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, vectors, ambient_dim: int, field: Field) -> "Subspace":
        rows = [[field(x) for x in v] for v in vectors]
        for row in rows:
            if len(row) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        piv = _rref_rows(rows, ambient_dim)
        basis = field.zeros((len(piv), ambient_dim))
        for i in range(len(piv)):
            basis[i, :] = rows[i]
        return cls(basis, ambient_dim, field, piv)

    @classmethod
    def zero(cls, ambient_dim: int, field: Field) -> "Subspace":
        return cls.span([], ambient_dim, field)

    @classmethod
    def full(cls, ambient_dim: int, field: Field) -> "Subspace":
        return cls.span(field.eye(ambient_dim), ambient_dim, field)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def vectors(self) -> list[np.ndarray]:
        return [self.basis[i] for i in range(self.dim)]

    def _check(self, other: "Subspace"):
        if other.ambient_dim != self.ambient_dim:
            raise ValueError(f"ambient dimension {self.ambient_dim} vs {other.ambient_dim}")
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def coordinates(self, v):
        """Coefficients of ``v`` in the echelon basis, or None if v is outside."""
        v = [self.field(x) for x in v]
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        coeffs = [v[c] for c in self.pivots]
        resid = list(v)
        for a, i in zip(coeffs, range(self.dim)):
            if a:
                resid = [r - a * b for r, b in zip(resid, self.basis[i])]
        if any(resid):
            return None
        return self.field.array(coeffs)

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        return all(v in self for v in other.vectors())

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.vectors() + other.vectors(), self.ambient_dim, self.field)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim, self.field)
        # columns: basis of self, then minus basis of other
        stacked = np.concatenate([self.basis.T, -other.basis.T], axis=1)
        ker = kernel(stacked, self.field)
        vecs = [np.dot(c[: self.dim], self.basis) for c in ker.vectors()]
        return Subspace.span(vecs, self.ambient_dim, self.field)

    __and__ = intersection

    def quotient_dim(self, other: "Subspace") -> int:
        """dim of (self + other) / other."""
        return self.dim - self.intersection(other).dim

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and all(a == b for a, b in zip(self.basis.reshape(-1), other.basis.reshape(-1)))
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.pivots))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, field={self.field})"
