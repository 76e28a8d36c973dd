"""Low-degree cochain complexes of CD algebras and central extensions.

Conventions
-----------
A module ``M`` over ``A`` is a left action ``a . m`` stored as ``act[i]``, the
matrix of ``m -> e_i . m``.  The module axiom is the CD identity of the
semidirect sum ``A + M`` in which ``a m = a . m`` and ``m a = -a . m``.

An n-cochain is stored as a tensor ``T[i_1, ..., i_n, k]``.  Skew cochains
(the domains ``C^1``, ``C^2``) are addressed through the wedge basis
``(I, k)`` with ``I`` a strictly increasing index tuple.  Values of the CD
differentials are only partially skew, so they are kept as full tensors.

Differentials are written once as einsum contractions and evaluated either on
exact object arrays or, to assemble matrices quickly, on integer-scaled
copies: every differential here is homogeneous in (structure constants,
action), so clearing denominators rescales the matrix without changing its
kernel or image.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import reduce
from itertools import combinations, permutations
from math import comb, lcm
from typing import Callable, Mapping

import numpy as np

from .algebra import Algebra
from .exactlinalg import Field, Subspace, image, kernel

THEORIES = ("cd", "cd-odd", "ce", "almost-lie")

# einsum labels: 0,1 = x,y ; 2.. = a_i ; 20.. internal algebra ; 40.. module ; 50 = batch
_X, _Y, _BATCH, _MOD = 0, 1, 50, 40


class TheoryError(ValueError):
    """Theory, degree and coefficients do not fit together."""


# modules ----------------------------------------------------------------

class CDModule:
    """Vector space ``K^m`` with a left action of the algebra."""

    def __init__(self, algebra: Algebra, act, name: str | None = None):
        n = algebra.dim
        act = algebra.field.array(act) if np.size(act) else algebra.field.zeros((n, 0, 0))
        if act.ndim != 3 or act.shape[0] != n or act.shape[1] != act.shape[2]:
            raise ValueError(f"action tensor must be ({n}, m, m), got {act.shape}")
        self.algebra = algebra
        self.act = act
        self.name = name
        self._lz_ops = None

    @property
    def dim(self) -> int:
        return self.act.shape[1]

    @property
    def field(self) -> Field:
        return self.algebra.field

    def action(self, a) -> np.ndarray:
        """Matrix of ``m -> a . m``."""
        if self.algebra.dim == 0:
            return self.field.zeros((self.dim, self.dim))
        return np.tensordot(np.asarray(a, dtype=object), self.act, axes=(0, 0)) + self.field.zero

    def __repr__(self):
        return f"<CDModule {self.name or ''} dim={self.dim} over {self.algebra!r}>"


def adjoint_module(A: Algebra) -> CDModule:
    """``A`` acting on itself by ``a . m = a m``."""
    act = np.array([A.left_mult(A.basis(i)) for i in range(A.dim)], dtype=object)
    return CDModule(A, act.reshape(A.dim, A.dim, A.dim), name="adjoint")


def trivial_module(A: Algebra, m: int = 1) -> CDModule:
    return CDModule(A, A.field.zeros((A.dim, m, m)), name="trivial")


def module_axiom_defect(A: Algebra, M: CDModule):
    """First basis triple (x, y, a) where the module axiom fails, with the defect matrix."""
    act = M.action
    mul = A.multiply
    E = [A.basis(i) for i in range(A.dim)]
    for i, j, k in np.ndindex(A.dim, A.dim, A.dim):
        x, y, a = E[i], E[j], E[k]
        xy = mul(x, y)
        d = (act(mul(xy, a)) + act(a).dot(act(xy)) - act(x).dot(act(mul(y, a)))
             + act(y).dot(act(mul(x, a))) - act(x).dot(act(a)).dot(act(y))
             + act(y).dot(act(a)).dot(act(x)))
        if any(d.reshape(-1)):
            return (i, j, k), d
    return None


def is_cd_module(A: Algebra, M: CDModule) -> bool:
    return module_axiom_defect(A, M) is None


def _lz_operators(M: CDModule) -> np.ndarray:
    """Stacked matrices of ``m -> xy . m - x . (y . m) + y . (x . m)`` over basis pairs."""
    if M._lz_ops is None:
        A, act = M.algebra, M.act
        ops = (np.einsum("ijk,kab->ijab", A.c, act)
               - np.einsum("iab,jbc->ijac", act, act) + np.einsum("jab,ibc->ijac", act, act))
        M._lz_ops = ops.reshape(-1, M.dim) + M.field.zero
    return M._lz_ops


def lie_center_of_module(M: CDModule) -> Subspace:
    """``{m : xy . m - x . (y . m) + y . (x . m) = 0}`` for all x, y in the algebra."""
    if M.algebra.dim < 2 or M.dim == 0:
        return Subspace.full(M.dim, M.field)
    return kernel(_lz_operators(M), M.field)


# cochains ---------------------------------------------------------------

def _perm_sign(p) -> int:
    p = list(p)
    s = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def wedge_index(n: int, degree: int) -> list[tuple]:
    return list(combinations(range(n), degree))


class Cochain:
    """Multilinear map ``A^degree -> M`` held as a tensor ``(n,)*degree + (m,)``."""

    def __init__(self, tensor: np.ndarray, field: Field):
        self.tensor = tensor
        self.field = field

    @property
    def degree(self) -> int:
        return self.tensor.ndim - 1

    @property
    def module_dim(self) -> int:
        return self.tensor.shape[-1]

    @property
    def n(self) -> int:
        return self.tensor.shape[0] if self.degree else 0

    @classmethod
    def zero(cls, n: int, degree: int, m: int, field: Field) -> "Cochain":
        return cls(field.zeros((n,) * degree + (m,)), field)

    @classmethod
    def from_wedge(cls, coords, n: int, degree: int, m: int, field: Field) -> "Cochain":
        """Skew cochain from coordinates over the wedge basis (tuple-major, module index minor)."""
        coords = [field(c) for c in coords]
        idx = wedge_index(n, degree)
        if len(coords) != len(idx) * m:
            raise ValueError(f"expected {len(idx) * m} coordinates, got {len(coords)}")
        T = field.zeros((n,) * degree + (m,))
        for r, I in enumerate(idx):
            vals = coords[r * m:(r + 1) * m]
            for p in permutations(range(degree)):
                s = _perm_sign(p)
                T[tuple(I[q] for q in p)] = [s * v for v in vals]
        return cls(T, field)

    @classmethod
    def from_values(cls, values: Mapping, n: int, degree: int, m: int, field: Field) -> "Cochain":
        """Skew cochain from ``{(i1 < ... < id): vector}`` (0-based)."""
        coords = [field.zero] * (comb(n, degree) * m)
        pos = {I: r for r, I in enumerate(wedge_index(n, degree))}
        for I, v in values.items():
            if tuple(I) not in pos:
                raise ValueError(f"{I} is not a strictly increasing index tuple")
            v = [v] if not hasattr(v, "__len__") else list(v)
            for k, x in enumerate(v):
                coords[pos[tuple(I)] * m + k] = field(x)
        return cls.from_wedge(coords, n, degree, m, field)

    @classmethod
    def random(cls, rng: random.Random, n: int, degree: int, m: int, field: Field, lo=-3, hi=3) -> "Cochain":
        coords = [rng.randint(lo, hi) for _ in range(comb(n, degree) * m)]
        return cls.from_wedge(coords, n, degree, m, field)

    def wedge_coords(self) -> list:
        """Coordinates over the wedge basis; only meaningful for skew cochains."""
        out = []
        for I in wedge_index(self.n, self.degree):
            out.extend(self.tensor[I])
        return out

    def is_skew(self) -> bool:
        return self == Cochain.from_wedge(self.wedge_coords(), self.n, self.degree, self.module_dim, self.field)

    def is_zero(self) -> bool:
        return not any(self.tensor.reshape(-1))

    def __call__(self, *args) -> np.ndarray:
        r = self.tensor
        for a in args:
            r = np.tensordot(np.asarray(a, dtype=object), r, axes=(0, 0))
        return r + self.field.zero

    def __add__(self, other: "Cochain") -> "Cochain":
        return Cochain(self.tensor + other.tensor, self.field)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return Cochain(self.tensor - other.tensor, self.field)

    def __rmul__(self, a) -> "Cochain":
        return Cochain(self.field(a) * self.tensor, self.field)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.tensor.shape == other.tensor.shape and all(
            a == b for a, b in zip(self.tensor.reshape(-1), other.tensor.reshape(-1)))

    def __repr__(self):
        return f"<Cochain degree={self.degree} n={self.n} m={self.module_dim}>"


@dataclass
class ZeroCochain:
    """Element of the degree-0 domain ``LZ(M) + (A (x) M)``.

    ``lz`` is a vector of ``M`` that must lie in ``LZ(M)``; ``tensor[i, k]`` is
    the coefficient of ``e_i (x) m_k``.
    """

    lz: np.ndarray
    tensor: np.ndarray


def alternate(phi: Cochain) -> Cochain:
    """Signed sum over all argument permutations (no division)."""
    d = phi.degree
    out = None
    for p in permutations(range(d)):
        t = _perm_sign(p) * phi.tensor.transpose(list(p) + [d])
        out = t if out is None else out + t
    return Cochain(out, phi.field)


# differential formulas --------------------------------------------------

class _Ops:
    """Structure tensors in one dtype (exact objects or scaled integers)."""

    def __init__(self, c, act, modulus: int | None = None, den: int = 1, bound: int = 1):
        self.c = c
        self.act = act
        self.modulus = modulus
        self.den = den  # common denominator cleared from c and act
        self.bound = bound  # max |entry| of the scaled tensors
        n = c.shape[0]
        if n:
            self.cc = np.einsum(c, [0, 1, 20], c, [20, 2, 3], [0, 1, 2, 3])
        else:
            self.cc = np.zeros((0, 0, 0, 0), dtype=c.dtype)

    def reduce(self, t):
        if self.modulus is not None:
            t = t % self.modulus
        return t


def _exact_ops(A: Algebra, M: CDModule) -> _Ops:
    return _Ops(A.c, M.act)


def _int_ops(A: Algebra, M: CDModule) -> tuple[_Ops, Callable]:
    """Integer copies of the structure and action tensors."""
    field = A.field
    entries = list(A.c.reshape(-1)) + list(M.act.reshape(-1))
    if field.p is not None:
        conv = lambda x: int(x)  # noqa: E731
        modulus = field.p
        bound = field.p
    else:
        den = reduce(lcm, (x.denominator for x in entries), 1)
        conv = lambda x: int(x * den)  # noqa: E731
        modulus = None
        bound = max((abs(conv(x)) for x in entries), default=1) or 1
    n, m = A.dim, M.dim
    # at most four tensor factors of size <= bound, summed over <= n^4 m^2 terms, 20 terms
    safe = (bound ** 4) * max(n, 1) ** 4 * max(m, 1) ** 2 * 64 < 2 ** 62
    dtype = np.int64 if safe else object
    c = np.array([conv(x) for x in A.c.reshape(-1)], dtype=dtype).reshape(A.c.shape)
    act = np.array([conv(x) for x in M.act.reshape(-1)], dtype=dtype).reshape(M.act.shape)
    ops = _Ops(c, act, modulus, 1 if field.p is not None else den, bound)
    return ops, dtype


def _apply(A: Algebra, M: CDModule, phi: Cochain, kernel: Callable, weight: int) -> Cochain:
    """Evaluate a differential kernel exactly through integer-scaled tensors.

    ``weight`` is the total degree of every term in (structure constants,
    action), so the scaled result is the true one times ``den**weight``.
    """
    f = A.field
    ops, dtype = _int_ops(A, M)
    flat = list(phi.tensor.reshape(-1))
    if f.p is not None:
        pden, ints = 1, [int(x) for x in flat]
    else:
        pden = reduce(lcm, (x.denominator for x in flat), 1)
        ints = [int(x * pden) for x in flat]
    pb = max((abs(x) for x in ints), default=1) or 1
    n, m = A.dim, M.dim
    terms = 64 * (phi.degree + 2) ** 2
    if dtype is not object and pb * ops.bound ** 2 * max(n, 1) ** 3 * max(m, 1) ** 2 * terms >= 2 ** 62:
        ops = _Ops(ops.c.astype(object), ops.act.astype(object), ops.modulus, ops.den, ops.bound)
        dtype = object
    P = np.array(ints, dtype=dtype).reshape(phi.tensor.shape)
    out = ops.reduce(np.asarray(kernel(ops, P)))
    scale = ops.den ** weight * pden
    res = f.zeros(out.shape)
    for idx in zip(*np.nonzero(out)):
        x = int(out[idx])
        res[idx] = f(x) if f.p is not None else f(x) / scale
    return Cochain(res, f)


def _ev(ops: _Ops, P, args, acts=(), nargs_out=None, batch=False):
    """Tensor of ``acts[0] . (acts[1] . ( ... phi(args)))`` over the output labels.

    Each entry of ``args`` is a label, a pair ``(u, v)`` for the product
    ``e_u e_v`` or a triple ``(u, v, w)`` for ``(e_u e_v) e_w``.
    """
    operands = []
    slots = []
    fresh = 20
    for arg in args:
        if isinstance(arg, int):
            slots.append(arg)
        elif len(arg) == 2:
            operands += [ops.c, [arg[0], arg[1], fresh]]
            slots.append(fresh)
            fresh += 1
        else:
            operands += [ops.cc, [arg[0], arg[1], arg[2], fresh]]
            slots.append(fresh)
            fresh += 1
    mod = _MOD
    head = [_BATCH] if batch else []
    operands += [P, head + slots + [mod]]
    for a in reversed(acts):
        operands += [ops.act, [a, mod + 1, mod]]
        mod += 1
    out = head + list(range(nargs_out)) + [mod]
    return np.einsum(*operands, out, optimize=True)


def _d1_cd(ops, P, batch=False):
    """``psi(xy) - x . psi(y) + y . psi(x)``: C^1 -> C^2."""
    e = lambda args, acts=(): _ev(ops, P, args, acts, 2, batch)  # noqa: E731
    x, y = _X, _Y
    return e([(x, y)]) - e([y], [x]) + e([x], [y])


def _d2_cd(ops, P, batch=False):
    """Second CD differential, C^2 -> (4-linear maps)."""
    e = lambda args, acts=(): _ev(ops, P, args, acts, 4, batch)  # noqa: E731
    x, y, a, b = 0, 1, 2, 3
    return (
        e([(x, y, a), b]) - e([(x, y, b), a]) - e([(x, a, b), y]) + e([(x, b, a), y])
        + e([(y, a, b), x]) - e([(y, b, a), x])
        + e([(x, y), b], [a]) - e([(x, y), a], [b]) - e([(y, a), b], [x]) + e([(y, b), a], [x])
        + e([(x, a), b], [y]) - e([(x, b), a], [y])
        - e([x, y], [a, b]) + e([x, y], [b, a]) - e([y, b], [x, a]) + e([y, a], [x, b])
        - e([x, a], [y, b]) + e([x, b], [y, a])
    )


def _d1_cd_odd(ops, P, batch=False):
    """First differential of the odd complex, C^1 -> (3-linear maps).

    ``phi((xy)a) + a . phi(xy) - x . phi(ya) + y . phi(xa)
    - x . (a . phi(y)) + y . (a . phi(x))``; composed with ``m -> (x -> x . m)``
    this is the module axiom.
    """
    e = lambda args, acts=(): _ev(ops, P, args, acts, 3, batch)  # noqa: E731
    x, y, a = 0, 1, 2
    return (e([(x, y, a)]) + e([(x, y)], [a]) - e([(y, a)], [x]) + e([(x, a)], [y])
            - e([y], [x, a]) + e([x], [y, a]))


def _d_general(ops, P, n, batch=False):
    """Degree-raising-by-two differential C^n -> C^(n+2) for any n >= 1.

    Overall sign chosen so that n = 2 reproduces :func:`_d2_cd` term by term.
    """
    e = lambda args, acts=(): _ev(ops, P, args, acts, n + 2, batch)  # noqa: E731
    x, y = _X, _Y
    A = list(range(2, n + 2))
    total = 0
    for i in range(1, n + 1):
        ai = A[i - 1]
        rest = [t for t in A if t != ai]
        block = (e([(x, y, ai)] + rest) + e([(x, y)] + rest, [ai]) - e([(y, ai)] + rest, [x])
                 + e([(x, ai)] + rest, [y]) - e([y] + rest, [x, ai]) + e([x] + rest, [y, ai]))
        total = total + (-1) ** i * block
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ai, aj = A[i - 1], A[j - 1]
            rest = [t for t in A if t not in (ai, aj)]
            block = (e([(x, ai, aj), y] + rest) - e([(x, aj, ai), y] + rest)
                     - e([(y, ai, aj), x] + rest) + e([(y, aj, ai), x] + rest)
                     + e([x, y] + rest, [ai, aj]) - e([x, y] + rest, [aj, ai]))
            total = total + (-1) ** (i + j + n + 1) * block
    return -total


def _d_ce(ops, P, n, batch=False):
    """Chevalley-Eilenberg differential C^n -> C^(n+1)."""
    e = lambda args, acts=(): _ev(ops, P, args, acts, n + 1, batch)  # noqa: E731
    X = list(range(n + 1))
    total = 0
    for i in range(n + 1):
        rest = [t for t in X if t != i]
        total = total + (-1) ** i * e(rest, [i])
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            rest = [t for t in X if t not in (i, j)]
            total = total + (-1) ** (i + j) * e([(i, j)] + rest)
    return total


def _check_cochain(A: Algebra, M: CDModule, phi: Cochain, degree: int):
    if phi.degree != degree:
        raise TheoryError(f"expected a {degree}-cochain, got degree {phi.degree}")
    if phi.tensor.shape[:-1] != (A.dim,) * degree or phi.module_dim != M.dim:
        raise TheoryError("cochain shape does not match algebra and module")


def d0_cd(A: Algebra, M: CDModule, z: ZeroCochain) -> Cochain:
    """``m -> (b -> b . m)`` on LZ(M) plus ``a (x) m -> (b -> a . (b . m) - b . (a . m))``."""
    f = A.field
    lz = f.array(z.lz)
    if A.dim >= 2 and M.dim and any(_lz_operators(M).dot(lz)):
        raise TheoryError("degree-0 component is not in LZ(M)")
    T = f.zeros((A.dim, M.dim))
    for b in range(A.dim):
        Ab = M.act[b]
        T[b] = Ab.dot(lz) + f.zero
        for i in range(A.dim):
            Ai = M.act[i]
            m = f.array(z.tensor[i])
            T[b] = T[b] + Ai.dot(Ab.dot(m)) - Ab.dot(Ai.dot(m))
    return Cochain(T, f)


def d0_odd(A: Algebra, M: CDModule, m) -> Cochain:
    """``m -> (x -> x . m)``."""
    m = A.field.array(m)
    return Cochain(np.array([M.act[b].dot(m) + A.field.zero for b in range(A.dim)], dtype=object)
                   .reshape(A.dim, M.dim), A.field)


def differential(theory: str, n: int, phi, A: Algebra, M: CDModule):
    """Apply the degree-``n`` differential of ``theory`` to ``phi``.

    ``cd``: n=0 on :class:`ZeroCochain`, n=1 (C^1 -> C^2), n=2 (C^2 -> C^4) and the
    general formula for even n >= 4.  ``cd-odd``: n=0 on a vector of M, n=1 and the
    general formula for odd n >= 3.  ``ce``: any n >= 0 (A must be Lie).
    """
    f = A.field
    if theory == "cd":
        if n == 0:
            return d0_cd(A, M, phi)
        _check_cochain(A, M, phi, n)
        if n == 1:
            return _apply(A, M, phi, _d1_cd, 1)
        if n == 2:
            return _apply(A, M, phi, _d2_cd, 2)
        if n % 2 == 0:
            return _apply(A, M, phi, lambda o, P: _d_general(o, P, n), 2)
    elif theory == "cd-odd":
        if n == 0:
            return d0_odd(A, M, phi)
        _check_cochain(A, M, phi, n)
        if n == 1:
            return _apply(A, M, phi, _d1_cd_odd, 2)
        if n % 2 == 1:
            return _apply(A, M, phi, lambda o, P: _d_general(o, P, n), 2)
    elif theory == "ce":
        _require_lie(A)
        if n == 0:
            phi = Cochain(f.array(phi).reshape(M.dim), f)
        _check_cochain(A, M, phi, n)
        return _apply(A, M, phi, lambda o, P: _d_ce(o, P, n), 1)
    else:
        raise TheoryError(f"no differential for theory {theory!r}")
    raise TheoryError(f"theory {theory!r} has no differential in degree {n}")


def general_differential(phi: Cochain, A: Algebra, M: CDModule) -> Cochain:
    """The C^n -> C^(n+2) formula applied to any n-linear ``phi`` (n >= 1)."""
    if phi.degree < 1:
        raise TheoryError("general differential needs degree >= 1")
    _check_cochain(A, M, phi, phi.degree)
    return _apply(A, M, phi, lambda o, P: _d_general(o, P, phi.degree), 2)


# matrices and cohomology ------------------------------------------------

def _wedge_batch(n: int, degree: int, m: int, dtype) -> np.ndarray:
    """All wedge-basis cochains stacked along a leading axis."""
    idx = wedge_index(n, degree)
    B = np.zeros((len(idx) * m,) + (n,) * degree + (m,), dtype=dtype)
    for r, I in enumerate(idx):
        for k in range(m):
            for p in permutations(range(degree)):
                B[(r * m + k,) + tuple(I[q] for q in p) + (k,)] = _perm_sign(p)
    return B


def _to_field_matrix(M: np.ndarray, field: Field) -> np.ndarray:
    flat = M.reshape(M.shape[0], -1)
    out = np.empty(flat.shape, dtype=object)
    for idx, x in np.ndenumerate(flat):
        out[idx] = field(int(x))
    return out


def differential_matrix(theory: str, n: int, A: Algebra, M: CDModule, general: bool = False) -> np.ndarray:
    """Matrix of the differential on skew n-cochains (wedge coordinates).

    Rows index the output tensor entries (full tensor, flattened; wedge
    coordinates for ``ce``).  Entries are scaled by a nonzero constant when
    the algebra has non-integral structure constants.
    """
    ops, dtype = _int_ops(A, M)
    B = _wedge_batch(A.dim, n, M.dim, dtype)
    if theory == "cd" and n == 1 and not general:
        out = _d1_cd(ops, B, batch=True)
    elif theory == "cd" and n == 2 and not general:
        out = _d2_cd(ops, B, batch=True)
    elif theory == "cd-odd" and n == 1 and not general:
        out = _d1_cd_odd(ops, B, batch=True)
    elif theory in ("cd", "cd-odd") and n >= 1:
        out = _d_general(ops, B, n, batch=True)
    elif theory == "ce":
        _require_lie(A)
        out = _d_ce(ops, B, n, batch=True)
        idx = wedge_index(A.dim, n + 1)
        out = np.stack([out[(slice(None),) + I] for I in idx], axis=1) if idx else np.zeros((out.shape[0], 0), dtype=out.dtype)
    else:
        raise TheoryError(f"no differential matrix for {theory!r} in degree {n}")
    out = ops.reduce(out)
    cols = _to_field_matrix(np.asarray(out), A.field)
    return cols.T


def d0_cd_matrix(A: Algebra, M: CDModule) -> np.ndarray:
    """Matrix of the degree-0 differential from ``LZ(M) + (A (x) M)`` into C^1."""
    f = A.field
    lz = lie_center_of_module(M)
    cols = []
    for v in lz.vectors():
        cols.append(d0_cd(A, M, ZeroCochain(v, f.zeros((A.dim, M.dim)))).wedge_coords())
    for i in range(A.dim):
        for k in range(M.dim):
            t = f.zeros((A.dim, M.dim))
            t[i, k] = f.one
            cols.append(d0_cd(A, M, ZeroCochain(f.zeros(M.dim), t)).wedge_coords())
    if not cols:
        return f.zeros((A.dim * M.dim, 0))
    return np.array(cols, dtype=object).T


def _require_lie(A: Algebra):
    if any(A.jacobiator_tensor().reshape(-1)) if A.dim else False:
        raise TheoryError("Chevalley-Eilenberg cohomology needs a Lie algebra")


def _cochain_dim(A: Algebra, M: CDModule, degree: int) -> int:
    return comb(A.dim, degree) * M.dim


@dataclass(frozen=True)
class CohomologyDims:
    """Dimensions of cochains, cocycles and coboundaries.

    ``ZB`` is ``dim(Z & B)``.  It equals ``B`` whenever the coboundaries are
    cocycles; otherwise ``H`` is taken as ``Z / (Z & B)``.
    """

    C: int
    Z: int
    B: int
    ZB: int

    @property
    def H(self) -> int:
        return self.Z - self.ZB

    @property
    def is_complex(self) -> bool:
        return self.ZB == self.B

    def as_dict(self) -> dict:
        return {"C": self.C, "Z": self.Z, "B": self.B, "H": self.H}


def _kernel_of(mat, ncols: int, field: Field) -> Subspace:
    if mat.shape[0] == 0:
        return Subspace.full(ncols, field)
    return kernel(mat, field)


def _image_of(mat, nrows: int, field: Field) -> Subspace:
    if mat.shape[1] == 0:
        return Subspace.zero(nrows, field)
    return image(mat, field)


def cocycle_space(theory: str, A: Algebra, M: CDModule, degree: int = 2) -> Subspace:
    """Cocycles of the given degree, in wedge coordinates of C^degree."""
    f = A.field
    cdim = _cochain_dim(A, M, degree)
    if theory == "almost-lie":
        if degree != 2:
            raise TheoryError("almost-Lie cohomology is only defined in degree 2")
        return Subspace.full(cdim, f)
    if theory == "cd" and degree not in (1, 2):
        raise TheoryError("CD cohomology is implemented in degrees 1 and 2")
    if theory == "cd-odd" and degree != 1:
        raise TheoryError("odd CD cohomology is implemented in degree 1")
    return _kernel_of(differential_matrix(theory, degree, A, M), cdim, f)


def coboundary_space(theory: str, A: Algebra, M: CDModule, degree: int = 2) -> Subspace:
    f = A.field
    cdim = _cochain_dim(A, M, degree)
    if theory in ("cd", "almost-lie"):
        if degree == 2:
            mat = differential_matrix("cd", 1, A, M)
            # coboundaries are skew 2-cochains; keep one row per wedge coordinate
            rows = _wedge_rows(mat, A.dim, 2, M.dim)
            return _image_of(rows, cdim, f)
        if degree == 1 and theory == "cd":
            return _image_of(d0_cd_matrix(A, M), cdim, f)
    elif theory == "cd-odd":
        if degree == 1:
            cols = [d0_odd(A, M, M.field.eye(M.dim)[k]).wedge_coords() for k in range(M.dim)]
            mat = np.array(cols, dtype=object).T if cols else f.zeros((cdim, 0))
            return _image_of(mat, cdim, f)
    elif theory == "ce":
        if degree == 0:
            return Subspace.zero(cdim, f)
        mat = differential_matrix("ce", degree - 1, A, M)
        return _image_of(mat, cdim, f)
    raise TheoryError(f"no coboundaries for {theory!r} in degree {degree}")


def _wedge_rows(mat: np.ndarray, n: int, degree: int, m: int) -> np.ndarray:
    """Restrict rows of a full-tensor-valued matrix to wedge positions."""
    shape = (n,) * degree + (m,)
    keep = []
    for I in wedge_index(n, degree):
        for k in range(m):
            keep.append(np.ravel_multi_index(I + (k,), shape))
    return mat[keep, :] if keep else mat[:0, :]


def cohomology(theory: str, A: Algebra, M: CDModule, degree: int = 2) -> CohomologyDims:
    if theory not in THEORIES:
        raise TheoryError(f"unknown theory {theory!r}; choose from {', '.join(THEORIES)}")
    if theory == "ce":
        _require_lie(A)
    Z = cocycle_space(theory, A, M, degree)
    B = coboundary_space(theory, A, M, degree)
    return CohomologyDims(_cochain_dim(A, M, degree), Z.dim, B.dim, (Z & B).dim)


def cohomology_dim(theory: str, A: Algebra, M: CDModule | None = None, degree: int = 2) -> int:
    M = M if M is not None else trivial_module(A, 1)
    return cohomology(theory, A, M, degree).H


def cd_cocycles_trivial(L: Algebra) -> Subspace:
    """Skew forms with phi([[x,y],a],b) - phi([[x,y],b],a) - phi([[x,a],b],y)
    + phi([[x,b],a],y) + phi([[y,a],b],x) - phi([[y,b],a],x) = 0, solved directly."""
    n = L.dim
    f = L.field
    idx = wedge_index(n, 2)
    pos = {I: r for r, I in enumerate(idx)}
    E = [L.basis(i) for i in range(n)]
    br = L.multiply

    def row_of(u, v):
        # coefficients of phi(u, v) in the wedge coordinates
        r = [f.zero] * len(idx)
        for i in range(n):
            for j in range(i + 1, n):
                w = u[i] * v[j] - u[j] * v[i]
                if w:
                    r[pos[(i, j)]] += w
        return r

    rows = []
    for x, y, a, b in np.ndindex(n, n, n, n):
        X, Y, A_, B_ = E[x], E[y], E[a], E[b]
        xy = br(X, Y)
        pieces = [
            (1, br(xy, A_), B_), (-1, br(xy, B_), A_),
            (-1, br(br(X, A_), B_), Y), (1, br(br(X, B_), A_), Y),
            (1, br(br(Y, A_), B_), X), (-1, br(br(Y, B_), A_), X),
        ]
        r = [f.zero] * len(idx)
        for s, u, v in pieces:
            r = [p + s * q for p, q in zip(r, row_of(u, v))]
        rows.append(r)
    if not idx:
        return Subspace.zero(0, f)
    return kernel(rows, f)


# extensions -------------------------------------------------------------

def _as_skew_matrix(phi, n: int, field: Field) -> np.ndarray:
    if isinstance(phi, Cochain):
        if phi.degree != 2 or phi.module_dim != 1:
            raise TheoryError("central extension needs a scalar 2-cochain")
        mat = phi.tensor[..., 0]
    else:
        mat = field.array(phi)
    if mat.shape != (n, n):
        raise ValueError(f"cocycle must be {n} x {n}")
    for i in range(n):
        for j in range(n):
            if mat[i, j] + mat[j, i]:
                raise ValueError("cocycle is not skew-symmetric")
    return mat


def square_zero_extension(A: Algebra, M: CDModule, phi: Cochain, name: str | None = None) -> Algebra:
    """``A + M`` with ``x*y = xy + phi(x,y)``, ``x*m = x . m``, ``m*x = -x . m``, ``M*M = 0``."""
    if phi.degree != 2 or phi.module_dim != M.dim:
        raise TheoryError("need a 2-cochain with values in M")
    if not phi.is_skew():
        raise ValueError("cocycle is not skew-symmetric")
    n, m = A.dim, M.dim
    f = A.field
    c = f.zeros((n + m, n + m, n + m))
    c[:n, :n, :n] = A.c
    c[:n, :n, n:] = phi.tensor
    for i in range(n):
        # e_i * m_l = sum_k act[i][k, l] m_k
        c[i, n:, n:] = M.act[i].T
        c[n:, i, n:] = -M.act[i].T
    return Algebra(c, f, name=name)


def central_extension(L: Algebra, phi, name: str | None = None) -> Algebra:
    """``L + Kz`` with ``{x,y} = xy + phi(x,y) z``; ``phi`` a skew matrix or scalar 2-cochain."""
    mat = _as_skew_matrix(phi, L.dim, L.field)
    T = L.field.zeros((L.dim, L.dim, 1))
    T[..., 0] = mat
    ext = square_zero_extension(L, trivial_module(L, 1), Cochain(T, L.field),
                                name=name or (f"{L.name}~phi" if L.name else None))
    return ext


def cochain_from_wedge_vector(vec, A: Algebra, M: CDModule, degree: int = 2) -> Cochain:
    return Cochain.from_wedge(list(vec), A.dim, degree, M.dim, A.field)


# cocycle text format ----------------------------------------------------

def format_cocycle(phi: Cochain) -> str:
    """Lines ``i j value`` (scalar) or ``i j k value`` (module), 1-based, i < j, nonzero only."""
    lines = []
    scalar = phi.module_dim == 1
    for (i, j) in wedge_index(phi.n, 2):
        for k in range(phi.module_dim):
            v = phi.tensor[i, j, k]
            if v:
                val = phi.field.format(v)
                lines.append(f"{i + 1} {j + 1} {val}" if scalar else f"{i + 1} {j + 1} {k + 1} {val}")
    return "\n".join(lines) + ("\n" if lines else "")


class CocycleFormatError(ValueError):
    pass


def parse_cocycle(text: str, n: int, field: Field, module_dim: int = 1) -> Cochain:
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        want = 3 if module_dim == 1 else 4
        if len(parts) != want:
            raise CocycleFormatError(f"line {lineno}: expected {want} fields")
        try:
            i, j = int(parts[0]), int(parts[1])
            k = int(parts[2]) if want == 4 else 1
            v = field(parts[-1])
        except (ValueError, ZeroDivisionError) as exc:
            raise CocycleFormatError(f"line {lineno}: {exc}") from None
        if not (1 <= i < j <= n) or not (1 <= k <= module_dim):
            raise CocycleFormatError(f"line {lineno}: index out of range or i >= j")
        key = (i - 1, j - 1)
        vec = values.setdefault(key, [field.zero] * module_dim)
        if vec[k - 1]:
            raise CocycleFormatError(f"line {lineno}: duplicate entry")
        vec[k - 1] = v
    return Cochain.from_values(values, n, 2, module_dim, field)


def random_cochain(rng: random.Random, A: Algebra, M: CDModule, degree: int) -> Cochain:
    return Cochain.random(rng, A.dim, degree, M.dim, A.field)


__all__ = [
    "CDModule", "Cochain", "CohomologyDims", "THEORIES", "TheoryError", "ZeroCochain",
    "adjoint_module", "alternate", "cd_cocycles_trivial", "central_extension", "coboundary_space",
    "cocycle_space", "cohomology", "cohomology_dim", "d0_cd", "d0_cd_matrix", "d0_odd", "differential",
    "differential_matrix", "format_cocycle", "general_differential", "is_cd_module",
    "lie_center_of_module", "module_axiom_defect", "parse_cocycle", "random_cochain",
    "square_zero_extension", "trivial_module",
]
