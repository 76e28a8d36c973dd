"""Independent reference computations used to freeze expected values.

Nothing here goes through the identity engine or the einsum kernels: the
identities are written out by hand against ``Algebra.multiply`` and monomials
are enumerated with a separate canonical form.
"""

from __future__ import annotations

import itertools
import random

import numpy as np


# free anticommutative monomials ----------------------------------------

def _canon(t):
    """(sign, tree) with children ordered by their repr, or (0, None)."""
    if isinstance(t, str):
        return 1, t
    s1, a = _canon(t[0])
    s2, b = _canon(t[1])
    if not s1 or not s2 or a == b:
        return 0, None
    if repr(a) > repr(b):
        return -s1 * s2, (b, a)
    return s1 * s2, (a, b)


def _trees(leaves: tuple):
    if len(leaves) == 1:
        yield leaves[0]
        return
    for k in range(1, len(leaves)):
        for left in _trees(leaves[:k]):
            for right in _trees(leaves[k:]):
                yield (left, right)


def free_monomials(generators, max_degree: int) -> set:
    """Nonzero canonical monomials of degree <= max_degree."""
    out = set()
    for d in range(1, max_degree + 1):
        for word in itertools.product(generators, repeat=d):
            for t in _trees(word):
                s, c = _canon(t)
                if s:
                    out.add(c)
    return out


def multilinear_monomials(variables) -> set:
    out = set()
    for word in itertools.permutations(variables):
        for t in _trees(word):
            s, c = _canon(t)
            if s:
                out.add(c)
    return out


# identities written by hand ---------------------------------------------

def _jac(m, x, y, z):
    return m(m(x, y), z) + m(m(z, x), y) + m(m(y, z), x)


def _cd(m, x, y, a, b):
    xy = m(x, y)
    return (m(m(xy, a), b) - m(m(xy, b), a) - m(m(m(x, a), b), y)
            + m(m(m(x, b), a), y) + m(m(m(y, a), b), x) - m(m(m(y, b), a), x))


HAND = {
    "lie": (3, lambda m, x, y, z: _jac(m, x, y, z)),
    "binary-lie": (2, lambda m, x, y: m(m(m(x, y), x), y) - m(m(m(x, y), y), x)),
    "malcev": (3, lambda m, x, y, z: _jac(m, x, y, m(x, z)) - m(_jac(m, x, y, z), x)),
    "sagle": (4, lambda m, x, y, z, w: m(_jac(m, x, y, z), w) - _jac(m, w, z, m(x, y))
              - _jac(m, w, y, m(z, x)) - _jac(m, w, x, m(y, z))),
    "almost-lie": (4, lambda m, x, y, z, w: m(_jac(m, x, y, z), w)),
    "cd": (4, _cd),
    "eq4": (4, lambda m, x, y, z, w: _jac(m, x, y, m(z, w))),
    "jj": (4, lambda m, w, x, y, z: _jac(m, m(w, x), y, z) + _jac(m, m(y, z), w, x)),
    "msagle": (4, lambda m, x, y, z, w: 3 * _jac(m, y, z, m(w, x)) - m(_jac(m, x, y, z), w)
               + m(_jac(m, y, z, w), x) + 2 * m(_jac(m, z, w, x), y) - 2 * m(_jac(m, w, x, y), z)),
}
MULTILINEAR = {"lie", "sagle", "almost-lie", "cd", "eq4", "jj", "msagle"}


def hand_holds(A, name: str, rng: random.Random | None = None, trials: int = 25) -> bool:
    """Exhaustive over basis tuples for small multilinear cases, random elements otherwise."""
    arity, f = HAND[name]
    m = A.multiply
    if name in MULTILINEAR and A.dim ** arity <= 300:
        E = [A.basis(i) for i in range(A.dim)]
        return all(not any(f(m, *args)) for args in itertools.product(E, repeat=arity))
    rng = rng or random.Random(0)
    for _ in range(trials):
        args = [A.element([rng.randint(-4, 4) for _ in range(A.dim)]) for _ in range(arity)]
        if any(f(m, *args)):
            return False
    return True


# structure -----------------------------------------------------------------

def jacobiator_nonzero_triples(A):
    E = [A.basis(i) for i in range(A.dim)]
    return [(i, j, k) for i, j, k in itertools.product(range(A.dim), repeat=3)
            if any(_jac(A.multiply, E[i], E[j], E[k]))]


def first_order_cd_term(A, phi):
    """t-linear part of the CD identity for x*y + t*phi(x,y), on all basis 4-tuples.

    ``phi`` is a function of two algebra elements returning an algebra element.
    Returns an array indexed [x, y, a, b, k].
    """
    m = A.multiply
    n = A.dim
    E = [A.basis(i) for i in range(n)]

    def lin(u, v, w, s):
        # d/dt of ((u*v)*w)*s at t = 0
        uv = m(u, v)
        return phi(m(uv, w), s) + m(phi(uv, w), s) + m(m(phi(u, v), w), s)

    out = np.empty((n, n, n, n, n), dtype=object)
    for x, y, a, b in itertools.product(range(n), repeat=4):
        X, Y, Aa, B = E[x], E[y], E[a], E[b]
        out[x, y, a, b] = (lin(X, Y, Aa, B) - lin(X, Y, B, Aa) - lin(X, Aa, B, Y)
                           + lin(X, B, Aa, Y) + lin(Y, Aa, B, X) - lin(Y, B, Aa, X))
    return out
