"""Canonical anticommutative monomials and free-algebra elements.

A monomial is a binary tree: a leaf is a variable name (``str``), an inner
node is a pair ``(left, right)``.  In canonical form the children of every
node satisfy ``key(left) < key(right)``; swapping children costs a sign and a
node with two equal children is zero.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Union

from ..exactlinalg import QQ, Field

Tree = Union[str, tuple]


@lru_cache(maxsize=None)
def degree(t: Tree) -> int:
    if isinstance(t, str):
        return 1
    return degree(t[0]) + degree(t[1])


@lru_cache(maxsize=None)
def leaves(t: Tree) -> tuple[str, ...]:
    if isinstance(t, str):
        return (t,)
    return leaves(t[0]) + leaves(t[1])


@lru_cache(maxsize=None)
def _shape(t: Tree) -> str:
    if isinstance(t, str):
        return "."
    return "(" + _shape(t[0]) + _shape(t[1]) + ")"


@lru_cache(maxsize=None)
def key(t: Tree) -> tuple:
    """Total order on canonical trees: higher degree first, then leaves, then shape."""
    return (-degree(t), leaves(t), _shape(t))


@lru_cache(maxsize=None)
def canonical(t: Tree) -> tuple[int, Tree | None]:
    """Return ``(sign, tree)`` with ``tree`` canonical, or ``(0, None)``."""
    if isinstance(t, str):
        return 1, t
    s1, l = canonical(t[0])
    if s1 == 0:
        return 0, None
    s2, r = canonical(t[1])
    if s2 == 0:
        return 0, None
    return _join(s1 * s2, l, r)


def _join(sign: int, l: Tree, r: Tree) -> tuple[int, Tree | None]:
    if l == r:
        return 0, None
    if key(l) < key(r):
        return sign, (l, r)
    return -sign, (r, l)


def mul(u: Tree, v: Tree) -> tuple[int, Tree | None]:
    """Product of two canonical monomials."""
    return _join(1, u, v)


def multidegree(t: Tree) -> Counter:
    return Counter(leaves(t))


def to_str(t: Tree) -> str:
    if isinstance(t, str):
        return t
    l = to_str(t[0])
    r = to_str(t[1])
    if not isinstance(t[0], str):
        l = f"({l})"
    if not isinstance(t[1], str):
        r = f"({r})"
    if isinstance(t[0], str) and isinstance(t[1], str) and len(t[0]) == 1 and len(t[1]) == 1:
        return l + r
    return f"{l}*{r}"


def rename(t: Tree, mapping: Mapping[str, str]) -> Tree:
    if isinstance(t, str):
        return mapping.get(t, t)
    return (rename(t[0], mapping), rename(t[1], mapping))


def _as_counter(d) -> Counter:
    if isinstance(d, Counter):
        return Counter(d)
    if isinstance(d, Mapping):
        return Counter({k: v for k, v in d.items() if v})
    return Counter(d)


def _key_of_counter(c: Counter) -> tuple:
    return tuple(sorted(c.items()))


@lru_cache(maxsize=None)
def _basis_cached(ck: tuple) -> tuple[Tree, ...]:
    c = Counter(dict(ck))
    total = sum(c.values())
    if total == 1:
        return (next(iter(c)),)
    found = set()
    # split the multiset into two nonempty parts
    items = sorted(c.items())
    def splits(i, left):
        if i == len(items):
            yield left
            return
        v, m = items[i]
        for k in range(m + 1):
            yield from splits(i + 1, left + ((v, k),) if k else left)
    for left in splits(0, ()):
        lc = Counter(dict(left))
        ln = sum(lc.values())
        if ln == 0 or ln == total:
            continue
        rc = c - lc
        for u in _basis_cached(_key_of_counter(lc)):
            for v in _basis_cached(_key_of_counter(rc)):
                s, t = mul(u, v)
                if s:
                    found.add(t)
    return tuple(sorted(found, key=key))


def monomial_basis(d) -> list[Tree]:
    """All canonical monomials of multidegree ``d``, sorted by :func:`key`.

    ``d`` is a multiset of variable names (iterable, Counter or dict).
    """
    c = _as_counter(d)
    if sum(c.values()) < 1:
        raise ValueError("multidegree must have total degree >= 1")
    return list(_basis_cached(_key_of_counter(c)))


def monomials_up_to(generators: Iterable[str], max_degree: int) -> list[Tree]:
    """Canonical monomials of degree 1..max_degree in the generators, by degree then key."""
    gens = sorted(generators)
    by_deg: dict[int, list[Tree]] = {1: list(gens)}
    for d in range(2, max_degree + 1):
        found = set()
        for k in range(1, d // 2 + 1):
            for u in by_deg[k]:
                for v in by_deg[d - k]:
                    s, t = mul(u, v)
                    if s:
                        found.add(t)
        by_deg[d] = sorted(found, key=key)
    out = []
    for d in range(1, max_degree + 1):
        out.extend(by_deg[d])
    return out


class FreeElement:
    """Finite linear combination of canonical monomials with exact coefficients."""

    __slots__ = ("terms", "field")

    def __init__(self, terms: Mapping[Tree, object] | None = None, field: Field = QQ):
        self.field = field
        self.terms: dict[Tree, object] = {}
        if terms:
            for m, c in terms.items():
                s, t = canonical(m)
                if s:
                    self._acc(t, field(c) * s)

    def _acc(self, t, c):
        v = self.terms.get(t, self.field.zero) + c
        if v:
            self.terms[t] = v
        else:
            self.terms.pop(t, None)

    @classmethod
    def var(cls, name: str, field: Field = QQ) -> "FreeElement":
        return cls({name: 1}, field)

    @classmethod
    def zero(cls, field: Field = QQ) -> "FreeElement":
        return cls({}, field)

    def copy(self) -> "FreeElement":
        out = FreeElement(field=self.field)
        out.terms = dict(self.terms)
        return out

    def __add__(self, other: "FreeElement") -> "FreeElement":
        out = self.copy()
        for t, c in other.terms.items():
            out._acc(t, c)
        return out

    def __neg__(self) -> "FreeElement":
        out = FreeElement(field=self.field)
        out.terms = {t: -c for t, c in self.terms.items()}
        return out

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        return self + (-other)

    def scale(self, a) -> "FreeElement":
        a = self.field(a)
        out = FreeElement(field=self.field)
        if a:
            out.terms = {t: a * c for t, c in self.terms.items()}
        return out

    def __rmul__(self, a) -> "FreeElement":
        return self.scale(a)

    def __mul__(self, other):
        if not isinstance(other, FreeElement):
            return self.scale(other)
        out = FreeElement(field=self.field)
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                s, t = mul(u, v)
                if s:
                    out._acc(t, a * b * s)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def variables(self) -> list[str]:
        vs = set()
        for t in self.terms:
            vs.update(leaves(t))
        return sorted(vs)

    def components(self) -> dict[tuple, "FreeElement"]:
        """Split into multihomogeneous components keyed by sorted multidegree."""
        out: dict[tuple, FreeElement] = {}
        for t, c in self.terms.items():
            k = _key_of_counter(multidegree(t))
            out.setdefault(k, FreeElement(field=self.field)).terms[t] = c
        return out

    def is_multilinear(self) -> bool:
        if not self.terms:
            return True
        comps = self.components()
        if len(comps) != 1:
            return False
        (k,) = comps
        return all(m == 1 for _, m in k)

    def rename(self, mapping: Mapping[str, str]) -> "FreeElement":
        """Rename variables; a non-injective mapping adds up colliding monomials."""
        out = FreeElement(field=self.field)
        for t, c in self.terms.items():
            s, u = canonical(rename(t, mapping))
            if s:
                out._acc(u, c * s)
        return out

    def substitute(self, mapping: Mapping[str, "FreeElement"]) -> "FreeElement":
        """Replace variables by free elements (bilinear extension)."""
        cache: dict = {}

        def ev(t):
            if t in cache:
                return cache[t]
            if isinstance(t, str):
                r = mapping[t] if t in mapping else FreeElement.var(t, self.field)
            else:
                r = ev(t[0]) * ev(t[1])
            cache[t] = r
            return r

        out = FreeElement(field=self.field)
        for t, c in self.terms.items():
            for u, a in ev(t).terms.items():
                out._acc(u, a * c)
        return out

    def coefficients(self, basis: list[Tree]) -> list:
        index = {t: i for i, t in enumerate(basis)}
        vec = [self.field.zero] * len(basis)
        for t, c in self.terms.items():
            if t not in index:
                raise ValueError(f"monomial {to_str(t)} is not in the given basis")
            vec[index[t]] = c
        return vec

    @classmethod
    def from_coefficients(cls, vec, basis: list[Tree], field: Field) -> "FreeElement":
        out = cls(field=field)
        for t, c in zip(basis, vec):
            c = field(c)
            if c:
                out.terms[t] = c
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for t in sorted(self.terms, key=key):
            c = self.terms[t]
            parts.append(f"{self.field.format(c)}*{to_str(t)}")
        return " + ".join(parts)


def polarize(f: FreeElement, var: str, fresh: list[str]) -> FreeElement:
    """Full linearization of ``f`` in ``var``: the part multilinear in ``fresh``.

    Every occurrence pattern of ``var`` is replaced by all assignments of the
    fresh names to its positions (one each), i.e. the multilinear component of
    ``f(var -> sum(fresh))``.
    """
    out = FreeElement(field=f.field)
    for t, c in f.terms.items():
        k = leaves(t).count(var)
        if k != len(fresh):
            raise ValueError(f"degree of {var} is {k}, expected {len(fresh)}")
        for perm in set(permutations(fresh)):
            it = iter(perm)

            def sub(u):
                if isinstance(u, str):
                    return next(it) if u == var else u
                l = sub(u[0])
                return (l, sub(u[1]))

            s, m = canonical(sub(t))
            if s:
                out._acc(m, c * s)
    return out
