"""Variety membership by evaluating multilinearized identities on basis tuples."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from functools import lru_cache, reduce
from math import lcm

import numpy as np

from .algebra import Algebra
from .exactlinalg import Field
from .identities.engine import BUILTINS, multilinearize, resolve
from .identities.monomials import FreeElement, Tree


class Variety(enum.Enum):
    LIE = "lie"
    BINARY_LIE = "binary-lie"
    MALCEV = "malcev"
    SAGLE = "sagle"
    ALMOST_LIE = "almost-lie"
    CD = "cd"
    EQ4 = "eq4"
    JJ = "jj"
    MSAGLE = "msagle"

    @property
    def identity(self) -> str:
        return BUILTINS[self.value]

    @property
    def label(self) -> str:
        return _LABELS[self]

    @classmethod
    def parse(cls, name: "str | Variety") -> "Variety":
        if isinstance(name, Variety):
            return name
        key = name.strip().lower().replace("_", "-")
        for v in cls:
            if key in (v.value, v.label.lower(), v.name.lower().replace("_", "-")):
                return v
        raise KeyError(f"unknown variety {name!r}")


_LABELS = {
    Variety.LIE: "Lie", Variety.BINARY_LIE: "BinaryLie", Variety.MALCEV: "Malcev",
    Variety.SAGLE: "Sagle", Variety.ALMOST_LIE: "AlmostLie", Variety.CD: "CD",
    Variety.EQ4: "Eq4", Variety.JJ: "JJ", Variety.MSAGLE: "MSagle",
}

# (premise, conclusion) pairs that must hold on every algebra
INCLUSIONS = [
    (Variety.CD, Variety.BINARY_LIE),
    (Variety.CD, Variety.ALMOST_LIE),
    (Variety.MALCEV, Variety.BINARY_LIE),
    (Variety.LIE, Variety.SAGLE),
] + [(Variety.LIE, v) for v in Variety if v is not Variety.LIE]


class InconsistencyError(AssertionError):
    """A variety inclusion failed: always a bug, never a property of the input."""


@dataclass(frozen=True)
class Witness:
    variables: tuple[str, ...]
    indices: tuple[int, ...]  # 0-based basis indices, one per variable
    value: tuple

    def as_dict(self, field: Field) -> dict:
        return {
            "variables": list(self.variables),
            "basis": [i + 1 for i in self.indices],
            "value": [field.format(x) for x in self.value],
        }

    def describe(self, names=None) -> str:
        names = names or [f"e{i + 1}" for i in range(max(self.indices, default=0) + 1)]
        assign = ", ".join(f"{v}={names[i]}" for v, i in zip(self.variables, self.indices))
        return assign


# evaluation -------------------------------------------------------------

def evaluate(f: FreeElement, A: Algebra, assignment: dict) -> np.ndarray:
    """Exact value of ``f`` with each variable replaced by an element of ``A``."""
    cache: dict = {}

    def ev(t: Tree):
        if t in cache:
            return cache[t]
        if isinstance(t, str):
            r = A.element(assignment[t])
        else:
            r = A.multiply(ev(t[0]), ev(t[1]))
        cache[t] = r
        return r

    out = A.zero()
    for t, coef in f.terms.items():
        out = out + coef * ev(t)
    return out


def _int_tensor(A: Algebra, f: FreeElement):
    """Integer structure tensor, integer coefficients, modulus and dtype."""
    field = A.field
    entries = list(A.c.reshape(-1))
    coefs = list(f.terms.values())
    if field.p is not None:
        C = [int(x) for x in entries]
        K = {t: int(c) for t, c in f.terms.items()}
        modulus, bound, kb = field.p, field.p, field.p
    else:
        den = reduce(lcm, (x.denominator for x in entries), 1)
        cden = reduce(lcm, (c.denominator for c in coefs), 1)
        C = [int(x * den) for x in entries]
        K = {t: int(c * cden) for t, c in f.terms.items()}
        modulus = None
        bound = max((abs(x) for x in C), default=1) or 1
        kb = max((abs(x) for x in K.values()), default=1) or 1
    d = len(f.variables())
    n = max(A.dim, 1)
    worst = kb * len(K) * bound ** max(d - 1, 1) * n ** max(d - 1, 1)
    dtype = np.int64 if worst < 2 ** 62 else object
    c = np.array(C, dtype=dtype).reshape(A.c.shape)
    return c, K, modulus, dtype


def _monomial_tensor(t: Tree, c: np.ndarray, labels: dict, n: int, cache: dict):
    """Tensor of monomial ``t`` over basis tuples; returns (array, leaf labels)."""
    if t in cache:
        return cache[t]
    if isinstance(t, str):
        res = (np.eye(n, dtype=c.dtype), [labels[t]])
    else:
        L, ll = _monomial_tensor(t[0], c, labels, n, cache)
        R, rl = _monomial_tensor(t[1], c, labels, n, cache)
        arr = np.einsum(L, ll + [40], R, rl + [41], c, [40, 41, 42], ll + rl + [42], optimize=True)
        res = (arr, ll + rl)
    cache[t] = res
    return res


def identity_tensor(f: FreeElement, A: Algebra):
    """Integer-scaled values of multilinear ``f`` on all basis tuples.

    Axes follow ``f.variables()`` (sorted), then the output coordinate.
    Returns ``(tensor, modulus)``; zero entries are exactly the vanishing tuples.
    """
    variables = f.variables()
    labels = {v: i for i, v in enumerate(variables)}
    n = A.dim
    c, K, modulus, dtype = _int_tensor(A, f)
    total = np.zeros((n,) * len(variables) + (n,), dtype=dtype)
    cache: dict = {}
    for t, k in K.items():
        arr, ll = _monomial_tensor(t, c, labels, n, cache)
        total = total + k * np.einsum(arr, ll + [42], list(range(len(variables))) + [42])
    if modulus is not None:
        total = total % modulus
    return total, modulus


@lru_cache(maxsize=None)
def _components(text: str, field: Field) -> tuple:
    return tuple(g for g in multilinearize(resolve(text), field) if g)


def _components_for(identity, field: Field) -> tuple:
    if isinstance(identity, Variety):
        return _components(identity.identity, field)
    if isinstance(identity, FreeElement):
        return tuple(g for g in multilinearize(identity, field) if g)
    try:
        return _components(Variety.parse(identity).identity, field)
    except KeyError:
        return _components(identity, field)


def satisfies(A: Algebra, identity) -> tuple[bool, Witness | None]:
    """Does ``A`` satisfy the identity (a :class:`Variety`, built-in name or identity text)?

    The identity is replaced by its full multilinearization.  On failure the
    witness is the lexicographically first basis tuple (variables in sorted
    order) of the first failing component, with its exact value.
    """
    for g in _components_for(identity, A.field):
        if A.dim == 0:
            continue
        T, _ = identity_tensor(g, A)
        nz = np.nonzero((T != 0).any(axis=-1))
        if len(nz[0]):
            idx = tuple(int(a[0]) for a in nz)
            variables = tuple(g.variables())
            value = evaluate(g, A, {v: A.basis(i) for v, i in zip(variables, idx)})
            if not any(value):
                raise InconsistencyError("vectorized and exact evaluation disagree")
            return False, Witness(variables, idx, tuple(value))
    return True, None


def holds(A: Algebra, identity) -> bool:
    return satisfies(A, identity)[0]


def is_lie(A: Algebra) -> bool:
    return holds(A, Variety.LIE)


def is_cd(A: Algebra) -> bool:
    return holds(A, Variety.CD)


@dataclass
class VarietyReport:
    algebra: str
    field: Field
    results: dict = dc_field(default_factory=dict)  # Variety -> bool
    witnesses: dict = dc_field(default_factory=dict)  # Variety -> Witness

    def __getitem__(self, v) -> bool:
        return self.results[Variety.parse(v)]

    def as_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "field": str(self.field),
            "varieties": {v.label: self.results[v] for v in Variety},
            "witnesses": {v.label: self.witnesses[v].as_dict(self.field)
                          for v in Variety if v in self.witnesses},
        }

    def text(self, basis_names=None) -> str:
        lines = [f"{self.algebra} over {self.field}"]
        for v in Variety:
            ok = self.results[v]
            line = f"  {v.label:<10} {'yes' if ok else 'no'}"
            if not ok:
                w = self.witnesses[v]
                vals = ", ".join(self.field.format(x) for x in w.value)
                line += f"   fails at {w.describe(basis_names)} -> ({vals})"
            lines.append(line)
        return "\n".join(lines)


def variety_report(A: Algebra) -> VarietyReport:
    rep = VarietyReport(A.name or "algebra", A.field)
    for v in Variety:
        ok, w = satisfies(A, v)
        rep.results[v] = ok
        if w is not None:
            rep.witnesses[v] = w
    for p, q in INCLUSIONS:
        if rep.results[p] and not rep.results[q]:
            raise InconsistencyError(f"{p.label} holds but {q.label} fails on {rep.algebra}")
    return rep
