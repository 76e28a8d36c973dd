"""Expansion, multilinearization and fixed-degree consequence checking."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field
from itertools import permutations
from typing import Iterable, Sequence, Union

from ..exactlinalg import QQ, Field, Subspace
from .monomials import FreeElement, Tree, leaves, monomial_basis, polarize, rename
from .parser import Equation, Jac, Prod, Sum, Var, parse_identity

IdentityLike = Union[str, Equation, FreeElement]


class NotHomogeneousError(ValueError):
    pass


def _expand_node(node, field: Field) -> FreeElement:
    if isinstance(node, Var):
        return FreeElement.var(node.name, field)
    if isinstance(node, Prod):
        return _expand_node(node.left, field) * _expand_node(node.right, field)
    if isinstance(node, Sum):
        out = FreeElement.zero(field)
        for c, sub in node.terms:
            out = out + _expand_node(sub, field).scale(c)
        return out
    if isinstance(node, Jac):
        x, y, z = (_expand_node(t, field) for t in (node.x, node.y, node.z))
        return (x * y) * z + (z * x) * y + (y * z) * x
    raise TypeError(f"unknown node {node!r}")


def expand(e: IdentityLike, field: Field = QQ) -> FreeElement:
    """``lhs - rhs`` as a free-algebra element in canonical form."""
    if isinstance(e, FreeElement):
        return e
    if isinstance(e, str):
        e = resolve(e)
    if isinstance(e, FreeElement):
        return e if e.field == field else FreeElement({t: c for t, c in e.terms.items()}, field)
    out = _expand_node(e.lhs, field)
    if e.rhs is not None:
        out = out - _expand_node(e.rhs, field)
    return out


def _fresh(var: str, k: int, taken: set[str]) -> list[str]:
    names = []
    i = 1
    while len(names) < k:
        cand = f"{var}_{i}"
        if cand not in taken:
            names.append(cand)
        i += 1
    return names


def multilinearize(e: IdentityLike, field: Field = QQ) -> list[FreeElement]:
    """Full linearization of every multihomogeneous component.

    Each variable of degree ``k > 1`` is replaced by ``k`` fresh variables
    ``v_1 .. v_k``.  Restitution divides by at most ``k!``, so the result is
    equivalent to the input only in characteristic 0 or > max degree.
    """
    f = expand(e, field)
    comps = f.components()
    if len({sum(m for _, m in k) for k in comps}) > 1:
        raise NotHomogeneousError("identity mixes different total degrees")
    out = []
    for k, comp in sorted(comps.items()):
        if field.p is not None and max(m for _, m in k) >= field.p:
            raise ValueError(f"polarization of degree {max(m for _, m in k)} is not invertible in {field}")
        taken = {v for v, _ in k}
        g = comp
        for v, m in k:
            if m > 1:
                fresh = _fresh(v, m, taken)
                taken.update(fresh)
                g = polarize(g, v, fresh)
        out.append(g)
    return out


# built-in identities ----------------------------------------------------

BUILTINS = {
    "lie": "J(x,y,z) = 0",
    "binary-lie": "((x*y)*x)*y = ((x*y)*y)*x",
    "malcev": "J(x,y,x*z) = J(x,y,z)*x",
    "sagle": "J(x,y,z)*w = J(w,z,x*y) + J(w,y,z*x) + J(w,x,y*z)",
    "almost-lie": "J(x,y,z)*w = 0",
    "cd": "((x*y)*a)*b - ((x*y)*b)*a - ((x*a)*b)*y + ((x*b)*a)*y + ((y*a)*b)*x - ((y*b)*a)*x = 0",
    "eq4": "J(x,y,z*w) = 0",
    "jj": "J(w*x,y,z) + J(y*z,w,x) = 0",
    "msagle": "3J(y,z,w*x) = J(x,y,z)*w - J(y,z,w)*x - 2J(z,w,x)*y + 2J(w,x,y)*z",
    # consequence of binary Lie used on the way from binary Lie + almost Lie to CD
    "binary-lie-jj": "3(J(w*x,y,z) + J(y*z,w,x)) = -J(x,y,z)*w + J(y,z,w)*x - J(z,w,x)*y + J(w,x,y)*z",
    "jj-swap": "((x*z)*w)*y + ((y*w)*z)*x = ((x*z)*y)*w + ((y*w)*x)*z",
    "sagle-tail": "J(w,z,x*y) + J(w,y,z*x) + J(w,x,y*z) = 0",
}


def resolve(name_or_text: str) -> Equation:
    """Parse a built-in name (e.g. ``"cd"``) or literal identity text."""
    text = BUILTINS.get(name_or_text.strip().lower(), name_or_text)
    return parse_identity(text)


# consequence space ------------------------------------------------------

def _placeholders(k: int) -> list[str]:
    return [f"v{i:02d}" for i in range(1, k + 1)]


def _to_placeholders(f: FreeElement) -> FreeElement:
    vs = f.variables()
    return f.rename(dict(zip(vs, _placeholders(len(vs)))))


def _span(elements: Iterable[FreeElement], basis: list[Tree], field: Field) -> Subspace:
    return Subspace.span([e.coefficients(basis) for e in elements], len(basis), field)


def _permuted(f: FreeElement, names: list[str]) -> list[FreeElement]:
    vs = f.variables()
    return [f.rename(dict(zip(vs, p))) for p in permutations(names, len(vs))] if len(vs) == len(names) else []


@dataclass
class ConsequenceSpace:
    """Span of multilinear consequences at one multilinear degree."""

    variables: list[str]
    basis: list[Tree]
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def __contains__(self, f: FreeElement) -> bool:
        return f.coefficients(self.basis) in self.space

    def vectors(self) -> list[FreeElement]:
        return [FreeElement.from_coefficients(v, self.basis, self.space.field) for v in self.space.vectors()]


def consequence_space(S: Sequence[FreeElement], variables: Sequence[str] | int,
                      field: Field = QQ) -> ConsequenceSpace:
    """Multilinear consequences of ``S`` multilinear in ``variables``.

    Generated by renamings of each ``f`` in ``S`` of full degree and, for
    lower-degree ``f``, by repeatedly multiplying by a new variable or
    replacing a variable ``v`` by ``v*t`` with ``t`` new.
    """
    if isinstance(variables, int):
        variables = _placeholders(variables)
    variables = list(variables)
    d = len(variables)
    for f in S:
        if not f.is_multilinear():
            raise ValueError("consequence_space expects multilinear identities; multilinearize first")
        if f and len(f.variables()) > d:
            raise ValueError(f"identity of degree {len(f.variables())} exceeds target degree {d}")
    field = S[0].field if S else field
    gens = [_to_placeholders(f) for f in S if f]
    lowest = min((len(f.variables()) for f in gens), default=d)
    current: list[FreeElement] = []
    space = None
    for k in range(max(lowest, 1), d + 1):
        names = _placeholders(k)
        basis = monomial_basis(names)
        cand: list[FreeElement] = []
        t = names[-1]
        for f in current:
            cand.append(f * FreeElement.var(t, field))
            for v in f.variables():
                cand.append(f.substitute({v: FreeElement.var(v, field) * FreeElement.var(t, field)}))
        cand.extend(f for f in gens if len(f.variables()) == k)
        closed = []
        for f in cand:
            closed.extend(_permuted(f, names))
        space = _span(closed, basis, field)
        current = [FreeElement.from_coefficients(v, basis, field) for v in space.vectors()]
    mapping = dict(zip(_placeholders(d), variables))
    basis = monomial_basis(variables)
    return ConsequenceSpace(variables, basis, _span((f.rename(mapping) for f in current), basis, field))


@dataclass
class ConsequenceResult:
    derivable: bool
    components: list = dc_field(default_factory=list)  # (target FreeElement, ConsequenceSpace, coords or None)

    def certificate(self) -> list[dict]:
        out = []
        for g, cs, coords in self.components:
            out.append({
                "variables": cs.variables,
                "consequence_dim": cs.dim,
                "target": g.coefficients(cs.basis),
                "coordinates": None if coords is None else list(coords),
            })
        return out

    def __bool__(self):
        return self.derivable


def check_consequence(S: Sequence[IdentityLike], g: IdentityLike, field: Field = QQ) -> ConsequenceResult:
    """Is every multilinear component of ``g`` in the consequence space of ``S`` at its degree?"""
    assumed = []
    for s in S:
        assumed.extend(f for f in multilinearize(s, field) if f)
    result = ConsequenceResult(True)
    for comp in multilinearize(g, field):
        if not comp:
            continue
        cs = consequence_space(assumed, comp.variables(), field)
        coords = cs.space.coordinates(comp.coefficients(cs.basis))
        result.components.append((comp, cs, coords))
        if coords is None:
            result.derivable = False
    return result


def is_consequence(S: Sequence[IdentityLike], g: IdentityLike, field: Field = QQ) -> bool:
    return check_consequence(S, g, field).derivable
