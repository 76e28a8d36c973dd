"""Command-line front end and the algebra text format.

Algebra files look like::

    field Q
    dim 6
    1 2 -> 1*4
    1 3 -> 1*5
    2 3 -> 1*6
    4 5 -> 1*6

Product lines ``i j -> c1*k1 + c2*k2`` (1-based, ``i < j``) give
``e_i e_j = c1 e_k1 + c2 e_k2``; unlisted pairs multiply to zero.  Blank lines
and ``#`` comments are ignored.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import catalog
from .algebra import Algebra
from .cohomology import (
    THEORIES, CocycleFormatError, TheoryError, adjoint_module, central_extension, cohomology,
    parse_cocycle, square_zero_extension, trivial_module,
)
from .exactlinalg import Field, QQ
from .identities.engine import BUILTINS, check_consequence
from .identities.monomials import to_str
from .identities.parser import IdentitySyntaxError
from .operators import summary
from .varieties import variety_report


class AlgebraFileError(ValueError):
    def __init__(self, msg: str, lineno: int | None = None):
        super().__init__(f"line {lineno}: {msg}" if lineno else msg)
        self.lineno = lineno


class UsageError(Exception):
    pass


# algebra files ----------------------------------------------------------

_PRODUCT = re.compile(r"^(\d+)\s+(\d+)\s*->\s*(.*)$")
_TERM = re.compile(r"^([+-]?[^*\s]+)\s*\*\s*(\d+)$")


def _split_terms(rhs: str) -> list[str]:
    """Split ``c1*k1 + c2*k2 - c3*k3`` into signed term strings."""
    parts = re.split(r"\s+([+-])\s+", rhs.strip())
    terms = [parts[0]]
    for sign, term in zip(parts[1::2], parts[2::2]):
        terms.append(term if sign == "+" else (term[1:] if term.startswith("-") else "-" + term))
    return terms


def loads(text: str, name: str | None = None) -> Algebra:
    field: Field | None = None
    dim: int | None = None
    seen: set = set()
    table: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("field"):
            if field is not None:
                raise AlgebraFileError("duplicate field line", lineno)
            try:
                field = Field.parse(line[len("field"):].strip())
            except ValueError as exc:
                raise AlgebraFileError(str(exc), lineno) from None
            continue
        if line.startswith("dim"):
            if field is None:
                raise AlgebraFileError("'dim' before 'field'", lineno)
            if dim is not None:
                raise AlgebraFileError("duplicate dim line", lineno)
            try:
                dim = int(line[len("dim"):].strip())
            except ValueError:
                raise AlgebraFileError("dim must be an integer", lineno) from None
            if dim < 0:
                raise AlgebraFileError("dim must be nonnegative", lineno)
            continue
        m = _PRODUCT.match(line)
        if not m:
            raise AlgebraFileError(f"cannot parse {line!r}", lineno)
        if field is None or dim is None:
            raise AlgebraFileError("product line before 'field' and 'dim'", lineno)
        i, j = int(m.group(1)), int(m.group(2))
        if i >= j:
            raise AlgebraFileError(f"pair {i} {j}: need i < j", lineno)
        if not (1 <= i and j <= dim):
            raise AlgebraFileError(f"index out of range 1..{dim}", lineno)
        if (i, j) in seen:
            raise AlgebraFileError(f"duplicate pair {i} {j}", lineno)
        seen.add((i, j))
        row: dict = {}
        for term in _split_terms(m.group(3)):
            t = _TERM.match(term.strip())
            if not t:
                raise AlgebraFileError(f"bad term {term!r}", lineno)
            k = int(t.group(2))
            if not 1 <= k <= dim:
                raise AlgebraFileError(f"index out of range 1..{dim}", lineno)
            try:
                coeff = field(t.group(1))
            except (ValueError, ZeroDivisionError) as exc:
                raise AlgebraFileError(f"bad scalar {t.group(1)!r}: {exc}", lineno) from None
            row[k] = row.get(k, field.zero) + coeff
        table[(i, j)] = row
    if field is None or dim is None:
        raise AlgebraFileError("missing 'field' or 'dim' header")
    return Algebra.from_products(field, dim, table, name=name)


def load(path) -> Algebra:
    path = Path(path)
    return loads(path.read_text(), name=path.stem)


def dumps(A: Algebra) -> str:
    """Canonical text: sorted pairs and terms, scalars in lowest terms, zero terms dropped."""
    f = A.field
    lines = [f"field {f}", f"dim {A.dim}"]
    for (i, j), row in sorted(A.products().items()):
        terms = []
        for k, c in sorted(row.items()):
            if not c:
                continue
            s = f.format(c)
            if terms and s.startswith("-"):
                terms.append(f"- {s[1:]}*{k}")
            elif terms:
                terms.append(f"+ {s}*{k}")
            else:
                terms.append(f"{s}*{k}")
        if terms:
            lines.append(f"{i} {j} -> {' '.join(terms)}")
    return "\n".join(lines) + "\n"


def save(A: Algebra, path) -> None:
    Path(path).write_text(dumps(A))


# helpers ----------------------------------------------------------------

def _field(args) -> Field:
    try:
        return Field.parse(args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _algebra(args) -> Algebra:
    spec = args.algebra
    if Path(spec).is_file():
        A = load(spec)
        if args.field is not None and Field.parse(args.field) != A.field:
            A = A.with_field(Field.parse(args.field))
        return A
    params = {}
    for key, attr in (("alpha", "alpha"), ("n", "n"), ("generators", "generators"), ("nil_class", "nil_class")):
        v = getattr(args, attr, None)
        if v is not None:
            params[key] = v
    field = _field(args) if args.field else QQ
    try:
        return catalog.build(spec, field, **params)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    except TypeError as exc:
        raise UsageError(str(exc)) from None


def _print_json(doc) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


# commands ---------------------------------------------------------------

def cmd_catalog(args) -> int:
    for name, (builder, defaults) in sorted(catalog.CATALOG.items()):
        params = " ".join(f"--{k.replace('nil_class', 'class')} {v}" for k, v in defaults.items())
        doc = (builder.__doc__ or "").strip().splitlines()
        print(f"{name:<12} {params:<28} {doc[0] if doc else ''}".rstrip())
    return 0


def cmd_check(args) -> int:
    A = _algebra(args)
    rep = variety_report(A)
    if args.json:
        _print_json(rep.as_dict())
    else:
        print(rep.text(A.basis_names))
    return 0


def cmd_ops(args) -> int:
    A = _algebra(args)
    s = summary(A)
    if args.json:
        _print_json({"algebra": A.name, "field": str(A.field), "dims": s.as_dict()})
        return 0
    d = s.as_dict()
    print(f"{A.name} over {A.field}")
    for key in ("Z", "LZ", "Der", "R", "M", "Inner", "R_cap_Der", "LZ_mod_Z"):
        print(f"  {key:<10} {d[key]}")
    print(f"  dim LZ/Z = dim R∩Der: {'yes' if s.lemma_jz else 'NO'}")
    return 0


def _module(A: Algebra, coeff: str, m: int = 1):
    if coeff == "trivial":
        return trivial_module(A, m)
    if coeff == "adjoint":
        return adjoint_module(A)
    raise UsageError(f"unknown coefficients {coeff!r}")


def cmd_cohomology(args) -> int:
    A = _algebra(args)
    M = _module(A, args.coeff)
    dims = cohomology(args.theory, A, M, args.degree)
    if args.json:
        _print_json({"algebra": A.name, "field": str(A.field), "theory": args.theory,
                     "coefficients": args.coeff, "degree": args.degree, "dims": dims.as_dict()})
    else:
        print(f"{A.name} {args.theory} H^{args.degree} ({args.coeff} coefficients, {A.field}): "
              f"C={dims.C} Z={dims.Z} B={dims.B} H={dims.H}")
        if not dims.is_complex:
            print(f"  note: only {dims.ZB} of {dims.B} coboundary dimensions are cocycles")
    return 0


def cmd_extend(args) -> int:
    A = _algebra(args)
    text = Path(args.cocycle).read_text()
    widths = {len(line.split("#", 1)[0].split()) for line in text.splitlines() if line.split("#", 1)[0].strip()}
    if widths <= {3}:
        phi = parse_cocycle(text, A.dim, A.field, 1)
        E = central_extension(A, phi, name=f"{A.name}_ext")
    elif widths == {4}:
        if args.coeff == "adjoint":
            M = adjoint_module(A)
        else:
            ks = [int(line.split()[2]) for line in text.splitlines() if line.split("#", 1)[0].strip()]
            M = trivial_module(A, max(ks))
        phi = parse_cocycle(text, A.dim, A.field, M.dim)
        E = square_zero_extension(A, M, phi, name=f"{A.name}_ext")
    else:
        raise CocycleFormatError("cocycle lines must all be 'i j value' or all 'i j k value'")
    if args.out:
        save(E, args.out)
    rep = variety_report(E)
    if args.json:
        _print_json(rep.as_dict())
    else:
        print(rep.text(None))
    return 0


def _identity_arg(token: str) -> str:
    token = token.strip()
    if token.lower() in BUILTINS:
        return token.lower()
    p = Path(token)
    if p.is_file():
        return p.read_text().strip()
    return token


def cmd_consequence(args) -> int:
    field = _field(args) if args.field else QQ
    assume = [_identity_arg(t) for t in args.assume.split(",") if t.strip()]
    target = _identity_arg(args.target)
    res = check_consequence(assume, target, field)
    cert = res.certificate()
    if args.json:
        _print_json({"assume": assume, "target": target, "derivable": res.derivable, "certificate": [
            {**c, "target": [field.format(x) for x in c["target"]],
             "coordinates": None if c["coordinates"] is None else [field.format(x) for x in c["coordinates"]]}
            for c in cert]})
        return 0
    print("derivable" if res.derivable else "not derivable at this degree")
    for g, cs, coords in res.components:
        print(f"  component in {', '.join(cs.variables)}: consequence space dim {cs.dim} of {len(cs.basis)}")
        if coords is not None:
            nz = [(cs.space.pivots[k], c) for k, c in enumerate(coords) if c]
            shown = " ".join(f"{'-' if field.format(c).startswith('-') else '+'} "
                             f"{field.format(c).lstrip('-')}*[{to_str(cs.basis[p])}]" for p, c in nz)
            print(f"    coordinates over the echelon basis (pivot monomial): {shown or '0'}")
    return 0


def cmd_free(args) -> int:
    field = _field(args) if args.field else QQ
    A = catalog.free_anticommutative(args.generators, args.nil_class, field)
    text = dumps(A)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cdalg", description="Exact workbench for anticommutative algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def algebra_args(sp):
        sp.add_argument("algebra", help="catalog name or algebra file")
        sp.add_argument("--field", default=None, help="Q or GF(p), p >= 5")
        sp.add_argument("--alpha", default=None, help="parameter of b61")
        sp.add_argument("--n", type=int, default=None, help="dimension of abelian")
        sp.add_argument("--generators", type=int, default=None, help="generators of free")
        sp.add_argument("--class", dest="nil_class", type=int, default=None, help="nilpotency class of free")
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sub.add_parser("catalog", help="list catalog algebras").set_defaults(func=cmd_catalog)

    sp = sub.add_parser("check", help="variety report")
    algebra_args(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("ops", help="operator dimensions")
    algebra_args(sp)
    sp.set_defaults(func=cmd_ops)

    sp = sub.add_parser("cohomology", help="Z/B/H dimensions")
    algebra_args(sp)
    sp.add_argument("--theory", choices=THEORIES, default="cd")
    sp.add_argument("--coeff", choices=("trivial", "adjoint"), default="trivial")
    sp.add_argument("--degree", type=int, default=2)
    sp.set_defaults(func=cmd_cohomology)

    sp = sub.add_parser("extend", help="extension by a cocycle, then check")
    algebra_args(sp)
    sp.add_argument("--cocycle", required=True, help="file of 'i j value' or 'i j k value' lines")
    sp.add_argument("--coeff", choices=("trivial", "adjoint"), default="trivial")
    sp.add_argument("--out", default=None, help="write the extension here")
    sp.set_defaults(func=cmd_extend)

    sp = sub.add_parser("consequence", help="fixed-degree identity implication")
    sp.add_argument("--assume", required=True, help="comma-separated names or files")
    sp.add_argument("--target", required=True, help="name, file or identity text")
    sp.add_argument("--field", default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_consequence)

    sp = sub.add_parser("free", help="free nilpotent anticommutative algebra as a file")
    sp.add_argument("--generators", type=int, required=True)
    sp.add_argument("--class", dest="nil_class", type=int, required=True)
    sp.add_argument("--field", default=None)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_free)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cdalg: error: {exc}", file=sys.stderr)
        return 2
    except (AlgebraFileError, CocycleFormatError, TheoryError, IdentitySyntaxError, ValueError, OSError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"cdalg: error: {msg}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
