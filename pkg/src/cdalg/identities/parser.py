"""Recursive-descent parser for nonassociative identity expressions.

Grammar (whitespace ignored)::

    identity := expr ['=' expr]
    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := [coeff ['*']] factor [['*'] factor]
    factor   := var | '(' expr ')' | 'J(' expr ',' expr ',' expr ')'
    coeff    := int ['/' int]
    var      := letter [digits | '_' digits]

Juxtaposition is multiplication, so ``xy`` is ``x*y``.  A term holds at most
two factors: ``x*y*z`` is rejected because the product is not associative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class IdentitySyntaxError(ValueError):
    def __init__(self, msg: str, pos: int, text: str = ""):
        super().__init__(f"{msg} at position {pos}" + (f": {text!r}" if text else ""))
        self.pos = pos


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Prod:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Jac:
    x: "Node"
    y: "Node"
    z: "Node"


@dataclass(frozen=True)
class Sum:
    terms: tuple  # of (Fraction, Node)


@dataclass(frozen=True)
class Equation:
    lhs: "Node"
    rhs: "Node | None" = None


Node = Union[Var, Prod, Jac, Sum]


@dataclass
class _Tok:
    kind: str  # num var jac op end
    value: object
    pos: int


def tokenize(text: str) -> list[_Tok]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("num", int(text[i:j]), i))
            i = j
        elif ch == "J" and i + 1 < n and text[i + 1] == "(":
            toks.append(_Tok("jac", "J", i))
            i += 1
        elif ch.isalpha():
            j = i + 1
            if j < n and text[j] == "_" and j + 1 < n and text[j + 1].isdigit():
                j += 1
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("var", text[i:j], i))
            i = j
        elif ch in "+-*/()=,":
            toks.append(_Tok("op", ch, i))
            i += 1
        else:
            raise IdentitySyntaxError(f"unexpected character {ch!r}", i, text)
    toks.append(_Tok("end", None, n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def at(self, kind, value=None) -> bool:
        t = self.peek()
        return t.kind == kind and (value is None or t.value == value)

    def expect(self, value):
        t = self.take()
        if t.kind != "op" or t.value != value:
            raise IdentitySyntaxError(f"expected {value!r}", t.pos, self.text)
        return t

    def error(self, msg):
        raise IdentitySyntaxError(msg, self.peek().pos, self.text)

    def identity(self) -> Equation:
        lhs = self.expr()
        rhs = None
        if self.at("op", "="):
            self.take()
            rhs = self.expr()
        if not self.at("end"):
            self.error("unexpected token")
        return Equation(lhs, rhs)

    def expr(self) -> Node:
        terms = []
        sign = 1
        if self.at("op", "+") or self.at("op", "-"):
            sign = -1 if self.take().value == "-" else 1
        c, node = self.term()
        terms.append((sign * c, node))
        while self.at("op", "+") or self.at("op", "-"):
            sign = -1 if self.take().value == "-" else 1
            c, node = self.term()
            terms.append((sign * c, node))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def _starts_factor(self) -> bool:
        t = self.peek()
        return t.kind in ("var", "jac") or (t.kind == "op" and t.value == "(")

    def term(self) -> tuple[Fraction, Node]:
        coeff = Fraction(1)
        if self.at("num"):
            num = self.take().value
            den = 1
            if self.at("op", "/"):
                self.take()
                if not self.at("num"):
                    self.error("expected denominator")
                den = self.take().value
                if den == 0:
                    self.error("zero denominator")
            coeff = Fraction(num, den)
            if self.at("op", "*"):
                self.take()
        if not self._starts_factor():
            if coeff == 0:
                return coeff, Sum(())
            self.error("expected a variable, '(' or J(")
        left = self.factor()
        if self.at("op", "*") or self._starts_factor():
            if self.at("op", "*"):
                self.take()
            if not self._starts_factor():
                self.error("expected a factor after '*'")
            right = self.factor()
            left = Prod(left, right)
            if self.at("op", "*") or self._starts_factor():
                self.error("product of three or more factors needs explicit parentheses")
        return coeff, left

    def factor(self) -> Node:
        t = self.take()
        if t.kind == "var":
            return Var(t.value)
        if t.kind == "jac":
            self.expect("(")
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect(",")
            c = self.expr()
            self.expect(")")
            return Jac(a, b, c)
        if t.kind == "op" and t.value == "(":
            e = self.expr()
            self.expect(")")
            return e
        raise IdentitySyntaxError("expected a factor", t.pos, self.text)


def parse_identity(text: str) -> Equation:
    """Parse ``text`` into an :class:`Equation` (``rhs`` is None for ``f = 0`` written as ``f``)."""
    return _Parser(text).identity()
