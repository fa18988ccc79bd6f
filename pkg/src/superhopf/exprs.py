"""Parser for the element expression language.

Grammar (whitespace insignificant)::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := primary ('^' nat)*
    primary := rational | ident | '(' expr ')'
    rational:= nat ['/' nat]

Identifiers are generator names of the target presentation.  A leading
sign is accepted so printed elements parse back exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import AlgebraPresentation, Element
from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
                    r"|(?P<op>[-+*^()/]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}",
                             len(text) - len(stripped))
        if m.lastgroup == "num":
            tokens.append(("num", m.group("num"), m.start("num")))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, alg: AlgebraPresentation):
        self.text = text
        self.alg = alg
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse(self) -> Element:
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", pos)
        return value

    def expr(self) -> Element:
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.next()
            negate = val == "-"
        value = self.term()
        if negate:
            value = -value
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.term()
                value = value - rhs if val == "-" else value + rhs
            else:
                return value

    def term(self) -> Element:
        value = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.next()
                value = value * self.factor()
            else:
                return value

    def factor(self) -> Element:
        value = self.primary()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "^":
                self.next()
                kind, val, pos = self.next()
                if kind != "num":
                    raise ParseError("exponent must be a non-negative integer", pos)
                value = value ** int(val)
            else:
                return value

    def primary(self) -> Element:
        kind, val, pos = self.next()
        if kind == "num":
            num = int(val)
            k, v, _ = self.peek()
            if k == "op" and v == "/":
                self.next()
                k, v, p = self.next()
                if k != "num":
                    raise ParseError("denominator must be an integer", p)
                return self.alg.scalar(Fraction(num, int(v)))
            return self.alg.scalar(num)
        if kind == "name":
            return self.alg.gen(val)
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError(f"unexpected token {val!r}" if val else "unexpected end of input",
                         pos)


def parse(text: str, alg: AlgebraPresentation) -> Element:
    """Parse an expression into a normal-form element of ``alg``."""
    return _Parser(text, alg).parse()


def parse_list(text: str, alg: AlgebraPresentation):
    """Parse a comma-separated list of expressions."""
    parts = [p for p in text.split(",") if p.strip()]
    return [parse(p, alg) for p in parts]


def parse_linear_combination(text: str, names):
    """Parse ``3*a - 1/2*b`` into {name: Fraction} over the given names.

    Used by the algebra definition file format, where bracket right-hand
    sides are linear in the basis names.
    """
    coeffs = {name: Fraction(0) for name in names}
    tokens = _tokenize(text)
    i = 0

    def next_tok():
        nonlocal i
        tok = tokens[i]
        i += 1
        return tok

    def peek():
        return tokens[i]

    first = True
    while True:
        kind, val, pos = peek()
        if kind == "end":
            if first:
                raise ParseError("empty expression", pos)
            break
        sign = Fraction(1)
        if kind == "op" and val in "+-":
            next_tok()
            sign = Fraction(-1) if val == "-" else Fraction(1)
        elif not first:
            raise ParseError(f"expected '+' or '-', got {val!r}", pos)
        coeff = Fraction(1)
        kind, val, pos = peek()
        if kind == "num":
            next_tok()
            coeff = Fraction(int(val))
            kind, val, pos = peek()
            if kind == "op" and val == "/":
                next_tok()
                kind, val, pos = next_tok()
                if kind != "num":
                    raise ParseError("denominator must be an integer", pos)
                coeff /= int(val)
                kind, val, pos = peek()
            if kind == "op" and val == "*":
                next_tok()
                kind, val, pos = peek()
        if kind == "name":
            next_tok()
            if val not in coeffs:
                raise ParseError(f"unknown basis name {val!r}", pos)
            coeffs[val] += sign * coeff
        elif coeff == 0:
            pass  # a bare 0 term
        else:
            raise ParseError("expected a basis name", pos)
        first = False
    return {k: v for k, v in coeffs.items() if v}
