"""Recursive-descent parser for the polynomial input grammar.

Grammar (whitespace-insensitive)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := INT | VAR | "(" expr ")"
    VAR    := "z" INT

Division is only allowed by a nonzero constant, which is how rational
coefficients such as ``3/4*z0`` are written.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Tuple

from .polynomial import Polynomial

_TOKEN = re.compile(
    r"\s*(?:(?P<dec>\d+\.\d*|\.\d+)|(?P<int>\d+)|(?P<var>z\d+)|(?P<op>[-+*/^()])|(?P<bad>\S))"
)


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        kind = m.lastgroup
        if kind is None:
            break
        start = m.start(kind)
        if kind == "bad":
            raise PolynomialSyntaxError(f"unexpected character {m.group(kind)!r}", start, text)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.text = text
        self.nvars = nvars
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok=None):
        tok = tok or self.peek()
        raise PolynomialSyntaxError(message, tok[2], self.text)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.error("empty expression")
        result = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return result

    def expr(self) -> Polynomial:
        acc = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Polynomial:
        acc = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op_tok = self.take()
            rhs = self.unary()
            if op_tok[1] == "*":
                acc = acc * rhs
            else:
                if not rhs.is_zero() and set(rhs.terms) == {(0,) * self.nvars}:
                    acc = acc.scale(1 / rhs.terms[(0,) * self.nvars])
                elif rhs.is_zero():
                    self.error("division by zero", op_tok)
                else:
                    self.error("division is only allowed by a constant", op_tok)
        return acc

    def unary(self) -> Polynomial:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            inner = self.unary()
            return -inner if tok[1] == "-" else inner
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                self.error("exponent must be a non-negative integer")
            self.take()
            return base ** int(tok[1])
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, value, pos = tok
        if kind == "int":
            return Polynomial.constant(Fraction(int(value)), self.nvars)
        if kind == "dec":
            self.error("decimal numbers are not allowed; write rationals as p/q", tok)
        if kind == "var":
            index = int(value[1:])
            if index >= self.nvars:
                raise PolynomialSyntaxError(
                    f"variable {value} out of range for {self.nvars} variables", pos, self.text
                )
            return Polynomial.variable(index, self.nvars)
        if kind == "op" and value == "(":
            inner = self.expr()
            if self.peek()[1] != ")":
                self.error("expected ')'")
            self.take()
            return inner
        if kind == "end":
            self.error("unexpected end of input", tok)
        self.error(f"unexpected token {value!r}", tok)


def parse_polynomial(text: str, nvars: int) -> Polynomial:
    """Parse ``text`` into a :class:`Polynomial` in ``nvars`` variables.

    >>> str(parse_polynomial("z0*z2 - z1^2", 3))
    'z0*z2 - z1^2'
    """
    if nvars < 1:
        raise ValueError("nvars must be positive")
    return _Parser(text, nvars).parse()
