"""Literal grammar shared by family files and command-line flags.

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" ["+" | "-"] INT)?
    atom   := INT | "t" | "x" | "(" expr ")"

``t`` is the field generator (in rational mode it stands for the fixed value
of t), ``x`` is the polynomial variable.  Division is only allowed by
x-free quantities, and negative exponents only on x-free bases.
"""

from __future__ import annotations

import re

from semiclassical.poly import Poly
from semiclassical.scalar import QContext

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


class ParseError(ValueError):
    """Malformed literal; ``position`` is the character offset of the problem."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.position = position


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: QContext, allow_x: bool):
        self.text = text
        self.ctx = ctx
        self.allow_x = allow_x
        self.tokens = _tokenize(text)
        self.i = 0

    def error(self, message: str, pos: int | None = None):
        if pos is None:
            pos = self.tokens[self.i][2]
        raise ParseError(message, self.text, pos)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, op: str) -> bool:
        kind, val, _ = self.peek()
        if kind == "op" and val == op:
            self.i += 1
            return True
        return False

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            self.error("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self) -> Poly:
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> Poly:
        value = self.unary()
        while True:
            if self.accept("*"):
                value = value * self.unary()
            elif self.accept("/"):
                pos = self.peek()[2]
                divisor = self.unary()
                value = self._divide(value, divisor, pos)
            else:
                return value

    def _divide(self, value: Poly, divisor: Poly, pos: int) -> Poly:
        if divisor.degree > 0:
            self.error("division by a polynomial in x", pos)
        if divisor.is_zero():
            self.error("division by zero", pos)
        return value / divisor.coeffs[0]

    def unary(self) -> Poly:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        pos = self.peek()[2]
        base = self.atom()
        if not self.accept("^"):
            return base
        sign = 1
        if self.accept("-"):
            sign = -1
        elif self.accept("+"):
            pass
        kind, val, epos = self.take()
        if kind != "int":
            self.error("exponent must be an integer", epos)
        k = sign * val
        if k >= 0:
            return base ** k
        if base.degree > 0:
            self.error("negative power of a polynomial in x", pos)
        if base.is_zero():
            self.error("division by zero", pos)
        return Poly((base.coeffs[0] ** k,))

    def atom(self) -> Poly:
        kind, val, pos = self.take()
        ctx = self.ctx
        if kind == "int":
            return Poly((ctx.scalar(val),))
        if kind == "name":
            if val == "t":
                return Poly((ctx.t,))
            if val == "x":
                if not self.allow_x:
                    self.error("'x' is not allowed in a scalar", pos)
                return Poly((ctx.zero, ctx.one))
            self.error(f"unknown name {val!r}", pos)
        if kind == "op" and val == "(":
            value = self.expr()
            if not self.accept(")"):
                self.error("expected ')'")
            return value
        if kind == "end":
            self.error("unexpected end of input", pos)
        self.error(f"unexpected {val!r}", pos)


def parse_scalar(text: str, ctx: QContext):
    """Parse a field element; the result is canonical for the context's mode."""
    value = _Parser(str(text), ctx, allow_x=False).parse()
    return value.coeffs[0] if value.coeffs else ctx.zero


def parse_poly(text: str, ctx: QContext) -> Poly:
    """Parse a polynomial in x with coefficients in the context's field."""
    return _Parser(str(text), ctx, allow_x=True).parse()
