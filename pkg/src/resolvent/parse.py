"""Recursive-descent parser for relation expressions.

Grammar (whitespace ignored)::

    expr   := term { ("+" | "-") term }
    term   := factor { ("*" | "/") factor }
    factor := ("+" | "-") factor | atom [ "^" INT ]
    atom   := INT | NAME | "(" expr ")"

``NAME`` is a generator of the alphabet or a bound scalar parameter.  The
right operand of ``/`` must evaluate to a nonzero constant; it is inverted
in GF(p).  Exponents are non-negative integer literals.
"""

from __future__ import annotations

import re
from typing import Mapping

from .freealg import Alphabet, NcPoly
from .gfp import check_prime, inv_mod

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text[:pos]}<<here>>{text[pos:]}")
        self.message = message
        self.pos = pos


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet, p: int, params: Mapping[str, int]):
        self.text = text
        self.alphabet = alphabet
        self.p = p
        self.params = params
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
        raise ParseError(message, self.text, tok[2])

    def expect_op(self, op: str):
        tok = self.take()
        if tok != ("op", op, tok[2]):
            self.error(f"expected {op!r}", tok)

    def parse(self) -> NcPoly:
        if self.peek()[0] == "end":
            self.error("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.error("unexpected trailing input")
        return value

    def expr(self) -> NcPoly:
        value = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> NcPoly:
        value = self.factor()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op_tok = self.take()
            rhs = self.factor()
            if op_tok[1] == "*":
                value = value * rhs
            else:
                if any(rhs.terms.keys() - {()}):
                    self.error("divisor must be a scalar", op_tok)
                c = rhs.constant_term()
                if c == 0:
                    self.error("division by zero in GF(%d)" % self.p, op_tok)
                value = value.scale(inv_mod(c, self.p))
        return value

    def factor(self) -> NcPoly:
        tok = self.peek()
        if tok[:2] in (("op", "-"), ("op", "+")):
            self.take()
            inner = self.factor()
            return -inner if tok[1] == "-" else inner
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            exp_tok = self.take()
            if exp_tok[0] != "int":
                self.error("exponent must be a non-negative integer", exp_tok)
            base = base ** exp_tok[1]
        return base

    def atom(self) -> NcPoly:
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            return NcPoly.constant(val, self.alphabet, self.p)
        if kind == "name":
            if val in self.alphabet:
                return NcPoly.monomial((self.alphabet.index(val),), self.alphabet, self.p)
            if val in self.params:
                return NcPoly.constant(int(self.params[val]), self.alphabet, self.p)
            self.error(f"unknown name {val!r}", tok)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            self.expect_op(")")
            return inner
        self.error("expected a number, name or '('", tok)


def parse_poly(text: str, alphabet: Alphabet, p: int, params: Mapping[str, int] | None = None) -> NcPoly:
    """Parse ``text`` into a polynomial over GF(p) in the generators of ``alphabet``."""
    check_prime(p)
    params = dict(params or {})
    clash = set(params) & set(alphabet.names)
    if clash:
        raise ValueError(f"parameter names shadow generators: {sorted(clash)}")
    return _Parser(text, alphabet, p, params).parse()
